import math

import numpy as np
import pytest

from featsel.core.pareto import (
    ObjectiveVector,
    crowding_distance,
    dominates,
    domination_matrix,
    front_ranks,
    non_dominated_sort,
    rank_population,
    survive,
)
from featsel.core.utils.helpers import make_rng
from tests.oracles import naive_dominates, naive_fronts


def test_dominates_examples():
    assert dominates((0.2, 0.1), (0.3, 0.5))
    assert not dominates((0.2, 0.1), (0.2, 0.1))
    assert not dominates((0.1, 0.5), (0.5, 0.1))
    assert not dominates((0.5, 0.1), (0.1, 0.5))
    assert dominates(ObjectiveVector(f1=0.1, f2=0.2), ObjectiveVector(f1=0.1, f2=0.3))


def test_domination_matrix_matches_pairwise(rng):
    objs = np.round(rng.random((30, 2)), 1)
    dom = domination_matrix(objs)
    for i in range(30):
        for j in range(30):
            assert dom[i, j] == naive_dominates(objs[i], objs[j])


def test_non_dominated_sort_examples():
    assert non_dominated_sort([(0.0, 0.0)]) == [[0]]
    objs = [(0.1, 0.9), (0.9, 0.1), (0.5, 0.5), (0.6, 0.6)]
    assert non_dominated_sort(objs) == [[0, 1, 2], [3]]


def test_non_dominated_sort_matches_naive_oracle():
    gen = make_rng(99)
    for trial in range(500):
        n = int(gen.integers(1, 65))
        objs = gen.random((n, 2))
        if trial % 2:
            # coarse grid: duplicates and shared coordinates
            objs = np.round(objs, 1)
        assert non_dominated_sort(objs) == naive_fronts(objs.tolist())


def test_front_ranks_are_one_based():
    assert front_ranks([[0, 2], [1]], 3).tolist() == [1, 2, 1]


def test_crowding_distance_examples():
    assert crowding_distance([(0.3, 0.3)]).tolist() == [math.inf]
    assert crowding_distance([(0.1, 0.9), (0.9, 0.1)]).tolist() == [math.inf, math.inf]
    assert crowding_distance([(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)]).tolist() == [math.inf, 2.0, math.inf]


def test_crowding_distance_constant_objective_contributes_nothing():
    assert crowding_distance([(0.4, 0.4)] * 3).tolist() == [0.0, 0.0, 0.0]


def test_crowding_distance_interior_gaps():
    front = [(0.0, 1.0), (0.2, 0.7), (0.6, 0.3), (1.0, 0.0)]
    cd = crowding_distance(front)
    assert cd[1] == pytest.approx(0.6 + 0.7)
    assert cd[2] == pytest.approx(0.8 + 0.7)


def _eight_point_population():
    first = [(0.0, 0.8), (0.2, 0.6), (0.4, 0.4), (0.6, 0.2), (0.8, 0.0)]
    second = [(0.3, 0.9), (0.5, 0.7), (0.95, 0.3)]
    return rank_population(first + second)


def test_rank_population_fronts_and_crowding():
    ranked = _eight_point_population()
    assert ranked.fronts == [[0, 1, 2, 3, 4], [5, 6, 7]]
    assert ranked.ranks.tolist() == [1, 1, 1, 1, 1, 2, 2, 2]
    assert ranked.front_count == 2
    assert ranked.last_front == [5, 6, 7]
    assert math.isinf(ranked.crowding[5]) and math.isinf(ranked.crowding[7])
    assert math.isfinite(ranked.crowding[6])


def test_survive_whole_front_fits():
    assert survive(_eight_point_population(), 5) == [0, 1, 2, 3, 4]


def test_survive_truncates_by_crowding():
    assert survive(_eight_point_population(), 7) == [0, 1, 2, 3, 4, 5, 7]


def test_survive_single_front_keeps_everyone():
    ranked = rank_population([(0.1, 0.9), (0.5, 0.5), (0.9, 0.1)])
    assert sorted(survive(ranked, 3)) == [0, 1, 2]


def test_survive_needs_enough_members():
    with pytest.raises(ValueError):
        survive(_eight_point_population(), 9)


def test_objective_vector_range():
    with pytest.raises(ValueError):
        ObjectiveVector(f1=1.2, f2=0.0)


def test_dominance_is_a_strict_partial_order(rng):
    for _ in range(500):
        a, b, c = np.round(rng.random((3, 2)), 1)
        assert not dominates(a, a)
        assert not (dominates(a, b) and dominates(b, a))
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


def test_crowding_order_survives_affine_rescaling(rng):
    for _ in range(20):
        front = rng.random((12, 2))
        scale = rng.uniform(0.5, 20.0, 2)
        shift = rng.uniform(-3.0, 3.0, 2)
        before = crowding_distance(front)
        after = crowding_distance(front * scale + shift)
        np.testing.assert_allclose(after, before, rtol=1e-9)
        interior = np.isfinite(before)
        assert np.array_equal(np.isfinite(after), interior)
        assert np.array_equal(
            np.argsort(before[interior], kind="stable"),
            np.argsort(after[interior], kind="stable"),
        )


def test_survive_never_drops_the_first_front(rng):
    for _ in range(100):
        N = int(rng.integers(4, 20))
        ranked = rank_population(np.round(rng.random((2 * N, 2)), 2))
        chosen = survive(ranked, N)
        assert len(chosen) == len(set(chosen)) == N
        first = set(ranked.fronts[0])
        if len(first) <= N:
            assert first <= set(chosen)
        else:
            assert set(chosen) <= first
