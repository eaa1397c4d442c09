import numpy as np
import pytest
from pydantic import ValidationError
from scipy import stats

from featsel.core.genome import popcounts
from featsel.core.initialization import (
    InitMethod,
    InitSpec,
    bitstring_uniform,
    genuine_init,
    initialize,
)
from featsel.core.utils.errors import InitSpecError
from featsel.core.utils.helpers import make_rng


def test_bitstring_uniform_single_bit_is_a_fair_coin():
    ones = sum(bitstring_uniform(1, 1, make_rng(seed))[0].popcount() for seed in range(2000))
    assert 0.45 < ones / 2000 < 0.55


def test_bitstring_uniform_popcounts_follow_binomial():
    counts = popcounts(bitstring_uniform(10_000, 100, make_rng(11)))
    assert counts.mean() == pytest.approx(50, abs=0.5)
    assert counts.std(ddof=1) == pytest.approx(5, abs=0.5)


def test_same_seed_same_population():
    assert bitstring_uniform(3, 4, make_rng(5)) == bitstring_uniform(3, 4, make_rng(5))
    assert genuine_init(3, 4, 1, 4, make_rng(5)) == genuine_init(3, 4, 1, 4, make_rng(5))


def test_genuine_init_forced_full_subset(rng):
    assert genuine_init(1, 5, 5, 5, rng)[0].to_string() == "11111"


def test_genuine_init_pairs_are_uniform():
    population = genuine_init(10_000, 5, 2, 2, make_rng(21))
    assert set(popcounts(population).tolist()) == {2}
    pair_counts = {}
    for g in population:
        pair = tuple(g.selected_indices().tolist())
        pair_counts[pair] = pair_counts.get(pair, 0) + 1
    assert len(pair_counts) == 10
    assert stats.chisquare(list(pair_counts.values())).pvalue > 0.001


def test_genuine_init_popcounts_are_uniform():
    counts = popcounts(genuine_init(10_000, 100, 1, 100, make_rng(3)))
    assert counts.min() >= 1 and counts.max() <= 100
    histogram = np.bincount(counts, minlength=101)[1:]
    assert np.all(np.abs(histogram - 100) <= 45)
    assert stats.chisquare(histogram).pvalue > 0.01


def test_genuine_init_positions_are_uniform():
    population = genuine_init(5_000, 20, 1, 20, make_rng(8))
    per_position = np.sum([g.bits for g in population], axis=0)
    assert stats.chisquare(per_position).pvalue > 0.001


@pytest.mark.parametrize(
    "min_vars, max_vars",
    [(4, 3), (1, 6), (0, 3)],
)
def test_genuine_init_rejects_bad_ranges(rng, min_vars, max_vars):
    with pytest.raises(InitSpecError):
        genuine_init(2, 5, min_vars, max_vars, rng)


def test_init_spec_defaults_and_validation():
    spec = InitSpec(population_size=4, dimension=9)
    assert spec.max_vars == 9
    assert spec.method == InitMethod.UNIFORM_COVERING
    with pytest.raises(ValidationError):
        InitSpec(population_size=4, dimension=9, min_vars=5, max_vars=3)
    with pytest.raises(ValidationError):
        InitSpec(population_size=4, dimension=9, max_vars=10)


def test_initialize_dispatches_on_method():
    bu = InitSpec(population_size=6, dimension=12, method=InitMethod.BITSTRING_UNIFORM)
    assert initialize(bu, make_rng(1)) == bitstring_uniform(6, 12, make_rng(1))

    uc = InitSpec(population_size=6, dimension=12, min_vars=0, max_vars=4)
    population = initialize(uc, make_rng(1))
    assert population == genuine_init(6, 12, 1, 4, make_rng(1))
    assert all(1 <= g.popcount() <= 4 for g in population)


def test_covering_and_bitstring_popcounts_differ():
    bu = popcounts(bitstring_uniform(500, 100, make_rng(4)))
    uc = popcounts(genuine_init(500, 100, 1, 100, make_rng(4)))
    assert stats.ks_2samp(bu, uc).pvalue < 1e-6
    assert uc.std() > 3 * bu.std()
