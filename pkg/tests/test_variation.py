import math

import numpy as np
import pytest

from featsel.core.genome import Genome
from featsel.core.pareto import RankedPopulation, rank_population
from featsel.core.utils.errors import DimensionError, SelectionError
from featsel.core.utils.helpers import make_rng
from featsel.core.variation import (
    VariationConfig,
    bitflip_mutation,
    eliminate_duplicates,
    make_offspring,
    single_point_crossover,
    splice,
    tournament_select,
)


def _pair(ranks, crowding) -> RankedPopulation:
    return RankedPopulation(
        objectives=np.zeros((2, 2)),
        fronts=[[0, 1]],
        ranks=np.asarray(ranks),
        crowding=np.asarray(crowding, dtype=float),
    )


def test_tournament_lower_rank_wins():
    pop = _pair([1, 3], [0.0, math.inf])
    assert {tournament_select(pop, make_rng(s)) for s in range(20)} == {0}


def test_tournament_crowding_breaks_rank_ties():
    pop = _pair([2, 2], [math.inf, 0.7])
    assert {tournament_select(pop, make_rng(s)) for s in range(20)} == {0}


def test_tournament_full_tie_goes_to_first_drawn():
    pop = _pair([1, 1], [0.5, 0.5])
    for seed in range(20):
        first_drawn = int(make_rng(seed).choice(2, size=2, replace=False)[0])
        assert tournament_select(pop, make_rng(seed)) == first_drawn


def test_tournament_needs_two_members():
    single = RankedPopulation(
        objectives=np.zeros((1, 2)), fronts=[[0]], ranks=np.ones(1), crowding=np.full(1, np.inf)
    )
    with pytest.raises(SelectionError):
        tournament_select(single, make_rng(0))


def test_splice_example():
    c1, c2 = splice(Genome.from_string("0000"), Genome.from_string("1111"), 2)
    assert (c1.to_string(), c2.to_string()) == ("0011", "1100")


def test_crossover_of_identical_parents(rng):
    a = Genome.from_string("10110011")
    assert single_point_crossover(a, a, rng) == (a, a)


def test_crossover_conserves_bits(rng):
    for _ in range(50):
        a = Genome.from_bits(rng.random(37) < 0.5)
        b = Genome.from_bits(rng.random(37) < 0.5)
        c1, c2 = single_point_crossover(a, b, rng)
        assert (c1 ^ c2) == (a ^ b)
        assert c1.popcount() + c2.popcount() == a.popcount() + b.popcount()


def test_crossover_rejects_bad_parents(rng):
    with pytest.raises(DimensionError):
        single_point_crossover(Genome.from_string("1"), Genome.from_string("0"), rng)
    with pytest.raises(DimensionError):
        single_point_crossover(Genome.from_string("10"), Genome.from_string("101"), rng)
    with pytest.raises(DimensionError):
        splice(Genome.from_string("1010"), Genome.from_string("0101"), 4)


def test_mutation_extremes(rng):
    g = Genome.from_string("1011001110101")
    assert bitflip_mutation(g, 0.0, rng) == g
    flipped = bitflip_mutation(g, 1.0, rng)
    assert flipped == ~g
    assert flipped.popcount() == len(g) - g.popcount()


def test_mutation_rate(rng):
    g = Genome.zeros(10_000)
    flips = [bitflip_mutation(g, 0.01, rng).popcount() for _ in range(200)]
    assert np.mean(flips) == pytest.approx(100, abs=10)


def test_eliminate_duplicates():
    g, h = Genome.from_string("0101"), Genome.from_string("1100")
    assert eliminate_duplicates([g, g]) == [g]
    assert eliminate_duplicates([g, h], existing=[h]) == [g]
    assert eliminate_duplicates([h, g]) == [h, g]


def _evaluated_population(rng, n=10, d=16):
    genomes = [Genome.from_bits(rng.random(d) < 0.5) for _ in range(n)]
    objectives = rng.random((n, 2))
    return genomes, rank_population(objectives)


def test_offspring_are_new_and_distinct(rng):
    genomes, ranked = _evaluated_population(rng)
    children = make_offspring(genomes, ranked, VariationConfig(mutation_prob=0.1), rng)
    assert 0 < len(children) <= len(genomes)
    assert len(set(children)) == len(children)
    assert not set(children) & set(genomes)


def test_offspring_are_reproducible():
    genomes, ranked = _evaluated_population(make_rng(4))
    config = VariationConfig(mutation_prob=0.05)
    assert make_offspring(genomes, ranked, config, make_rng(9)) == make_offspring(
        genomes, ranked, config, make_rng(9)
    )


def test_offspring_copies_of_parents_are_all_eliminated(rng):
    genomes, ranked = _evaluated_population(rng)
    config = VariationConfig(mutation_prob=0.0, crossover_prob=0.0)
    assert make_offspring(genomes, ranked, config, rng) == []


def test_offspring_batch_size_can_be_odd(rng):
    genomes, ranked = _evaluated_population(rng, n=12, d=64)
    config = VariationConfig(mutation_prob=0.2, duplicate_elimination=False)
    children = make_offspring(genomes, ranked, config, rng, n_children=5)
    assert len(children) == 5
    assert all(len(c) == 64 for c in children)


def test_every_first_front_member_can_win_a_tournament(rng):
    ranked = rank_population(rng.random((20, 2)))
    wins = {tournament_select(ranked, rng) for _ in range(5000)}
    assert set(ranked.fronts[0]) <= wins
