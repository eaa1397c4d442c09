from __future__ import annotations

"""The generation loop shared by all variants:

initialize N (BU or UC over [1, d])
    ↓
evaluate (NFC += N)
    ↓
loop while budget remains:
    rank current population  → tournaments → crossover → mutation → drop duplicates
    evaluate children (batch truncated to the remaining budget)
    merge → rank → crowding → survive N
    replacement variants only, if more than one front and budget remains:
        [alpha, beta] from surviving popcounts → N' UC replacements → evaluate → swap last front
    record generation

NFC is the only termination criterion."""

import logging
from typing import List, Optional

import numpy as np

from featsel.core.genome.binary_genome import Genome
from featsel.core.initialization.initializers import InitSpec, initialize
from featsel.core.metrics.diversity import avg_pairwise_hamming
from featsel.core.metrics.hypervolume import hypervolume_2d
from featsel.core.objectives.data.schemas import SplitDataset
from featsel.core.objectives.fitness.evaluator import FitnessEvaluator, NFCCounter
from featsel.core.optimizer.population import Population
from featsel.core.optimizer.replacement import (
    generate_replacements,
    replace_last_front,
    replacement_targets,
    size_window,
)
from featsel.core.optimizer.schemas import GenerationRecord, OptimizerConfig, RunResult
from featsel.core.pareto.schemas import RankedPopulation
from featsel.core.pareto.survival import rank_population, survive
from featsel.core.utils.errors import ConfigError
from featsel.core.utils.helpers import make_rng
from featsel.core.utils.loggers import log_debug_payload
from featsel.core.variation.offspring import make_offspring

logger = logging.getLogger(__name__)


class DiverseNSGA2:
    """
    Binary NSGA-II with optional Uniform Covering initialization and last-front replacement.

    The evaluator is injected so tests can bind a prepared split or budget.
    """

    def __init__(
        self,
        config: OptimizerConfig,
        evaluator: FitnessEvaluator,
        rng: Optional[np.random.Generator] = None,
    ) -> None:
        if evaluator.budget.max_nfc != config.max_nfc:
            raise ConfigError("Evaluator budget and config.max_nfc disagree.")
        self.config = config
        self.evaluator = evaluator
        self.rng = rng if rng is not None else make_rng(config.seed)
        self.dimension = evaluator.dimension

    # -------------------------------------------------------------------------
    # Public API
    # -------------------------------------------------------------------------

    def run(self) -> RunResult:
        """
        Execute one run until the NFC budget is spent.

        Returns:
            RunResult with the final population, its train front (train and test
            objectives) and one GenerationRecord per generation.
        """
        cfg = self.config
        budget = self.evaluator.budget
        if budget.remaining < cfg.population_size:
            raise ConfigError(
                f"Budget of {budget.remaining} calls cannot evaluate the initial population."
            )

        logger.info(
            "Run start: variant=%s seed=%d N=%d max_nfc=%d d=%d",
            cfg.variant.value,
            cfg.seed,
            cfg.population_size,
            cfg.max_nfc,
            self.dimension,
        )

        population = self._evaluate(self._initial_genomes())
        ranked = rank_population(population.objectives)
        history: List[GenerationRecord] = [
            self._record(
                0, population, ranked, last_front_size=len(ranked.last_front),
                replaced=0, children=0, window=None,
            )
        ]

        generation = 0
        stalled = 0
        stopped_early = False
        while budget.remaining > 0:
            generation += 1

            # 1. Offspring from the current ranking
            children = make_offspring(
                population.genomes, ranked, cfg.variation, self.rng, cfg.population_size
            )
            children = children[: budget.remaining]
            if children:
                stalled = 0
                offspring = self._evaluate(children)
                merged = population.merge(offspring)
                merged_ranked = rank_population(merged.objectives)
                population = merged.subset(survive(merged_ranked, cfg.population_size))
                ranked = rank_population(population.objectives)
            else:
                stalled += 1
                logger.warning(
                    "Generation %d produced no new child (%d in a row).", generation, stalled
                )

            # 2. Last-front replacement; N' is taken before the swap
            last_front_size = len(ranked.last_front)
            replaced, window = 0, None
            if cfg.replacement_enabled and budget.remaining > 0 and ranked.front_count >= 2:
                population, ranked, replaced, window = self._replace(population, ranked)

            history.append(
                self._record(
                    generation, population, ranked, last_front_size=last_front_size,
                    replaced=replaced, children=len(children), window=window,
                )
            )

            if stalled >= cfg.max_stalled_generations:
                logger.warning(
                    "Stopping after %d generations without new children.", stalled
                )
                stopped_early = True
                break

        return self._result(population, ranked, history, stopped_early)

    # -------------------------------------------------------------------------
    # Internal helpers
    # -------------------------------------------------------------------------

    def _initial_genomes(self) -> List[Genome]:
        spec = InitSpec(
            population_size=self.config.population_size,
            dimension=self.dimension,
            min_vars=1,
            max_vars=self.dimension,
            method=self.config.init_method,
        )
        return initialize(spec, self.rng)

    def _evaluate(self, genomes: List[Genome]) -> Population:
        evaluations = self.evaluator.evaluate_batch(genomes)
        objectives = np.array([e.objectives.as_tuple() for e in evaluations], dtype=float)
        return Population(genomes, objectives)

    def _replace(
        self, population: Population, ranked: RankedPopulation
    ) -> tuple[Population, RankedPopulation, int, tuple[int, int]]:
        budget = self.evaluator.budget
        window = size_window(population.genomes)
        targets = replacement_targets(ranked, budget.remaining)
        fresh = generate_replacements(
            len(targets),
            self.dimension,
            window,
            population.genomes,
            self.rng,
            attempts=self.config.replacement_attempts,
        )
        evaluated = self._evaluate(fresh)
        population = replace_last_front(
            population, ranked, evaluated.genomes, evaluated.objectives, targets
        )
        return population, rank_population(population.objectives), len(targets), window

    def _record(
        self,
        generation: int,
        population: Population,
        ranked: RankedPopulation,
        last_front_size: int,
        replaced: int,
        children: int,
        window: Optional[tuple[int, int]],
    ) -> GenerationRecord:
        record = GenerationRecord(
            generation=generation,
            nfc_consumed=self.evaluator.budget.consumed,
            hv_train=hypervolume_2d(population.objectives[ranked.fronts[0]]),
            avg_pairwise_hamming=avg_pairwise_hamming(population.genomes),
            last_front_size=last_front_size,
            replaced_count=replaced,
            front_count=ranked.front_count,
            children_evaluated=children,
            window=window,
        )
        log_debug_payload(logger, f"GENERATION {generation}", record.model_dump())
        return record

    def _result(
        self,
        population: Population,
        ranked: RankedPopulation,
        history: List[GenerationRecord],
        stopped_early: bool,
    ) -> RunResult:
        front_idx = ranked.fronts[0]
        front = [population.genomes[i] for i in front_idx]
        front_train = [tuple(float(v) for v in population.objectives[i]) for i in front_idx]
        front_test = [self.evaluator.test_objectives(g).as_tuple() for g in front]

        result = RunResult(
            variant=self.config.variant,
            seed=self.config.seed,
            dimension=self.dimension,
            population_size=self.config.population_size,
            max_nfc=self.config.max_nfc,
            population=population.genomes,
            population_objectives=population.objective_tuples(),
            population_ranks=[int(r) for r in ranked.ranks],
            front=front,
            front_train=front_train,
            front_test=front_test,
            history=history,
            total_nfc=self.evaluator.budget.consumed,
            stopped_early=stopped_early,
        )
        logger.info(
            "Run end: variant=%s seed=%d generations=%d nfc=%d front=%d hv_train=%.4f",
            self.config.variant.value,
            self.config.seed,
            len(history) - 1,
            result.total_nfc,
            len(front),
            history[-1].hv_train,
        )
        return result


def run(
    config: OptimizerConfig,
    split: SplitDataset,
    k: int = 5,
    normalize: bool = False,
) -> RunResult:
    """
    Convenience wrapper: build the budget and evaluator for `split` and run once.
    """
    evaluator = FitnessEvaluator(split, NFCCounter(config.max_nfc), k=k, normalize=normalize)
    return DiverseNSGA2(config, evaluator).run()
