from __future__ import annotations

"""The two objectives and the budgeted fitness evaluator.

f1 = classification error = 1 - correct / total   (k-NN, leave-one-out on train)
f2 = selected-feature ratio = popcount / d

Every call to FitnessEvaluator.evaluate costs exactly one function call (NFC),
whether the genome is new, cached or empty. Test-split objectives are
post-optimization bookkeeping and are never charged."""

import logging
import threading
from enum import Enum
from typing import Dict, List, Literal, Sequence

import numpy as np
from pydantic import BaseModel
from sklearn.preprocessing import MinMaxScaler

from featsel.core.config.settings import settings
from featsel.core.genome.binary_genome import Genome
from featsel.core.objectives.classifier.knn import knn_predict_batch
from featsel.core.objectives.data.schemas import SplitDataset
from featsel.core.pareto.schemas import ObjectiveVector
from featsel.core.utils.errors import BudgetExhaustedError, DegenerateGenomeError

logger = logging.getLogger(__name__)


class EvaluationMode(str, Enum):
    TRAIN = "train"
    TEST = "test"


class Evaluation(BaseModel):
    """Objectives of one evaluated genome and its NFC cost."""

    objectives: ObjectiveVector
    nfc_cost: Literal[1] = 1


class NFCCounter:
    """
    Thread-safe function-call budget.
    """

    def __init__(self, max_nfc: int) -> None:
        if max_nfc < 0:
            raise ValueError("max_nfc must be non-negative.")
        self.max_nfc = max_nfc
        self._consumed = 0
        self._lock = threading.Lock()

    @property
    def consumed(self) -> int:
        return self._consumed

    @property
    def remaining(self) -> int:
        return self.max_nfc - self._consumed

    @property
    def exhausted(self) -> bool:
        return self.remaining <= 0

    def consume(self, n: int = 1) -> None:
        with self._lock:
            if self._consumed + n > self.max_nfc:
                raise BudgetExhaustedError(
                    f"NFC budget of {self.max_nfc} exhausted ({self._consumed} used, {n} requested)."
                )
            self._consumed += n


def feature_ratio(genome: Genome) -> float:
    """popcount / d."""
    return genome.popcount() / len(genome)


def _error_rate(
    mask: np.ndarray,
    X_train: np.ndarray,
    y_train: np.ndarray,
    X_query: np.ndarray | None,
    y_query: np.ndarray,
    k: int,
    n_classes: int,
) -> float:
    train_sel = X_train[:, mask]
    if X_query is None:
        predictions = knn_predict_batch(
            train_sel, y_train, train_sel, k=k, leave_one_out=True, n_classes=n_classes
        )
    else:
        predictions = knn_predict_batch(
            train_sel, y_train, X_query[:, mask], k=k, n_classes=n_classes
        )
    correct = int(np.sum(predictions == y_query))
    return 1.0 - correct / y_query.shape[0]


def classification_error(
    genome: Genome,
    split: SplitDataset,
    mode: EvaluationMode | str = EvaluationMode.TRAIN,
    k: int = settings.K_NEIGHBORS,
) -> float:
    """
    k-NN classification error of the feature subset encoded by `genome`.

    mode=train: each training row is classified by its k nearest other training rows.
    mode=test: each test row is classified by its k nearest training rows.

    Raises:
        DegenerateGenomeError: if the genome selects no feature.
    """
    if genome.popcount() == 0:
        raise DegenerateGenomeError("Cannot classify with an empty feature subset.")
    mode = EvaluationMode(mode)
    mask = genome.bits
    n_classes = split.dataset.n_classes
    if mode == EvaluationMode.TRAIN:
        return _error_rate(mask, split.X_train, split.y_train, None, split.y_train, k, n_classes)
    return _error_rate(mask, split.X_train, split.y_train, split.X_test, split.y_test, k, n_classes)


class FitnessEvaluator:
    """
    Budgeted, cached evaluator bound to one split.

    Empty genomes get (1.0, 0.0) without calling the classifier.
    Fitness is deterministic per (genome, split), so results are cached by genome.
    """

    def __init__(
        self,
        split: SplitDataset,
        budget: NFCCounter,
        k: int = settings.K_NEIGHBORS,
        normalize: bool = False,
    ) -> None:
        self.split = split
        self.budget = budget
        self.k = k
        self.normalize = normalize
        self.n_classes = split.dataset.n_classes
        self.dimension = split.dataset.n_features

        X_train, X_test = split.X_train, split.X_test
        if normalize:
            scaler = MinMaxScaler().fit(X_train)
            X_train, X_test = scaler.transform(X_train), scaler.transform(X_test)
        self._X_train = np.ascontiguousarray(X_train, dtype=float)
        self._X_test = np.ascontiguousarray(X_test, dtype=float)
        self._y_train = split.y_train
        self._y_test = split.y_test

        self._train_cache: Dict[Genome, ObjectiveVector] = {}
        self._test_cache: Dict[Genome, ObjectiveVector] = {}

    def _objectives(self, genome: Genome, mode: EvaluationMode) -> ObjectiveVector:
        cache = self._train_cache if mode == EvaluationMode.TRAIN else self._test_cache
        cached = cache.get(genome)
        if cached is not None:
            return cached

        if len(genome) != self.dimension:
            raise ValueError(f"Genome length {len(genome)} != dataset dimension {self.dimension}.")

        if genome.popcount() == 0:
            error = 1.0
        elif mode == EvaluationMode.TRAIN:
            error = _error_rate(
                genome.bits, self._X_train, self._y_train, None, self._y_train, self.k, self.n_classes
            )
        else:
            error = _error_rate(
                genome.bits, self._X_train, self._y_train, self._X_test, self._y_test, self.k, self.n_classes
            )
        objectives = ObjectiveVector(f1=error, f2=feature_ratio(genome))
        cache[genome] = objectives
        return objectives

    def evaluate(self, genome: Genome) -> Evaluation:
        """
        Train-mode objectives of one genome; charges one NFC.

        Raises:
            BudgetExhaustedError: if the budget has no call left.
        """
        self.budget.consume(1)
        return Evaluation(objectives=self._objectives(genome, EvaluationMode.TRAIN))

    def evaluate_batch(self, genomes: Sequence[Genome]) -> List[Evaluation]:
        """
        Evaluate a batch in order; the whole batch is charged up front.
        """
        self.budget.consume(len(genomes))
        return [
            Evaluation(objectives=self._objectives(g, EvaluationMode.TRAIN)) for g in genomes
        ]

    def test_objectives(self, genome: Genome) -> ObjectiveVector:
        """Test-split objectives (not charged to the budget)."""
        return self._objectives(genome, EvaluationMode.TEST)
