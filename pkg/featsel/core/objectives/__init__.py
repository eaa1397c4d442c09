"""
Objectives engine.

High-level interface for:

- Loading, converting and splitting tabular datasets
- k-NN classification over a feature subset
- The two objectives (classification error, selected-feature ratio)
- Budgeted fitness evaluation with NFC accounting
"""

from featsel.core.objectives.data.schemas import Dataset, SplitDataset
from featsel.core.objectives.data.dataset_loader import encode_labels, load_dataset, save_dataset
from featsel.core.objectives.data.converter import convert_matrix_file
from featsel.core.objectives.data.splitting import split
from featsel.core.objectives.data.toy_dataset import make_toy_dataset
from featsel.core.objectives.classifier.knn import knn_predict, knn_predict_batch
from featsel.core.objectives.fitness.evaluator import (
    Evaluation,
    EvaluationMode,
    FitnessEvaluator,
    NFCCounter,
    classification_error,
    feature_ratio,
)

__all__ = [
    "Dataset",
    "SplitDataset",
    "encode_labels",
    "load_dataset",
    "save_dataset",
    "convert_matrix_file",
    "split",
    "make_toy_dataset",
    "knn_predict",
    "knn_predict_batch",
    "Evaluation",
    "EvaluationMode",
    "FitnessEvaluator",
    "NFCCounter",
    "classification_error",
    "feature_ratio",
]
