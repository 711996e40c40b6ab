"""Kidney viability classifier: dataset handling, forest training, scoring."""

from .dataset import (
    ColumnSpec,
    EncodedMatrix,
    RawDataset,
    encode_metrics,
    load_dataset,
    preprocess,
    train_test_split,
)
from .forest import (
    DecisionTree,
    EvalReport,
    ForestModel,
    Hyperparams,
    evaluate,
    fit_random_forest,
    load_model,
    predict_proba,
    save_model,
)

__all__ = [
    "ColumnSpec",
    "DecisionTree",
    "EncodedMatrix",
    "EvalReport",
    "ForestModel",
    "Hyperparams",
    "RawDataset",
    "encode_metrics",
    "evaluate",
    "fit_random_forest",
    "load_dataset",
    "load_model",
    "predict_proba",
    "preprocess",
    "save_model",
    "train_test_split",
]
