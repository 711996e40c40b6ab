"""From-scratch random forest of CART trees.

Each tree trains on a bootstrap sample of exactly n draws with replacement.
At every node a random subset of ceil(sqrt(p)) features is considered and
the split minimizing weighted Gini impurity is taken, with thresholds at
midpoints between consecutive distinct sorted values. Recursion stops at a
pure node, at max_depth, or below min_samples_split. Everything is
deterministic under the configured seed: per-tree PRNG streams are derived
by spawning one seed sequence, so tree t sees the same randomness no matter
how the others are scheduled.

Class convention: 1 = ckd (positive), 0 = notckd. The viability score of a
measurement vector is the fraction of trees voting class 0, so higher means
a healthier kidney. Vote ties inside a leaf and across the forest resolve
toward class 1, the disease-cautious direction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .. import kernels
from ..canonical import canonical_json
from ..domain import HealthMetrics
from ..errors import EmptyTestSet, EmptyTrainSet, FormatVersionError, SingleClassError
from .dataset import ColumnSpec, EncodedMatrix, encode_metrics

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Hyperparams:
    n_estimators: int = 100
    max_depth: int | None = None
    min_samples_split: int = 2
    max_features: str | int = "sqrt"
    seed: int = 42

    def feature_count(self, p: int) -> int:
        if self.max_features == "sqrt":
            return math.ceil(math.sqrt(p))
        if self.max_features == "all":
            return p
        return max(1, min(int(self.max_features), p))

    def to_dict(self) -> dict:
        return {
            "max_depth": self.max_depth,
            "max_features": self.max_features,
            "min_samples_split": self.min_samples_split,
            "n_estimators": self.n_estimators,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Hyperparams":
        return cls(
            n_estimators=data["n_estimators"],
            max_depth=data["max_depth"],
            min_samples_split=data["min_samples_split"],
            max_features=data["max_features"],
            seed=data["seed"],
        )


class DecisionTree:
    """Array-encoded binary tree; node 0 is the root.

    Internal nodes carry (feature, threshold, left, right); leaves carry the
    class-count pair of their training samples. feature == -1 marks a leaf.
    """

    __slots__ = ("feature", "threshold", "left", "right", "count0", "count1")

    def __init__(self, feature, threshold, left, right, count0, count1):
        self.feature = np.asarray(feature, dtype=np.int64)
        self.threshold = np.asarray(threshold, dtype=np.float64)
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.count0 = np.asarray(count0, dtype=np.int64)
        self.count1 = np.asarray(count1, dtype=np.int64)

    def __len__(self) -> int:
        return self.feature.shape[0]

    def leaf_for(self, x: np.ndarray) -> int:
        node = 0
        while self.feature[node] >= 0:
            if x[self.feature[node]] <= self.threshold[node]:
                node = self.left[node]
            else:
                node = self.right[node]
        return int(node)

    def vote(self, x: np.ndarray) -> int:
        """Majority class of the reached leaf; ties count as class 1."""
        leaf = self.leaf_for(x)
        return 1 if self.count1[leaf] >= self.count0[leaf] else 0

    def to_nodes(self) -> list[dict]:
        nodes = []
        for i in range(len(self)):
            if self.feature[i] < 0:
                nodes.append({"count0": int(self.count0[i]), "count1": int(self.count1[i])})
            else:
                nodes.append({
                    "feature": int(self.feature[i]),
                    "threshold": float(self.threshold[i]),
                    "left": int(self.left[i]),
                    "right": int(self.right[i]),
                })
        return nodes

    @classmethod
    def from_nodes(cls, nodes: list[dict]) -> "DecisionTree":
        n = len(nodes)
        feature = np.full(n, -1, dtype=np.int64)
        threshold = np.zeros(n, dtype=np.float64)
        left = np.full(n, -1, dtype=np.int64)
        right = np.full(n, -1, dtype=np.int64)
        count0 = np.zeros(n, dtype=np.int64)
        count1 = np.zeros(n, dtype=np.int64)
        for i, node in enumerate(nodes):
            if "count0" in node:
                count0[i] = node["count0"]
                count1[i] = node["count1"]
            else:
                feature[i] = node["feature"]
                threshold[i] = node["threshold"]
                left[i] = node["left"]
                right[i] = node["right"]
        return cls(feature, threshold, left, right, count0, count1)


@dataclass(frozen=True)
class ForestModel:
    trees: tuple[DecisionTree, ...]
    hyperparams: Hyperparams
    column_spec: tuple[ColumnSpec, ...]

    def predict_proba(self, metrics: HealthMetrics) -> float:
        return predict_proba(self, metrics)


@dataclass(frozen=True)
class EvalReport:
    confusion: tuple[tuple[int, int], tuple[int, int]]  # [[TN, FP], [FN, TP]]
    accuracy: float
    test_size: int

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "confusion": [list(self.confusion[0]), list(self.confusion[1])],
            "test_size": self.test_size,
        }


class _TreeBuilder:
    def __init__(self, X, y, rng, hp: Hyperparams, n_features: int, trace=None):
        self.X = X
        self.y = y
        self.rng = rng
        self.hp = hp
        self.k = n_features
        self.p = X.shape[1]
        self.trace = trace
        self.feature: list[int] = []
        self.threshold: list[float] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.count0: list[int] = []
        self.count1: list[int] = []

    def _alloc(self) -> int:
        for arr in (self.feature, self.left, self.right):
            arr.append(-1)
        self.threshold.append(0.0)
        self.count0.append(0)
        self.count1.append(0)
        return len(self.feature) - 1

    def build(self, idx: np.ndarray, depth: int) -> int:
        node = self._alloc()
        labels = self.y[idx]
        n1 = int(labels.sum())
        n0 = idx.size - n1
        at_depth_limit = self.hp.max_depth is not None and depth >= self.hp.max_depth
        if n0 == 0 or n1 == 0 or at_depth_limit or idx.size < self.hp.min_samples_split:
            self.count0[node], self.count1[node] = n0, n1
            return node
        feats = np.sort(self.rng.choice(self.p, size=self.k, replace=False))
        x_sub = self.X[np.ix_(idx, feats)]
        split = kernels.best_split(x_sub, labels, feats)
        if self.trace is not None:
            self.trace.append((x_sub.copy(), labels.copy(), feats.copy(), split))
        if split is None:  # every candidate column constant
            self.count0[node], self.count1[node] = n0, n1
            return node
        f, thr, _ = split
        mask = self.X[idx, f] <= thr
        self.feature[node] = f
        self.threshold[node] = thr
        self.left[node] = self.build(idx[mask], depth + 1)
        self.right[node] = self.build(idx[~mask], depth + 1)
        return node

    def finish(self) -> DecisionTree:
        return DecisionTree(
            self.feature, self.threshold, self.left, self.right, self.count0, self.count1
        )


def fit_random_forest(
    train: EncodedMatrix, hp: Hyperparams = Hyperparams(), *, _trace=None
) -> ForestModel:
    """Train the ensemble; deterministic for a fixed seed."""
    n, p = train.features.shape
    if n == 0:
        raise EmptyTrainSet("training matrix has no rows")
    classes = np.unique(train.targets)
    if classes.size < 2:
        raise SingleClassError(f"training data contains only class {classes.tolist()}")
    k = hp.feature_count(p)
    X = np.ascontiguousarray(train.features, dtype=np.float64)
    y = np.ascontiguousarray(train.targets, dtype=np.int64)
    trees = []
    for stream in np.random.SeedSequence(hp.seed).spawn(hp.n_estimators):
        rng = np.random.default_rng(stream)
        bootstrap = rng.integers(0, n, size=n)  # exactly n draws, with replacement
        builder = _TreeBuilder(X[bootstrap], y[bootstrap], rng, hp, k, trace=_trace)
        builder.build(np.arange(n), 0)
        trees.append(builder.finish())
    return ForestModel(trees=tuple(trees), hyperparams=hp, column_spec=train.column_spec)


def _forest_votes1(model: ForestModel, x: np.ndarray) -> int:
    return sum(tree.vote(x) for tree in model.trees)


def predict_proba(model: ForestModel, metrics: HealthMetrics) -> float:
    """Viability: the exact fraction of trees voting notckd (class 0)."""
    x = encode_metrics(model.column_spec, metrics)
    votes1 = _forest_votes1(model, x)
    return (len(model.trees) - votes1) / len(model.trees)


def predict_classes(model: ForestModel, features: np.ndarray) -> np.ndarray:
    """Hard class per row: 1 when the class-1 vote fraction is >= 1/2."""
    n_trees = len(model.trees)
    out = np.empty(features.shape[0], dtype=np.int64)
    for i in range(features.shape[0]):
        out[i] = 1 if 2 * _forest_votes1(model, features[i]) >= n_trees else 0
    return out


def evaluate(model: ForestModel, test: EncodedMatrix) -> EvalReport:
    """Confusion matrix [[TN, FP], [FN, TP]] with ckd as the positive class."""
    if len(test) == 0:
        raise EmptyTestSet("evaluation matrix has no rows")
    predicted = predict_classes(model, test.features)
    actual = test.targets
    tn = int(np.sum((actual == 0) & (predicted == 0)))
    fp = int(np.sum((actual == 0) & (predicted == 1)))
    fn = int(np.sum((actual == 1) & (predicted == 0)))
    tp = int(np.sum((actual == 1) & (predicted == 1)))
    return EvalReport(
        confusion=((tn, fp), (fn, tp)),
        accuracy=(tn + tp) / len(test),
        test_size=len(test),
    )


def save_model(model: ForestModel, path: str | Path) -> None:
    payload = {
        "version": MODEL_FORMAT_VERSION,
        "hyperparams": model.hyperparams.to_dict(),
        "column_spec": [c.to_dict() for c in model.column_spec],
        "trees": [tree.to_nodes() for tree in model.trees],
    }
    Path(path).write_text(canonical_json(payload) + "\n")


def load_model(path: str | Path) -> ForestModel:
    """Read a model file back; never yields a partial model."""
    text = Path(path).read_text()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatVersionError(f"{path}: not a model file: {exc}")
    if not isinstance(payload, dict) or payload.get("version") != MODEL_FORMAT_VERSION:
        raise FormatVersionError(
            f"{path}: unsupported model version {payload.get('version')!r}"
            if isinstance(payload, dict) else f"{path}: not a model file"
        )
    try:
        return ForestModel(
            trees=tuple(DecisionTree.from_nodes(nodes) for nodes in payload["trees"]),
            hyperparams=Hyperparams.from_dict(payload["hyperparams"]),
            column_spec=tuple(ColumnSpec.from_dict(c) for c in payload["column_spec"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatVersionError(f"{path}: malformed model file: {exc}")
