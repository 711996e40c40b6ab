"""Independent brute-force oracles used to pin expected values.

Nothing here imports the implementation's kernels or tree builder: the CART
oracle enumerates every (feature, threshold) pair at every node with exact
Fraction arithmetic, and the split scorer recomputes weighted Gini from
scratch. Deliberately slow and obvious.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def gini_weighted_exact(y_left: list[int], y_right: list[int]) -> Fraction:
    """Weighted Gini impurity of a two-way label partition, exactly."""

    def gini(ys: list[int]) -> Fraction:
        n = len(ys)
        ones = sum(ys)
        p1 = Fraction(ones, n)
        p0 = 1 - p1
        return 1 - p0 * p0 - p1 * p1

    n = len(y_left) + len(y_right)
    return Fraction(len(y_left), n) * gini(y_left) + Fraction(len(y_right), n) * gini(y_right)


def brute_best_split(x: np.ndarray, y: np.ndarray, features) -> tuple[int, float] | None:
    """Exhaustive best split; ties to lowest feature index, lowest threshold."""
    best = None  # (score, feature, threshold)
    for pos, feature in enumerate(features):
        values = sorted(set(float(v) for v in x[:, pos]))
        for lo, hi in zip(values, values[1:]):
            threshold = (lo + hi) / 2.0
            if threshold == hi:
                threshold = lo
            left = [int(y[i]) for i in range(len(y)) if x[i, pos] <= threshold]
            right = [int(y[i]) for i in range(len(y)) if x[i, pos] > threshold]
            if not left or not right:
                continue
            score = gini_weighted_exact(left, right)
            key = (score, int(feature), threshold)
            if best is None or key < best:
                best = key
    if best is None:
        return None
    return best[1], best[2]


class BruteCart:
    """Exhaustive CART: every feature, every threshold, exact arithmetic.

    Mirrors the specified stopping rules (pure node, max_depth,
    min_samples_split, no valid split) and the class-1 leaf tie-break.
    """

    def __init__(self, max_depth: int | None = None, min_samples_split: int = 2):
        self.max_depth = max_depth
        self.min_samples_split = min_samples_split
        self.root: dict | None = None

    def fit(self, x: np.ndarray, y: np.ndarray) -> "BruteCart":
        self.root = self._grow(np.asarray(x, float), np.asarray(y, int), 0)
        return self

    def _grow(self, x: np.ndarray, y: np.ndarray, depth: int) -> dict:
        ones = int(y.sum())
        zeros = len(y) - ones
        leaf = {"leaf": True, "vote": 1 if ones >= zeros else 0}
        if zeros == 0 or ones == 0:
            return leaf
        if self.max_depth is not None and depth >= self.max_depth:
            return leaf
        if len(y) < self.min_samples_split:
            return leaf
        split = brute_best_split(x, y, list(range(x.shape[1])))
        if split is None:
            return leaf
        feature, threshold = split
        mask = x[:, feature] <= threshold
        return {
            "leaf": False,
            "feature": feature,
            "threshold": threshold,
            "left": self._grow(x[mask], y[mask], depth + 1),
            "right": self._grow(x[~mask], y[~mask], depth + 1),
        }

    def predict_one(self, row: np.ndarray) -> int:
        node = self.root
        while not node["leaf"]:
            node = node["left"] if row[node["feature"]] <= node["threshold"] else node["right"]
        return node["vote"]

    def predict(self, x: np.ndarray) -> np.ndarray:
        return np.array([self.predict_one(r) for r in np.asarray(x, float)], dtype=int)
