"""Pure-Python/numpy kernels; the fallback when the compiled core is absent.

Both implementations of each kernel must be bit-for-bit interchangeable:
the Gini arithmetic works on exact integer counts converted to doubles, so
the compiled and the numpy paths produce identical scores, thresholds, and
tie-breaks. tests/test_kernels.py enforces the equivalence.
"""

from __future__ import annotations

import hashlib

import numpy as np

BACKEND = "python"


def find_proof(last_proof: int, last_hash: str, difficulty: int) -> int:
    """Smallest nonce whose digest starts with `difficulty` zero hex digits."""
    prefix = f"{last_proof}:".encode("ascii")
    suffix = f":{last_hash}".encode("ascii")
    zero_bytes, odd = divmod(difficulty, 2)
    zeros = bytes(zero_bytes)
    proof = 0
    while True:
        digest = hashlib.sha256(prefix + b"%d" % proof + suffix).digest()
        if digest[:zero_bytes] == zeros and (not odd or digest[zero_bytes] < 16):
            return proof
        proof += 1


def best_split(x, y, features):
    """Best Gini split among candidate feature columns.

    x: (m, k) float64 submatrix of the node's samples over the k candidate
    features; y: (m,) 0/1 labels; features: the k original feature indices,
    ascending. Thresholds sit halfway between consecutive distinct sorted
    values. Ties resolve to the lowest feature index, then the lowest
    threshold. Returns (feature, threshold, weighted_gini) or None when every
    candidate column is constant.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    m = x.shape[0]
    total1 = int(y.sum())
    total0 = m - total1
    best = None
    for col in range(x.shape[1]):
        values = x[:, col]
        order = np.argsort(values, kind="stable")
        sv = values[order]
        sy = y[order]
        boundary = np.nonzero(sv[:-1] < sv[1:])[0]
        if boundary.size == 0:
            continue
        left_n = boundary + 1
        left_1 = np.cumsum(sy)[boundary]
        left_0 = left_n - left_1
        right_n = m - left_n
        right_1 = total1 - left_1
        right_0 = total0 - left_0
        sum_left = (left_0 * left_0 + left_1 * left_1) / (left_n * left_n)
        sum_right = (right_0 * right_0 + right_1 * right_1) / (right_n * right_n)
        weighted = (left_n * (1.0 - sum_left) + right_n * (1.0 - sum_right)) / m
        i = int(np.argmin(weighted))
        score = float(weighted[i])
        if best is None or score < best[0]:
            j = int(boundary[i])
            threshold = (sv[j] + sv[j + 1]) / 2.0
            if threshold == sv[j + 1]:  # adjacent doubles: keep the left value
                threshold = sv[j]
            best = (score, int(features[col]), float(threshold))
    if best is None:
        return None
    return best[1], best[2], best[0]
