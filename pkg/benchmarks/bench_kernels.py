#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Covers the two hot loops (Gini best-split search, proof-of-work nonce scan)
in isolation plus a whole forest fit on a CKD-sized matrix through each
backend. Run after `pip install -e . --no-build-isolation`; without the
compiled extension only the fallback columns appear.

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from renalchain import _core_py, kernels
from renalchain.ledger import genesis_block, hash_block
from renalchain.viability import dataset as ds
from renalchain.viability import forest as rf

try:
    from renalchain import _core
except ImportError:
    _core = None


def timeit(fn, *args, repeat: int = 3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_best_split(impl, rounds: int):
    rng = np.random.default_rng(0)
    x = rng.normal(size=(340, 5))
    y = rng.integers(0, 2, 340)
    feats = np.array([0, 3, 7, 11, 19])

    def run():
        for _ in range(rounds):
            impl.best_split(x, y, feats)

    return timeit(run)[0]


def bench_find_proof(impl, difficulty: int):
    tip = genesis_block()
    elapsed, proof = timeit(lambda: impl.find_proof(tip.proof, hash_block(tip), difficulty))
    return elapsed, proof


def bench_forest_fit(impl, train):
    saved = kernels.best_split
    kernels.best_split = impl.best_split  # route the builder through one backend
    try:
        elapsed, _ = timeit(
            lambda: rf.fit_random_forest(train, rf.Hyperparams(seed=42)), repeat=1
        )
    finally:
        kernels.best_split = saved
    return elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--split-rounds", type=int, default=2000)
    parser.add_argument("--pow-difficulty", type=int, default=5)
    parser.add_argument("--dataset", default="data/synthetic_ckd.csv")
    args = parser.parse_args()

    backends = [("python", _core_py)]
    if _core is not None:
        backends.insert(0, ("compiled", _core))
    else:
        print("note: compiled extension not built; showing fallback only\n")

    raw = ds.load_dataset(args.dataset)
    train, _ = ds.train_test_split(ds.preprocess(raw), 0.15, 42)

    rows = []
    for name, impl in backends:
        split_s = bench_best_split(impl, args.split_rounds)
        pow4_s, proof4 = bench_find_proof(impl, 4)
        powd_s, proofd = bench_find_proof(impl, args.pow_difficulty)
        fit_s = bench_forest_fit(impl, train)
        rows.append((name, split_s, pow4_s, powd_s, fit_s))
        print(f"[{name}]")
        print(f"  best_split x{args.split_rounds} (340x5):   {split_s:8.3f} s")
        print(f"  find_proof difficulty 4 (p={proof4}): {pow4_s:8.3f} s")
        print(f"  find_proof difficulty {args.pow_difficulty} (p={proofd}): {powd_s:8.3f} s")
        print(f"  forest fit 100 trees (340x24):    {fit_s:8.3f} s")

    if len(rows) == 2:
        (_, cs, cp4, cpd, cf), (_, ps, pp4, ppd, pf) = rows
        print("\nspeedup (python / compiled):")
        print(f"  best_split: {ps / cs:5.1f}x")
        print(f"  find_proof d4: {pp4 / cp4:5.1f}x   d{args.pow_difficulty}: {ppd / cpd:5.1f}x")
        print(f"  forest fit: {pf / cf:5.1f}x")


if __name__ == "__main__":
    main()
