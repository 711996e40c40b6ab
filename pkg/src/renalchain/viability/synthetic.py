"""Seeded synthetic stand-in for the chronic-kidney-disease dataset.

This is NOT the UCI data. It is a generator that emits files in the same
25-column CSV schema (400 rows, 250 ckd / 150 notckd, "?" for missing) with
class-conditional distributions and missingness rates shaped like the
published summaries, so the full pipeline, the CLI, and the node flows can
run in environments where the real file cannot be downloaded. Accuracy
numbers obtained on this data say nothing about the real dataset; see
README for how to fetch the canonical file.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from ..domain import METRIC_FIELDS
from .dataset import CKD, CLASS_COLUMN, NOT_CKD

DEFAULT_SEED = 20240101

def _clip(value: float, lo: float, hi: float) -> float:
    return min(max(value, lo), hi)

# Per-column fraction of cells blanked out, roughly following the real
# file's missingness profile (rbc is the sparsest column there too).
MISSING_RATES = {
    "age": 0.02, "bp": 0.03, "sg": 0.12, "al": 0.12, "su": 0.12,
    "rbc": 0.38, "pc": 0.16, "pcc": 0.01, "ba": 0.01, "bgr": 0.11,
    "bu": 0.05, "sc": 0.04, "sod": 0.22, "pot": 0.22, "hemo": 0.13,
    "pcv": 0.18, "wc": 0.26, "rc": 0.33, "htn": 0.01, "dm": 0.01,
    "cad": 0.01, "appet": 0.01, "pe": 0.01, "ane": 0.01,
}


def _healthy_row(rng: np.random.Generator) -> dict:
    return {
        "age": float(int(_clip(rng.normal(46, 14), 12, 80))),
        "bp": float(rng.choice([60, 70, 80], p=[0.2, 0.45, 0.35])),
        "sg": float(rng.choice([1.020, 1.025], p=[0.55, 0.45])),
        "al": 0.0,
        "su": 0.0,
        "rbc": "normal",
        "pc": "normal",
        "pcc": "notpresent",
        "ba": "notpresent",
        "bgr": round(float(_clip(rng.normal(107, 18), 70, 160))),
        "bu": round(float(_clip(rng.normal(33, 11), 10, 65)), 1),
        "sc": round(float(_clip(rng.normal(0.9, 0.25), 0.4, 1.4)), 1),
        "sod": round(float(_clip(rng.normal(141, 3.5), 132, 150))),
        "pot": round(float(_clip(rng.normal(4.4, 0.5), 3.3, 5.6)), 1),
        "hemo": round(float(_clip(rng.normal(15.2, 1.3), 12.2, 17.8)), 1),
        "pcv": round(float(_clip(rng.normal(46, 4), 38, 54))),
        "wc": round(float(_clip(rng.normal(7600, 1800), 4300, 11000)), -2),
        "rc": round(float(_clip(rng.normal(5.3, 0.6), 4.1, 6.5)), 1),
        "htn": "no",
        "dm": "no",
        "cad": "no",
        "appet": "good",
        "pe": "no",
        "ane": "no",
    }


def _ckd_row(rng: np.random.Generator) -> dict:
    severe = rng.random() < 0.6
    return {
        "age": float(int(_clip(rng.normal(58, 15), 2, 90))),
        "bp": float(rng.choice([70, 80, 90, 100], p=[0.2, 0.4, 0.3, 0.1])),
        "sg": float(rng.choice([1.005, 1.010, 1.015, 1.020], p=[0.25, 0.35, 0.25, 0.15])),
        "al": float(rng.choice([0, 1, 2, 3, 4, 5], p=[0.18, 0.18, 0.22, 0.22, 0.14, 0.06])),
        "su": float(rng.choice([0, 1, 2, 3, 4, 5], p=[0.55, 0.12, 0.12, 0.1, 0.07, 0.04])),
        "rbc": str(rng.choice(["normal", "abnormal"], p=[0.65, 0.35])),
        "pc": str(rng.choice(["normal", "abnormal"], p=[0.55, 0.45])),
        "pcc": str(rng.choice(["notpresent", "present"], p=[0.75, 0.25])),
        "ba": str(rng.choice(["notpresent", "present"], p=[0.85, 0.15])),
        "bgr": round(float(_clip(rng.normal(165, 75), 70, 490))),
        "bu": round(float(_clip(rng.normal(75, 45), 15, 300)), 1),
        "sc": round(float(_clip(rng.normal(4.0, 3.0), 0.6, 24.0)), 1),
        "sod": round(float(_clip(rng.normal(134, 6), 111, 146))),
        "pot": round(float(_clip(rng.normal(4.9, 1.4), 2.8, 12.0)), 1),
        "hemo": round(float(_clip(rng.normal(10.3 if severe else 12.3, 1.8), 3.5, 15.0)), 1),
        "pcv": round(float(_clip(rng.normal(32 if severe else 38, 6), 12, 48))),
        "wc": round(float(_clip(rng.normal(9100, 3200), 2900, 21000)), -2),
        "rc": round(float(_clip(rng.normal(3.8 if severe else 4.5, 0.9), 2.0, 6.0)), 1),
        "htn": str(rng.choice(["yes", "no"], p=[0.6, 0.4])),
        "dm": str(rng.choice(["yes", "no"], p=[0.45, 0.55])),
        "cad": str(rng.choice(["yes", "no"], p=[0.25, 0.75])),
        "appet": str(rng.choice(["good", "poor"], p=[0.6, 0.4])),
        "pe": str(rng.choice(["yes", "no"], p=[0.3, 0.7])),
        "ane": str(rng.choice(["yes", "no"], p=[0.35, 0.65])),
    }


def generate_rows(
    n_ckd: int = 250, n_healthy: int = 150, seed: int = DEFAULT_SEED
) -> list[dict]:
    """Rows as {column: value-or-None} dicts plus the class label."""
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(n_ckd):
        rows.append((_ckd_row(rng), CKD))
    for _ in range(n_healthy):
        rows.append((_healthy_row(rng), NOT_CKD))
    order = rng.permutation(len(rows))
    out = []
    for i in order:
        values, label = rows[i]
        row = dict(values)
        for name, rate in MISSING_RATES.items():
            if rng.random() < rate:
                row[name] = None
        row[CLASS_COLUMN] = label
        out.append(row)
    return out


def _cell(value) -> str:
    if value is None:
        return "?"
    if isinstance(value, float):
        if value == int(value) and abs(value) < 1e15:
            return str(int(value))
        return f"{value:g}"
    return str(value)


def write_csv(path: str | Path, rows: list[dict]) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(METRIC_FIELDS) + [CLASS_COLUMN])
        for row in rows:
            writer.writerow([_cell(row[name]) for name in METRIC_FIELDS] + [row[CLASS_COLUMN]])


def write_synthetic_dataset(path: str | Path, seed: int = DEFAULT_SEED) -> None:
    write_csv(path, generate_rows(seed=seed))
