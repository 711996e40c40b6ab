"""Chronic-kidney-disease dataset: CSV parsing, encoding, splitting.

The file format is the plain CSV rendering of the UCI chronic-kidney-disease
ARFF: a header row, 24 feature columns in the published order plus a final
"class" column, and "?" for missing cells. Categorical attributes are
label-encoded with fixed maps; missing values are imputed with the column
median (numeric) or mode (categorical) computed from the data being
preprocessed, and the encoding recipe is kept on the model so inference
reuses the exact same numbers.
"""

from __future__ import annotations

import csv
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..domain import METRIC_FIELDS, HealthMetrics
from ..errors import BadFraction, EmptyDataset, InvalidRecord, ParseError, SchemaError

logger = logging.getLogger(__name__)

CLASS_COLUMN = "class"
CKD, NOT_CKD = "ckd", "notckd"

# Label codes are fixed, not learned: code 0 is the finding typical of a
# healthy kidney, code 1 the abnormal one.
CATEGORY_CODES = {
    "rbc": {"normal": 0, "abnormal": 1},
    "pc": {"normal": 0, "abnormal": 1},
    "pcc": {"notpresent": 0, "present": 1},
    "ba": {"notpresent": 0, "present": 1},
    "htn": {"no": 0, "yes": 1},
    "dm": {"no": 0, "yes": 1},
    "cad": {"no": 0, "yes": 1},
    "appet": {"good": 0, "poor": 1},
    "pe": {"no": 0, "yes": 1},
    "ane": {"no": 0, "yes": 1},
}


@dataclass(frozen=True)
class RawDataset:
    rows: tuple[tuple[HealthMetrics, str], ...]
    source_path: str

    def __len__(self) -> int:
        return len(self.rows)

    def class_counts(self) -> dict[str, int]:
        counts = {CKD: 0, NOT_CKD: 0}
        for _, label in self.rows:
            counts[label] += 1
        return counts


@dataclass(frozen=True)
class ColumnSpec:
    """Encoding recipe for one feature column."""

    name: str
    kind: str  # "numeric" | "binary-encoded"
    categories: dict | None
    impute: float
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "categories": self.categories,
            "degenerate": self.degenerate,
            "impute": self.impute,
            "kind": self.kind,
            "name": self.name,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ColumnSpec":
        return cls(
            name=data["name"],
            kind=data["kind"],
            categories=data["categories"],
            impute=float(data["impute"]),
            degenerate=bool(data["degenerate"]),
        )


@dataclass(frozen=True)
class EncodedMatrix:
    features: np.ndarray  # (n, 24) float64, no missing values
    targets: np.ndarray  # (n,) int64, 1 = ckd
    column_spec: tuple[ColumnSpec, ...]

    def __len__(self) -> int:
        return self.features.shape[0]


def load_dataset(path: str | Path) -> RawDataset:
    """Parse a CKD CSV file into typed rows.

    "?" and empty cells are missing; stray whitespace around cells and labels
    (the published file carries tab noise) is stripped before parsing.
    """
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file")
        header = [h.strip() for h in header]
        expected = list(METRIC_FIELDS) + [CLASS_COLUMN]
        if len(header) != len(expected):
            raise SchemaError(
                f"{path}: expected {len(expected)} columns, found {len(header)}"
            )
        if header != expected:
            raise SchemaError(f"{path}: header does not match the CKD schema")
        rows = []
        for lineno, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(expected):
                raise SchemaError(
                    f"{path}: line {lineno} has {len(cells)} columns, expected {len(expected)}"
                )
            rows.append(_parse_row(cells, lineno))
    logger.info("loaded %d rows from %s", len(rows), path)
    return RawDataset(rows=tuple(rows), source_path=str(path))


def _parse_row(cells: list[str], lineno: int) -> tuple[HealthMetrics, str]:
    values: dict = {}
    for name, cell in zip(METRIC_FIELDS, cells):
        cell = cell.strip()
        if cell in ("?", ""):
            values[name] = None
        elif name in CATEGORY_CODES:
            if cell not in CATEGORY_CODES[name]:
                raise ParseError(lineno, name, f"unknown category {cell!r}")
            values[name] = cell
        else:
            try:
                values[name] = float(cell)
            except ValueError:
                raise ParseError(lineno, name, f"not a number: {cell!r}")
    label = cells[-1].strip()
    if label not in (CKD, NOT_CKD):
        raise ParseError(lineno, CLASS_COLUMN, f"unknown label {label!r}")
    try:
        metrics = HealthMetrics(**values)
        metrics.validate()
    except InvalidRecord as exc:
        raise ParseError(lineno, exc.field, exc.detail)
    return metrics, label


def _raw_column(rows, name: str) -> np.ndarray:
    """Column as float64 with NaN for missing, categoricals coded."""
    codes = CATEGORY_CODES.get(name)
    out = np.empty(len(rows), dtype=np.float64)
    for i, (metrics, _) in enumerate(rows):
        value = getattr(metrics, name)
        if value is None:
            out[i] = math.nan
        elif codes is not None:
            out[i] = codes[value]
        else:
            out[i] = float(value)
    return out


def _impute_value(name: str, column: np.ndarray) -> tuple[float, bool]:
    present = column[~np.isnan(column)]
    if present.size == 0:
        logger.warning("column %s has no observed values; imputing 0", name)
        return 0.0, True
    if name in CATEGORY_CODES:
        counts = np.bincount(present.astype(np.int64))
        return float(np.argmax(counts)), False  # mode; ties -> lowest code
    return float(np.median(present)), False


def preprocess(raw: RawDataset) -> EncodedMatrix:
    """Encode, impute, and stack the dataset into a dense feature matrix."""
    if not raw.rows:
        raise EmptyDataset("no rows to preprocess")
    columns = []
    spec = []
    for name in METRIC_FIELDS:
        column = _raw_column(raw.rows, name)
        impute, degenerate = _impute_value(name, column)
        column[np.isnan(column)] = impute
        columns.append(column)
        kind = "binary-encoded" if name in CATEGORY_CODES else "numeric"
        categories = dict(CATEGORY_CODES[name]) if name in CATEGORY_CODES else None
        spec.append(ColumnSpec(name, kind, categories, impute, degenerate))
    targets = np.array([1 if label == CKD else 0 for _, label in raw.rows], dtype=np.int64)
    return EncodedMatrix(
        features=np.column_stack(columns),
        targets=targets,
        column_spec=tuple(spec),
    )


def encode_metrics(column_spec: tuple[ColumnSpec, ...], metrics: HealthMetrics) -> np.ndarray:
    """Encode one measurement vector with a trained model's recipe."""
    out = np.empty(len(column_spec), dtype=np.float64)
    for j, col in enumerate(column_spec):
        value = getattr(metrics, col.name)
        if value is None:
            out[j] = col.impute
        elif col.categories is not None:
            out[j] = col.categories.get(value, col.impute)
        else:
            out[j] = float(value)
    return out


def encode_rows(column_spec: tuple[ColumnSpec, ...], raw: RawDataset) -> EncodedMatrix:
    """Encode a whole dataset with a trained model's recipe."""
    if not raw.rows:
        raise EmptyDataset("no rows to encode")
    features = np.vstack([encode_metrics(column_spec, m) for m, _ in raw.rows])
    targets = np.array([1 if label == CKD else 0 for _, label in raw.rows], dtype=np.int64)
    return EncodedMatrix(features=features, targets=targets, column_spec=tuple(column_spec))


def train_test_split(
    m: EncodedMatrix, test_fraction: float, seed: int
) -> tuple[EncodedMatrix, EncodedMatrix]:
    """Deterministic shuffled partition; the test side gets floor(n*fraction)."""
    if not 0.0 < test_fraction < 1.0:
        raise BadFraction(f"test_fraction {test_fraction} outside (0, 1)")
    n = len(m)
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    n_test = int(n * test_fraction)
    test_idx, train_idx = perm[:n_test], perm[n_test:]
    make = lambda idx: EncodedMatrix(
        features=m.features[idx], targets=m.targets[idx], column_spec=m.column_spec
    )
    return make(train_idx), make(test_idx)
