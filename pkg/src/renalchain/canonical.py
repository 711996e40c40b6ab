"""Canonical JSON encoding shared by hashing, signing, storage, and the wire.

One byte form for one value: object keys sorted ascending bytewise, no
insignificant whitespace, UTF-8, integers decimal, floats in shortest
round-trip form, timestamps RFC 3339 with a Z suffix and microsecond
precision. Viability scores are the single exception: they are rendered
with exactly six fractional digits so ledger hashes stay stable.
"""

from __future__ import annotations

import json
import math
from datetime import datetime, timezone

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%S.%fZ"


class Fixed6(float):
    """Marker type: serialize this float with exactly 6 fractional digits."""


def quantize6(value: float) -> float:
    """Snap a probability to the 6-digit decimal grid the ledger stores."""
    return float(f"{value:.6f}")


def format_timestamp(ts: datetime) -> str:
    if ts.tzinfo is None:
        raise ValueError("timestamps must be timezone-aware")
    return ts.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)


def parse_timestamp(text: str) -> datetime:
    return datetime.strptime(text, TIMESTAMP_FORMAT).replace(tzinfo=timezone.utc)


def _encode(value, out: list) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, Fixed6):
        out.append(f"{float(value):.6f}")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            raise ValueError("non-finite float is not encodable")
        out.append(repr(value))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _encode(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        keys = sorted(value, key=lambda k: k.encode("utf-8"))
        for i, key in enumerate(keys):
            if not isinstance(key, str):
                raise TypeError(f"object keys must be strings, got {type(key).__name__}")
            if i:
                out.append(",")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(":")
            _encode(value[key], out)
        out.append("}")
    else:
        raise TypeError(f"{type(value).__name__} is not canonically encodable")


def canonical_json(value) -> str:
    out: list = []
    _encode(value, out)
    return "".join(out)


def canonical_bytes(value) -> bytes:
    return canonical_json(value).encode("utf-8")
