"""Organ-transfer transaction model.

A transaction is one signed custody/health event for a donor kidney:
who it came from, who it is going to, where it was observed, the full
24-attribute kidney measurement vector, and (once scored) the viability
probability plus the red-flag marker. The Ed25519 signature covers the
canonical bytes of every field except the signature itself.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, replace
from datetime import datetime

from .canonical import (
    Fixed6,
    canonical_bytes,
    format_timestamp,
    parse_timestamp,
    quantize6,
)
from .errors import InvalidRecord, KeyMismatch
from .keys import Keypair, verify_hex

BLOOD_TYPES = ("A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-")

DEFAULT_RED_FLAG_THRESHOLD = 0.5

# The 24 attributes of the UCI chronic-kidney-disease schema, in its
# published column order. Units: age years, bp mm Hg, bgr/bu/sc mg/dL,
# sod/pot mEq/L, hemo g/dL, pcv %, wc cells/uL, rc millions/uL.
NUMERIC_METRICS = (
    "age", "bp", "sg", "al", "su", "bgr", "bu", "sc",
    "sod", "pot", "hemo", "pcv", "wc", "rc",
)
CATEGORICAL_LEVELS = {
    "rbc": ("normal", "abnormal"),
    "pc": ("normal", "abnormal"),
    "pcc": ("notpresent", "present"),
    "ba": ("notpresent", "present"),
    "htn": ("yes", "no"),
    "dm": ("yes", "no"),
    "cad": ("yes", "no"),
    "appet": ("good", "poor"),
    "pe": ("yes", "no"),
    "ane": ("yes", "no"),
}
METRIC_FIELDS = (
    "age", "bp", "sg", "al", "su", "rbc", "pc", "pcc", "ba", "bgr", "bu",
    "sc", "sod", "pot", "hemo", "pcv", "wc", "rc", "htn", "dm", "cad",
    "appet", "pe", "ane",
)
SG_LEVELS = (1.005, 1.010, 1.015, 1.020, 1.025)


def _require_number(field: str, value, *, allow_none: bool = False):
    if value is None and allow_none:
        return None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidRecord(field, "expected a number")
    return float(value)


def _require_str(field: str, value) -> str:
    if not isinstance(value, str):
        raise InvalidRecord(field, "expected a string")
    return value


@dataclass(frozen=True)
class DonorRecord:
    donor_id: str
    name: str
    age: int
    blood_type: str

    def validate(self) -> None:
        _require_str("donor_id", self.donor_id)
        _require_str("name", self.name)
        if isinstance(self.age, bool) or not isinstance(self.age, int):
            raise InvalidRecord("age", "expected an integer")
        if not 0 <= self.age <= 130:
            raise InvalidRecord("age", f"{self.age} outside [0, 130]")
        if self.blood_type not in BLOOD_TYPES:
            raise InvalidRecord("blood_type", f"{self.blood_type!r} is not a blood type")

    def to_dict(self) -> dict:
        return {
            "age": self.age,
            "blood_type": self.blood_type,
            "donor_id": self.donor_id,
            "name": self.name,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DonorRecord":
        rec = cls(
            donor_id=data.get("donor_id"),
            name=data.get("name"),
            age=data.get("age"),
            blood_type=data.get("blood_type"),
        )
        rec.validate()
        return rec


@dataclass(frozen=True)
class RecipientRecord:
    recipient_id: str
    name: str
    age: int
    blood_type: str

    def validate(self) -> None:
        _require_str("recipient_id", self.recipient_id)
        _require_str("name", self.name)
        if isinstance(self.age, bool) or not isinstance(self.age, int):
            raise InvalidRecord("age", "expected an integer")
        if not 0 <= self.age <= 130:
            raise InvalidRecord("age", f"{self.age} outside [0, 130]")
        if self.blood_type not in BLOOD_TYPES:
            raise InvalidRecord("blood_type", f"{self.blood_type!r} is not a blood type")

    def to_dict(self) -> dict:
        return {
            "age": self.age,
            "blood_type": self.blood_type,
            "name": self.name,
            "recipient_id": self.recipient_id,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RecipientRecord":
        rec = cls(
            recipient_id=data.get("recipient_id"),
            name=data.get("name"),
            age=data.get("age"),
            blood_type=data.get("blood_type"),
        )
        rec.validate()
        return rec


@dataclass(frozen=True)
class LocationReading:
    latitude: float
    longitude: float
    recorded_at: datetime
    label: str

    def validate(self) -> None:
        lat = _require_number("latitude", self.latitude)
        lon = _require_number("longitude", self.longitude)
        if not -90.0 <= lat <= 90.0:
            raise InvalidRecord("latitude", f"{lat} outside [-90, 90]")
        if not -180.0 <= lon <= 180.0:
            raise InvalidRecord("longitude", f"{lon} outside [-180, 180]")
        if not isinstance(self.recorded_at, datetime) or self.recorded_at.tzinfo is None:
            raise InvalidRecord("recorded_at", "expected a timezone-aware instant")
        _require_str("label", self.label)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "latitude": float(self.latitude),
            "longitude": float(self.longitude),
            "recorded_at": format_timestamp(self.recorded_at),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LocationReading":
        recorded = data.get("recorded_at")
        try:
            recorded = parse_timestamp(recorded) if isinstance(recorded, str) else recorded
        except ValueError as exc:
            raise InvalidRecord("recorded_at", str(exc))
        rec = cls(
            latitude=data.get("latitude"),
            longitude=data.get("longitude"),
            recorded_at=recorded,
            label=data.get("label"),
        )
        rec.validate()
        return rec


@dataclass(frozen=True)
class HealthMetrics:
    """One kidney measurement vector; every attribute may be missing."""

    age: float | None = None
    bp: float | None = None
    sg: float | None = None
    al: float | None = None
    su: float | None = None
    rbc: str | None = None
    pc: str | None = None
    pcc: str | None = None
    ba: str | None = None
    bgr: float | None = None
    bu: float | None = None
    sc: float | None = None
    sod: float | None = None
    pot: float | None = None
    hemo: float | None = None
    pcv: float | None = None
    wc: float | None = None
    rc: float | None = None
    htn: str | None = None
    dm: str | None = None
    cad: str | None = None
    appet: str | None = None
    pe: str | None = None
    ane: str | None = None

    def validate(self) -> None:
        for name in NUMERIC_METRICS:
            value = getattr(self, name)
            if value is None:
                continue
            value = _require_number(name, value)
            if value < 0:
                raise InvalidRecord(name, f"{value} is negative")
            if name == "sg" and value not in SG_LEVELS:
                raise InvalidRecord("sg", f"{value} is not one of the 5 specific-gravity levels")
        for name, levels in CATEGORICAL_LEVELS.items():
            value = getattr(self, name)
            if value is not None and value not in levels:
                raise InvalidRecord(name, f"{value!r} not in {levels}")

    def to_dict(self) -> dict:
        out = {}
        for name in METRIC_FIELDS:
            value = getattr(self, name)
            if value is not None and name in NUMERIC_METRICS:
                value = float(value)
            out[name] = value
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "HealthMetrics":
        unknown = set(data) - set(METRIC_FIELDS)
        if unknown:
            raise InvalidRecord(sorted(unknown)[0], "unknown metric")
        metrics = cls(**{k: data.get(k) for k in METRIC_FIELDS})
        metrics.validate()
        return metrics


@dataclass(frozen=True)
class OrganTransaction:
    tx_id: str
    donor: DonorRecord
    recipient: RecipientRecord
    location: LocationReading
    metrics: HealthMetrics
    viability: float | None
    red_flag: bool
    submitter_pubkey: str
    signature: str

    def validate(self) -> None:
        if not _is_hex(self.tx_id, 64):
            raise InvalidRecord("tx_id", "expected 32 bytes of lowercase hex")
        self.donor.validate()
        self.recipient.validate()
        self.location.validate()
        self.metrics.validate()
        if self.viability is not None:
            v = _require_number("viability", self.viability)
            if not 0.0 <= v <= 1.0:
                raise InvalidRecord("viability", f"{v} outside [0, 1]")
        if not isinstance(self.red_flag, bool):
            raise InvalidRecord("red_flag", "expected a boolean")
        if not _is_hex(self.submitter_pubkey, 64):
            raise InvalidRecord("submitter_pubkey", "expected 32 bytes of lowercase hex")
        if not _is_hex(self.signature, 128):
            raise InvalidRecord("signature", "expected 64 bytes of lowercase hex")

    def signed_payload(self) -> dict:
        """Every field except the signature, ready for canonical encoding."""
        viability = None if self.viability is None else Fixed6(self.viability)
        return {
            "donor": self.donor.to_dict(),
            "location": self.location.to_dict(),
            "metrics": self.metrics.to_dict(),
            "recipient": self.recipient.to_dict(),
            "red_flag": self.red_flag,
            "submitter_pubkey": self.submitter_pubkey,
            "tx_id": self.tx_id,
            "viability": viability,
        }

    def signing_bytes(self) -> bytes:
        return canonical_bytes(self.signed_payload())

    def to_dict(self) -> dict:
        """Storage form: the signed payload plus the signature itself."""
        out = self.signed_payload()
        out["signature"] = self.signature
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "OrganTransaction":
        if not isinstance(data, dict):
            raise InvalidRecord("transaction", "expected an object")
        expected = {
            "donor", "location", "metrics", "recipient", "red_flag",
            "submitter_pubkey", "tx_id", "viability", "signature",
        }
        unknown = set(data) - expected
        if unknown:
            raise InvalidRecord(sorted(unknown)[0], "unknown transaction field")
        missing = expected - set(data)
        if missing:
            raise InvalidRecord(sorted(missing)[0], "missing transaction field")
        for key in ("donor", "recipient", "location", "metrics"):
            if not isinstance(data[key], dict):
                raise InvalidRecord(key, "expected an object")
        tx = cls(
            tx_id=data["tx_id"],
            donor=DonorRecord.from_dict(data["donor"]),
            recipient=RecipientRecord.from_dict(data["recipient"]),
            location=LocationReading.from_dict(data["location"]),
            metrics=HealthMetrics.from_dict(data["metrics"]),
            viability=data["viability"],
            red_flag=data["red_flag"],
            submitter_pubkey=data["submitter_pubkey"],
            signature=data["signature"],
        )
        tx.validate()
        return tx


def _is_hex(value, length: int) -> bool:
    if not isinstance(value, str) or len(value) != length:
        return False
    return all(c in "0123456789abcdef" for c in value)


def new_transaction(
    donor: DonorRecord,
    recipient: RecipientRecord,
    location: LocationReading,
    metrics: HealthMetrics,
    signing_key: Keypair,
    *,
    rand_bytes=secrets.token_bytes,
) -> OrganTransaction:
    """Build and sign a fresh custody/health event.

    The transaction id comes from the injected randomness source so that two
    legitimately identical readings stay distinct events. Viability is absent
    until a scoring node enriches the transaction.
    """
    donor.validate()
    recipient.validate()
    location.validate()
    metrics.validate()
    tx = OrganTransaction(
        tx_id=rand_bytes(32).hex(),
        donor=donor,
        recipient=recipient,
        location=location,
        metrics=metrics,
        viability=None,
        red_flag=False,
        submitter_pubkey=signing_key.public_hex,
        signature="0" * 128,
    )
    return replace(tx, signature=signing_key.sign_hex(tx.signing_bytes()))


def verify_transaction(
    tx: OrganTransaction,
    *,
    threshold: float = DEFAULT_RED_FLAG_THRESHOLD,
) -> bool:
    """True iff invariants hold and the signature covers the canonical bytes.

    Never raises: any malformed field, a broken red-flag/viability pairing,
    or a bad signature all simply return False.
    """
    try:
        tx.validate()
        expected_flag = tx.viability is not None and tx.viability < threshold
        if tx.red_flag != expected_flag:
            return False
        return verify_hex(tx.submitter_pubkey, tx.signature, tx.signing_bytes())
    except Exception:
        return False


def attach_viability(
    tx: OrganTransaction,
    model,
    threshold: float,
    signing_key: Keypair,
) -> OrganTransaction:
    """Score the transaction's metrics and re-sign the enriched record.

    The score is quantized to the 6-digit decimal grid used by the canonical
    encoding so the stored value and the signed bytes agree exactly, and the
    red flag is raised when the quantized score falls strictly below the
    threshold.
    """
    if signing_key.public_hex != tx.submitter_pubkey:
        raise KeyMismatch("signing key does not match submitter_pubkey")
    viability = quantize6(model.predict_proba(tx.metrics))
    enriched = replace(
        tx,
        viability=viability,
        red_flag=viability < threshold,
    )
    return replace(enriched, signature=signing_key.sign_hex(enriched.signing_bytes()))
