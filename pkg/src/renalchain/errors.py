"""Exception types shared across the package."""

from __future__ import annotations


class RenalchainError(Exception):
    """Base class for all package errors."""


class InvalidRecord(RenalchainError):
    """A domain record violates one of its invariants."""

    def __init__(self, field: str, detail: str = ""):
        self.field = field
        self.detail = detail
        super().__init__(f"invalid record field {field!r}" + (f": {detail}" if detail else ""))


class KeyMismatch(RenalchainError):
    """Signing key does not match the transaction's submitter public key."""


class InvalidSignature(RenalchainError):
    """Submitted transaction failed verification."""


class InvalidProof(RenalchainError):
    """Proof-of-work nonce fails the difficulty predicate."""


class InvalidTransaction(RenalchainError):
    """A pending transaction failed verification during block assembly."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"transaction {index} failed verification")


class ParseError(RenalchainError):
    """A dataset cell could not be parsed."""

    def __init__(self, line: int, column: str, reason: str):
        self.line = line
        self.column = column
        self.reason = reason
        super().__init__(f"line {line}, column {column!r}: {reason}")


class SchemaError(RenalchainError):
    """Dataset file does not match the expected column layout."""


class EmptyDataset(RenalchainError):
    """Preprocessing was handed a dataset with no rows."""


class BadFraction(RenalchainError):
    """Test fraction outside (0, 1)."""


class SingleClassError(RenalchainError):
    """Training data contains only one class."""


class EmptyTrainSet(RenalchainError):
    """Training matrix has no rows."""


class EmptyTestSet(RenalchainError):
    """Evaluation matrix has no rows."""


class FormatVersionError(RenalchainError):
    """Model file is malformed or carries an unsupported version."""


class AuthFailed(RenalchainError):
    """Peer registration failed identity verification."""


class NoPeers(RenalchainError):
    """No verified peer could be reached."""
