"""Hash-chained ledger: blocks, proof of work, and full-chain validation.

Every block is hashed over its canonical byte form, each block links to its
predecessor's digest, and the proof-of-work predicate binds the previous
block's proof and hash so a nonce cannot be reused across forks. All
functions here are pure; mutation is the caller's job.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum

from . import kernels
from .canonical import canonical_bytes, format_timestamp, parse_timestamp
from .domain import DEFAULT_RED_FLAG_THRESHOLD, OrganTransaction, verify_transaction
from .errors import InvalidProof, InvalidRecord, InvalidTransaction

ZERO_HASH = "0" * 64
GENESIS_TIMESTAMP = datetime(2024, 1, 1, tzinfo=timezone.utc)
DEFAULT_DIFFICULTY = 4


@dataclass(frozen=True)
class Block:
    index: int
    timestamp: datetime
    transactions: tuple[OrganTransaction, ...]
    proof: int
    previous_hash: str

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "previous_hash": self.previous_hash,
            "proof": self.proof,
            "timestamp": format_timestamp(self.timestamp),
            "transactions": [tx.to_dict() for tx in self.transactions],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Block":
        if not isinstance(data, dict):
            raise InvalidRecord("block", "expected an object")
        expected = {"index", "previous_hash", "proof", "timestamp", "transactions"}
        if set(data) != expected:
            raise InvalidRecord("block", f"keys must be exactly {sorted(expected)}")
        index = data["index"]
        proof = data["proof"]
        if isinstance(index, bool) or not isinstance(index, int) or index < 0:
            raise InvalidRecord("index", "expected a non-negative integer")
        if isinstance(proof, bool) or not isinstance(proof, int) or not 0 <= proof < 2**64:
            raise InvalidRecord("proof", "expected a 64-bit unsigned integer")
        if not isinstance(data["previous_hash"], str) or len(data["previous_hash"]) != 64:
            raise InvalidRecord("previous_hash", "expected a 64-char hex digest")
        if not isinstance(data["transactions"], list):
            raise InvalidRecord("transactions", "expected a list")
        try:
            timestamp = parse_timestamp(data["timestamp"])
        except (TypeError, ValueError) as exc:
            raise InvalidRecord("timestamp", f"bad timestamp: {exc}")
        return cls(
            index=index,
            timestamp=timestamp,
            transactions=tuple(OrganTransaction.from_dict(t) for t in data["transactions"]),
            proof=proof,
            previous_hash=data["previous_hash"],
        )


def genesis_block() -> Block:
    """The fixed first block every node agrees on."""
    return Block(
        index=0,
        timestamp=GENESIS_TIMESTAMP,
        transactions=(),
        proof=0,
        previous_hash=ZERO_HASH,
    )


@dataclass
class Chain:
    blocks: list[Block]
    difficulty: int = DEFAULT_DIFFICULTY

    @classmethod
    def new(cls, difficulty: int = DEFAULT_DIFFICULTY) -> "Chain":
        return cls(blocks=[genesis_block()], difficulty=difficulty)

    @property
    def tip(self) -> Block:
        return self.blocks[-1]

    def __len__(self) -> int:
        return len(self.blocks)


class FailureKind(str, Enum):
    BAD_LINK = "BadLink"
    BAD_PROOF = "BadProof"
    BAD_SIGNATURE = "BadSignature"
    BAD_INDEX = "BadIndex"
    BAD_GENESIS = "BadGenesis"
    BAD_TIMESTAMP = "BadTimestamp"


@dataclass(frozen=True)
class ValidationFailure:
    block_index: int
    kind: FailureKind
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    failures: tuple[ValidationFailure, ...] = ()

    @property
    def verdict(self) -> str:
        return "Valid" if not self.failures else "Invalid"

    @property
    def is_valid(self) -> bool:
        return not self.failures


def canonical_encode(block: Block) -> bytes:
    """Canonical serialization of a block; the sole input to hash_block."""
    return canonical_bytes(block.to_dict())


def hash_block(block: Block) -> str:
    return hashlib.sha256(canonical_encode(block)).hexdigest()


def valid_proof(last_proof: int, proof: int, last_hash: str, difficulty: int) -> bool:
    """The proof-of-work predicate.

    SHA-256 over the ASCII string "{last_proof}:{proof}:{last_hash}" must
    start with `difficulty` zero hex digits. Difficulty 0 accepts anything.
    """
    digest = hashlib.sha256(f"{last_proof}:{proof}:{last_hash}".encode("ascii")).hexdigest()
    return digest.startswith("0" * difficulty)


def proof_of_work(last_block: Block, difficulty: int) -> int:
    """Smallest nonce satisfying valid_proof against the chain tip.

    Deterministic by construction: a linear scan from zero, so two miners
    over the same tip find the same proof.
    """
    return kernels.find_proof(last_block.proof, hash_block(last_block), difficulty)


def new_block(
    chain: Chain,
    proof: int,
    pending: list[OrganTransaction],
    now: datetime,
    *,
    threshold: float = DEFAULT_RED_FLAG_THRESHOLD,
) -> Block:
    """Assemble the next block over the chain tip; the caller appends it.

    Raises InvalidProof when the nonce fails the difficulty predicate and
    InvalidTransaction(i) for the first pending transaction that does not
    verify.
    """
    tip = chain.tip
    if not valid_proof(tip.proof, proof, hash_block(tip), chain.difficulty):
        raise InvalidProof(f"proof {proof} fails difficulty {chain.difficulty}")
    for i, tx in enumerate(pending):
        if not verify_transaction(tx, threshold=threshold):
            raise InvalidTransaction(i)
    return Block(
        index=tip.index + 1,
        timestamp=now,
        transactions=tuple(pending),
        proof=proof,
        previous_hash=hash_block(tip),
    )


def validate_chain(
    chain: Chain,
    *,
    threshold: float = DEFAULT_RED_FLAG_THRESHOLD,
) -> ValidationReport:
    """Check every block and transaction; collect all failures, first to last.

    Failures are data, not exceptions: tampering is an expected input here.
    """
    failures: list[ValidationFailure] = []
    blocks = chain.blocks
    if not blocks:
        return ValidationReport((ValidationFailure(0, FailureKind.BAD_GENESIS, "empty chain"),))
    if blocks[0] != genesis_block():
        failures.append(
            ValidationFailure(0, FailureKind.BAD_GENESIS, "first block is not the fixed genesis")
        )
    for k in range(1, len(blocks)):
        prev, block = blocks[k - 1], blocks[k]
        prev_hash = hash_block(prev)
        if block.index != prev.index + 1:
            failures.append(ValidationFailure(
                k, FailureKind.BAD_INDEX,
                f"index {block.index} does not follow {prev.index}",
            ))
        if block.previous_hash != prev_hash:
            failures.append(ValidationFailure(
                k, FailureKind.BAD_LINK, "previous_hash does not match predecessor digest",
            ))
        if block.timestamp < prev.timestamp:
            failures.append(ValidationFailure(
                k, FailureKind.BAD_TIMESTAMP, "timestamp decreases",
            ))
        if not valid_proof(prev.proof, block.proof, prev_hash, chain.difficulty):
            failures.append(ValidationFailure(
                k, FailureKind.BAD_PROOF,
                f"proof {block.proof} fails difficulty {chain.difficulty}",
            ))
        for i, tx in enumerate(block.transactions):
            if not verify_transaction(tx, threshold=threshold):
                failures.append(ValidationFailure(
                    k, FailureKind.BAD_SIGNATURE, f"transaction {i} fails verification",
                ))
    return ValidationReport(tuple(failures))
