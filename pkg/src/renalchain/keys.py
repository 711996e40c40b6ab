"""Ed25519 keypairs for transactions and peer join proofs.

Ed25519 signatures are deterministic, which keeps signed fixtures stable
across runs. Keys travel as lowercase hex: 64 chars for a public key,
128 for a signature.
"""

from __future__ import annotations

import os
from pathlib import Path

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives import serialization
from cryptography.hazmat.primitives.asymmetric.ed25519 import (
    Ed25519PrivateKey,
    Ed25519PublicKey,
)


class Keypair:
    """An Ed25519 private key plus its hex-encoded public half."""

    __slots__ = ("_private", "public_hex")

    def __init__(self, private: Ed25519PrivateKey):
        self._private = private
        raw = private.public_key().public_bytes(
            serialization.Encoding.Raw, serialization.PublicFormat.Raw
        )
        self.public_hex = raw.hex()

    @classmethod
    def generate(cls, seed: bytes | None = None) -> "Keypair":
        """Create a keypair; pass a fixed 32-byte seed for reproducible keys."""
        if seed is None:
            seed = os.urandom(32)
        if len(seed) != 32:
            raise ValueError("Ed25519 seed must be exactly 32 bytes")
        return cls(Ed25519PrivateKey.from_private_bytes(seed))

    @classmethod
    def from_private_hex(cls, text: str) -> "Keypair":
        return cls.generate(bytes.fromhex(text.strip()))

    @classmethod
    def load(cls, path: str | Path) -> "Keypair":
        return cls.from_private_hex(Path(path).read_text())

    def save(self, path: str | Path) -> None:
        p = Path(path)
        p.write_text(self.private_hex() + "\n")
        try:
            p.chmod(0o600)
        except OSError:
            pass

    def private_hex(self) -> str:
        raw = self._private.private_bytes(
            serialization.Encoding.Raw,
            serialization.PrivateFormat.Raw,
            serialization.NoEncryption(),
        )
        return raw.hex()

    def sign_hex(self, message: bytes) -> str:
        return self._private.sign(message).hex()


def verify_hex(public_hex: str, signature_hex: str, message: bytes) -> bool:
    """True iff the signature verifies; malformed inputs simply fail."""
    try:
        public = Ed25519PublicKey.from_public_bytes(bytes.fromhex(public_hex))
        public.verify(bytes.fromhex(signature_hex), message)
        return True
    except (InvalidSignature, ValueError, TypeError):
        return False
