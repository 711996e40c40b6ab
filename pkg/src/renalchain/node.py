"""The networked node: peers, mempool, mining, and conflict resolution.

One Node owns one Chain. All mutation goes through a single writer lock;
readers take the lock only long enough to snapshot references, and no
outbound peer call ever holds it. Timestamps come from an injected clock so
monotonicity is testable.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import httpx

from .canonical import Fixed6, canonical_bytes, canonical_json, format_timestamp
from .domain import (
    DEFAULT_RED_FLAG_THRESHOLD,
    OrganTransaction,
    attach_viability,
    verify_transaction,
)
from .errors import AuthFailed, InvalidRecord, InvalidSignature, NoPeers
from .keys import Keypair, verify_hex
from .ledger import (
    DEFAULT_DIFFICULTY,
    Block,
    Chain,
    new_block,
    proof_of_work,
    validate_chain,
)

logger = logging.getLogger(__name__)

JOIN_SKEW_MINUTES = 2


@dataclass(frozen=True)
class PeerInfo:
    address: str
    pubkey: str
    verified_at: datetime


class PeerRegistry:
    """Verified peers, unique by address."""

    def __init__(self):
        self._peers: dict[str, PeerInfo] = {}

    def add(self, peer: PeerInfo) -> bool:
        """True if the peer was new; a known address is left untouched."""
        if peer.address in self._peers:
            return False
        self._peers[peer.address] = peer
        return True

    def __contains__(self, address: str) -> bool:
        return address in self._peers

    def __len__(self) -> int:
        return len(self._peers)

    def list(self) -> list[PeerInfo]:
        return sorted(self._peers.values(), key=lambda p: p.address)


@dataclass
class NodeConfig:
    address: str
    difficulty: int = DEFAULT_DIFFICULTY
    threshold: float = DEFAULT_RED_FLAG_THRESHOLD
    join_token: str = ""
    journal_path: Path | None = None


def join_message(address: str, epoch_minute: int, join_token: str) -> bytes:
    """Canonical bytes a candidate node signs to prove identity and freshness."""
    return canonical_bytes(
        {"address": address, "epoch_minute": epoch_minute, "join_token": join_token}
    )


def make_join_proof(keypair: Keypair, address: str, epoch_minute: int, join_token: str) -> str:
    return keypair.sign_hex(join_message(address, epoch_minute, join_token))


class HttpPeerClient:
    """Outbound peer calls over HTTP; every method may raise httpx errors."""

    def __init__(self, timeout: float = 5.0):
        self._timeout = timeout

    def fetch_chain(self, address: str) -> dict:
        resp = httpx.get(f"http://{address}/chain", timeout=self._timeout)
        resp.raise_for_status()
        return resp.json()

    def notify_consensus(self, address: str) -> None:
        httpx.post(f"http://{address}/consensus", json={}, timeout=self._timeout)

    def register(self, address: str, payload: dict) -> httpx.Response:
        return httpx.post(
            f"http://{address}/nodes/register",
            content=canonical_json(payload).encode("utf-8"),
            headers={"content-type": "application/json"},
            timeout=self._timeout,
        )


class Node:
    def __init__(
        self,
        config: NodeConfig,
        keypair: Keypair,
        model,
        *,
        chain: Chain | None = None,
        clock=None,
        transport=None,
    ):
        self.config = config
        self.keypair = keypair
        self.model = model
        self.chain = chain if chain is not None else Chain.new(config.difficulty)
        self.mempool: list[OrganTransaction] = []
        self.registry = PeerRegistry()
        self.clock = clock or (lambda: datetime.now(timezone.utc))
        self.transport = transport or HttpPeerClient()
        self.lock = threading.Lock()

    # -- peer management ---------------------------------------------------

    def register_peer(
        self, address: str, pubkey: str, epoch_minute: int, join_proof: str
    ) -> bool:
        """Verify a joining node; True if added, False if already known.

        The proof must be a signature over (address, epoch minute, shared
        join token) under the advertised key, at most 2 minutes of skew.
        """
        if not isinstance(address, str) or not address:
            raise AuthFailed("missing address")
        now_minute = int(self.clock().timestamp() // 60)
        if not isinstance(epoch_minute, int) or abs(now_minute - epoch_minute) > JOIN_SKEW_MINUTES:
            raise AuthFailed("stale join proof")
        message = join_message(address, epoch_minute, self.config.join_token)
        if not isinstance(pubkey, str) or not verify_hex(pubkey, str(join_proof), message):
            raise AuthFailed("join proof does not verify")
        with self.lock:
            added = self.registry.add(PeerInfo(address, pubkey, self.clock()))
        if added:
            logger.info("registered peer %s", address)
        return added

    def peer_addresses(self) -> list[str]:
        with self.lock:
            return [p.address for p in self.registry.list()]

    # -- chain sync --------------------------------------------------------

    def fetch_peer_chains(self) -> list[Chain]:
        """Pull every peer's chain; unreachable or malformed peers are skipped."""
        chains = []
        for address in self.peer_addresses():
            try:
                payload = self.transport.fetch_chain(address)
                blocks = [Block.from_dict(b) for b in payload["blocks"]]
                chains.append(Chain(blocks=blocks, difficulty=self.config.difficulty))
            except Exception as exc:
                logger.warning("could not fetch chain from %s: %s", address, exc)
        return chains

    def sync_on_join(self) -> bool:
        """Adopt the network's chain after joining; NoPeers if none answered."""
        if not self.peer_addresses():
            raise NoPeers("no verified peers to sync from")
        chains = self.fetch_peer_chains()
        if not chains:
            raise NoPeers("all peers unreachable")
        return self.resolve_conflicts(chains)

    def resolve_conflicts(self, candidate_chains: list[Chain]) -> bool:
        """Adopt the strictly longest valid candidate; ties keep the local chain.

        Nothing submitted here is ever silently dropped: transactions sitting
        in the mempool and transactions mined into now-orphaned local blocks
        are both re-queued unless the adopted chain already contains them.
        """
        best = None
        for candidate in candidate_chains:
            if best is not None and len(candidate) <= len(best):
                continue
            if validate_chain(candidate, threshold=self.config.threshold).is_valid:
                best = candidate
        with self.lock:
            if best is None or len(best) <= len(self.chain):
                return False
            mined = {tx.tx_id for block in best.blocks for tx in block.transactions}
            orphaned = [
                tx for block in self.chain.blocks for tx in block.transactions
                if tx.tx_id not in mined
            ]
            pending = [tx for tx in self.mempool if tx.tx_id not in mined]
            requeued: dict[str, OrganTransaction] = {}
            for tx in orphaned + pending:
                requeued.setdefault(tx.tx_id, tx)
            self.mempool = list(requeued.values())
            self.chain = Chain(blocks=list(best.blocks), difficulty=self.config.difficulty)
            self._write_journal_locked()
        logger.info("adopted a chain of length %d", len(best))
        return True

    def run_consensus(self) -> bool:
        """One consensus round: pull all peer chains, keep the longest valid."""
        return self.resolve_conflicts(self.fetch_peer_chains())

    # -- transactions and mining -------------------------------------------

    def submit_transaction(self, tx: OrganTransaction) -> tuple[int, OrganTransaction]:
        """Verify, score, and queue a transaction.

        Returns (index of the block that will include it, enriched copy).
        A red flag is recorded and alerted, never rejected: the ledger's job
        is to show deterioration, stopping transport is the operator's call.
        """
        if not verify_transaction(tx, threshold=self.config.threshold):
            raise InvalidSignature("transaction failed verification")
        enriched = attach_viability(tx, self.model, self.config.threshold, self.keypair)
        with self.lock:
            if all(t.tx_id != enriched.tx_id for t in self.mempool):
                self.mempool.append(enriched)
            next_index = self.chain.tip.index + 1
        if enriched.red_flag:
            logger.warning(
                "RED FLAG: tx %s viability %.6f below threshold %.2f",
                enriched.tx_id, enriched.viability, self.config.threshold,
            )
        return next_index, enriched

    def mine(self, now: datetime | None = None) -> Block:
        """Mine the mempool into a new block and announce the new tip.

        The nonce scan runs outside the writer lock; if another writer moved
        the tip meanwhile, the scan restarts against the new tip.
        """
        while True:
            with self.lock:
                tip = self.chain.tip
            proof = proof_of_work(tip, self.config.difficulty)
            timestamp = now if now is not None else self.clock()
            with self.lock:
                if self.chain.tip is not tip:
                    continue  # tip moved during the scan
                if timestamp < tip.timestamp:
                    timestamp = tip.timestamp  # keep chain timestamps non-decreasing
                block = new_block(
                    self.chain, proof, list(self.mempool), timestamp,
                    threshold=self.config.threshold,
                )
                self.chain.blocks.append(block)
                self.mempool = []
                self._append_journal_locked(block)
                break
        self._announce_tip()
        return block

    def _announce_tip(self) -> None:
        for address in self.peer_addresses():
            try:
                self.transport.notify_consensus(address)
            except Exception as exc:
                logger.warning("tip announcement to %s failed: %s", address, exc)

    # -- queries -------------------------------------------------------------

    def chain_payload(self) -> dict:
        with self.lock:
            blocks = list(self.chain.blocks)
            difficulty = self.chain.difficulty
        return {
            "blocks": [b.to_dict() for b in blocks],
            "difficulty": difficulty,
            "length": len(blocks),
        }

    def health_payload(self) -> dict:
        with self.lock:
            return {
                "node": self.config.address,
                "peers": len(self.registry),
                "chain_length": len(self.chain),
                "mempool": len(self.mempool),
            }

    def alerts_payload(self, since: int | None = None) -> dict:
        """Red-flag transactions at block indexes > since, plus pending ones."""
        floor = -1 if since is None else since
        with self.lock:
            blocks = list(self.chain.blocks)
            pending = list(self.mempool)
        alerts = []
        for block in blocks:
            if block.index <= floor:
                continue
            for tx in block.transactions:
                if tx.red_flag:
                    alerts.append(_alert_entry(tx, block.index))
        alerts.sort(key=lambda a: (a["block_index"], a["recorded_at"]))
        for tx in sorted(pending, key=lambda t: format_timestamp(t.location.recorded_at)):
            if tx.red_flag:
                alerts.append(_alert_entry(tx, None))
        return {"alerts": alerts}

    # -- persistence ---------------------------------------------------------

    def _append_journal_locked(self, block: Block) -> None:
        if self.config.journal_path is None:
            return
        with self.config.journal_path.open("a") as fh:
            fh.write(canonical_json(block.to_dict()) + "\n")

    def _write_journal_locked(self) -> None:
        if self.config.journal_path is None:
            return
        tmp = self.config.journal_path.with_suffix(".tmp")
        with tmp.open("w") as fh:
            for block in self.chain.blocks:
                fh.write(canonical_json(block.to_dict()) + "\n")
        tmp.replace(self.config.journal_path)


def _alert_entry(tx: OrganTransaction, block_index: int | None) -> dict:
    return {
        "block_index": block_index,
        "location": tx.location.to_dict(),
        "recorded_at": format_timestamp(tx.location.recorded_at),
        "tx_id": tx.tx_id,
        "viability": None if tx.viability is None else Fixed6(tx.viability),
    }


def load_journal(path: Path, difficulty: int) -> Chain:
    """Replay a chain journal (one canonical block JSON per line)."""
    import json

    blocks = []
    with path.open() as fh:
        for i, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                blocks.append(Block.from_dict(json.loads(line)))
            except (json.JSONDecodeError, InvalidRecord) as exc:
                raise InvalidRecord("journal", f"line {i}: {exc}")
    if not blocks:
        raise InvalidRecord("journal", "no blocks in journal")
    return Chain(blocks=blocks, difficulty=difficulty)
