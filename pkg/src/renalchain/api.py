"""HTTP surface of a node. All responses use the canonical JSON form."""

from __future__ import annotations

import logging

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .canonical import Fixed6, canonical_json
from .domain import OrganTransaction
from .errors import AuthFailed, InvalidRecord, InvalidSignature, KeyMismatch
from .node import Node

logger = logging.getLogger(__name__)


def cjson(payload, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status_code,
        media_type="application/json",
    )


def error_response(status_code: int, error: str, detail: str) -> Response:
    return cjson({"detail": detail, "error": error}, status_code)


def create_app(node: Node) -> FastAPI:
    app = FastAPI(title="renalchain node", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.node = node

    @app.get("/chain")
    def get_chain():
        return cjson(node.chain_payload())

    @app.get("/health")
    def get_health():
        return cjson(node.health_payload())

    @app.get("/alerts")
    def get_alerts(since: int | None = None):
        return cjson(node.alerts_payload(since))

    @app.post("/nodes/register")
    async def register(request: Request):
        body = await _json_body(request)
        if body is None:
            return error_response(401, "AuthFailed", "body is not valid JSON")
        try:
            node.register_peer(
                address=body.get("address"),
                pubkey=body.get("pubkey"),
                epoch_minute=body.get("epoch_minute"),
                join_proof=body.get("join_proof"),
            )
        except AuthFailed as exc:
            return error_response(401, "AuthFailed", str(exc))
        peers = [
            {"address": p.address, "pubkey": p.pubkey}
            for p in node.registry.list()
            if p.address != body.get("address")
        ]
        return cjson(
            {
                "peers": peers,
                "self": {"address": node.config.address, "pubkey": node.keypair.public_hex},
            },
            201,
        )

    @app.post("/transactions")
    async def post_transaction(request: Request):
        body = await _json_body(request)
        if body is None or "transaction" not in body:
            return error_response(400, "InvalidRecord", "expected a {transaction: ...} body")
        try:
            tx = OrganTransaction.from_dict(body["transaction"])
            next_index, enriched = node.submit_transaction(tx)
        except InvalidRecord as exc:
            return error_response(400, "InvalidRecord", str(exc))
        except InvalidSignature as exc:
            return error_response(400, "InvalidSignature", str(exc))
        except KeyMismatch as exc:
            return error_response(400, "KeyMismatch", str(exc))
        return cjson(
            {
                "next_block_index": next_index,
                "red_flag": enriched.red_flag,
                "tx_id": enriched.tx_id,
                "viability": Fixed6(enriched.viability),
            },
            201,
        )

    @app.post("/mine")
    def post_mine():
        block = node.mine()
        return cjson({"block": block.to_dict()}, 201)

    @app.post("/consensus")
    def post_consensus():
        adopted = node.run_consensus()
        return cjson({"adopted": adopted, "length": len(node.chain)})

    return app


async def _json_body(request: Request):
    try:
        body = await request.json()
    except Exception:
        return None
    return body if isinstance(body, dict) else None
