import pytest
from fastapi.testclient import TestClient

from conftest import TickingClock, make_tx
from renalchain.api import create_app
from renalchain.canonical import canonical_json
from renalchain.keys import Keypair
from renalchain.node import Node, NodeConfig, make_join_proof


class StubModel:
    def __init__(self, proba=1.0):
        self.proba = proba

    def predict_proba(self, metrics):
        return self.proba


@pytest.fixture()
def node(keypair):
    config = NodeConfig(address="self:1", difficulty=1, threshold=0.5, join_token="secret")
    n = Node(config, keypair, StubModel(0.9), clock=TickingClock())
    return n


@pytest.fixture()
def client(node):
    return TestClient(create_app(node))


def register_payload(node, keypair, address="peer:7", token="secret"):
    minute = int(node.clock.now.timestamp() // 60)
    return {
        "address": address,
        "pubkey": keypair.public_hex,
        "epoch_minute": minute,
        "join_proof": make_join_proof(keypair, address, minute, token),
    }


def test_health_shape(client, node):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"chain_length": 1, "mempool": 0, "node": "self:1", "peers": 0}


def test_chain_is_canonical_bytes(client, node):
    resp = client.get("/chain")
    assert resp.status_code == 200
    assert resp.content.decode() == canonical_json(node.chain_payload())
    body = resp.json()
    assert body["length"] == 1
    assert body["difficulty"] == 1
    assert body["blocks"][0]["index"] == 0


def test_register_success_and_fanout_payload(client, node, other_keypair):
    resp = client.post("/nodes/register", json=register_payload(node, other_keypair))
    assert resp.status_code == 201
    body = resp.json()
    assert body["self"] == {"address": "self:1", "pubkey": node.keypair.public_hex}
    assert body["peers"] == []  # newcomer excluded from its own fan-out list
    assert len(node.registry) == 1


def test_register_returns_peer_list(client, node, other_keypair):
    first = Keypair.generate(b"\x55" * 32)
    client.post("/nodes/register", json=register_payload(node, first, address="peer:1"))
    resp = client.post("/nodes/register", json=register_payload(node, other_keypair))
    assert resp.status_code == 201
    assert resp.json()["peers"] == [{"address": "peer:1", "pubkey": first.public_hex}]


def test_register_bad_token_is_401(client, node, other_keypair):
    payload = register_payload(node, other_keypair, token="wrong")
    resp = client.post("/nodes/register", json=payload)
    assert resp.status_code == 401
    assert resp.json()["error"] == "AuthFailed"
    assert len(node.registry) == 0


def test_register_garbage_body_is_401(client):
    resp = client.post("/nodes/register", content=b"not json")
    assert resp.status_code == 401


def test_submit_transaction_receipt(client, node, keypair):
    tx = make_tx(keypair)
    resp = client.post("/transactions", json={"transaction": tx.to_dict()})
    assert resp.status_code == 201
    body = resp.json()
    assert body["next_block_index"] == 1
    assert body["red_flag"] is False
    assert body["viability"] == 0.9
    assert body["tx_id"] == tx.tx_id


def test_submit_red_flag_receipt(node, keypair):
    node.model = StubModel(0.05)
    client = TestClient(create_app(node))
    resp = client.post("/transactions", json={"transaction": make_tx(keypair).to_dict()})
    assert resp.status_code == 201
    assert resp.json()["red_flag"] is True


def test_submit_tampered_is_400(client, node, keypair):
    tx = make_tx(keypair).to_dict()
    tx["red_flag"] = True
    resp = client.post("/transactions", json={"transaction": tx})
    assert resp.status_code == 400
    assert resp.json()["error"] == "InvalidSignature"
    assert node.mempool == []


def test_submit_malformed_record_is_400(client, keypair):
    tx = make_tx(keypair).to_dict()
    tx["donor"]["blood_type"] = "C+"
    resp = client.post("/transactions", json={"transaction": tx})
    assert resp.status_code == 400
    assert resp.json()["error"] == "InvalidRecord"
    assert "blood_type" in resp.json()["detail"]


def test_submit_foreign_key_is_400(client, other_keypair):
    resp = client.post(
        "/transactions", json={"transaction": make_tx(other_keypair).to_dict()}
    )
    assert resp.status_code == 400
    assert resp.json()["error"] == "KeyMismatch"


def test_submit_missing_wrapper_is_400(client):
    assert client.post("/transactions", json={"nope": 1}).status_code == 400


def test_mine_returns_block(client, node, keypair):
    client.post("/transactions", json={"transaction": make_tx(keypair).to_dict()})
    resp = client.post("/mine", json={})
    assert resp.status_code == 201
    block = resp.json()["block"]
    assert block["index"] == 1
    assert len(block["transactions"]) == 1
    assert client.get("/health").json()["mempool"] == 0


def test_consensus_without_peers(client):
    resp = client.post("/consensus", json={})
    assert resp.status_code == 200
    assert resp.json() == {"adopted": False, "length": 1}


def test_alerts_since_filter(node, keypair):
    node.model = StubModel(0.1)
    client = TestClient(create_app(node))
    client.post("/transactions", json={"transaction": make_tx(keypair).to_dict()})
    client.post("/mine", json={})
    resp = client.get("/alerts", params={"since": 0})
    alerts = resp.json()["alerts"]
    assert len(alerts) == 1
    assert alerts[0]["block_index"] == 1
    assert alerts[0]["viability"] == 0.1
    assert client.get("/alerts", params={"since": 1}).json()["alerts"] == []


def test_alerts_default_includes_everything(node, keypair):
    node.model = StubModel(0.1)
    client = TestClient(create_app(node))
    client.post("/transactions", json={"transaction": make_tx(keypair).to_dict()})
    alerts = client.get("/alerts").json()["alerts"]
    assert len(alerts) == 1
    assert alerts[0]["block_index"] is None  # still in the mempool
