"""Operator command line: run nodes, submit transactions, inspect chains,
train and evaluate the viability model.

Exit codes: 0 on success, nonzero on any error. Machine-readable output
goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import csv
import json
import os
import socket
import sys
from pathlib import Path

import click
import httpx

from .canonical import canonical_json
from .domain import (
    DEFAULT_RED_FLAG_THRESHOLD,
    DonorRecord,
    HealthMetrics,
    LocationReading,
    RecipientRecord,
    new_transaction,
)
from .errors import RenalchainError
from .keys import Keypair
from .ledger import Block, Chain, DEFAULT_DIFFICULTY, validate_chain
from .node import Node, NodeConfig, load_journal, make_join_proof
from .viability import dataset as ds
from .viability import forest as rf

CONTEXT = {"auto_envvar_prefix": "RENALCHAIN", "help_option_names": ["-h", "--help"]}


def fail(message: str, code: int = 1):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _color_enabled() -> bool:
    return not os.environ.get("NO_COLOR") and sys.stdout.isatty()


def echo_flag(red_flag: bool) -> None:
    text = f"red_flag={str(red_flag).lower()}"
    if _color_enabled():
        click.secho(text, fg="red" if red_flag else "green")
    else:
        click.echo(text)


@click.group(context_settings=CONTEXT)
def main():
    """Donor-kidney transport ledger with an embedded viability monitor."""


@main.command()
@click.option("--out", required=True, type=click.Path(path_type=Path), help="Key file to write.")
@click.option("--seed", default=None, help="64 hex chars; fixed seed for reproducible keys.")
def keygen(out: Path, seed: str | None):
    """Generate an Ed25519 keypair and print the public key."""
    try:
        keypair = Keypair.generate(bytes.fromhex(seed) if seed else None)
    except ValueError as exc:
        fail(str(exc))
    keypair.save(out)
    click.echo(keypair.public_hex)


# ----------------------------------------------------------------- node ----


@main.group()
def node():
    """Run and manage a ledger node."""


@node.command("start")
@click.option("--listen", default="127.0.0.1:7430", show_default=True, help="host:port to bind.")
@click.option("--difficulty", default=DEFAULT_DIFFICULTY, show_default=True)
@click.option("--threshold", default=DEFAULT_RED_FLAG_THRESHOLD, show_default=True,
              help="Viability below this raises the red flag.")
@click.option("--join-token", default="", help="Shared secret peers must prove they know.")
@click.option("--model", "model_path", required=True, type=click.Path(path_type=Path))
@click.option("--journal", "journal_path", default=None, type=click.Path(path_type=Path),
              help="Append-only chain journal; replayed and validated at startup.")
@click.option("--key", "key_path", default=None, type=click.Path(path_type=Path),
              help="Node signing key file; ephemeral key if omitted.")
@click.option("--peer", "peers", multiple=True, help="Bootstrap peer address (repeatable).")
def node_start(listen, difficulty, threshold, join_token, model_path, journal_path,
               key_path, peers):
    """Start a node, join the network via bootstrap peers, and serve."""
    import uvicorn

    from .api import create_app

    try:
        model = rf.load_model(model_path)
    except (OSError, RenalchainError) as exc:
        fail(f"cannot load model: {exc}")
    keypair = Keypair.load(key_path) if key_path else Keypair.generate()

    chain = None
    if journal_path and Path(journal_path).exists():
        try:
            chain = load_journal(Path(journal_path), difficulty)
        except RenalchainError as exc:
            fail(f"corrupt journal: {exc}")
        report = validate_chain(chain, threshold=threshold)
        if not report.is_valid:
            for f in report.failures:
                click.echo(f"journal: block {f.block_index}: {f.kind.value}: {f.detail}", err=True)
            fail("persisted chain is invalid")

    host, _, port = listen.partition(":")
    if not port:
        fail(f"--listen must be host:port, got {listen!r}")
    try:
        probe = socket.socket()
        probe.bind((host, int(port)))
        probe.close()
    except OSError as exc:
        fail(f"cannot bind {listen}: {exc}")

    config = NodeConfig(
        address=listen,
        difficulty=difficulty,
        threshold=threshold,
        join_token=join_token,
        journal_path=Path(journal_path) if journal_path else None,
    )
    service = Node(config, keypair, model, chain=chain)
    _bootstrap(service, peers, join_token)
    if journal_path and chain is None:
        with service.lock:
            service._write_journal_locked()

    uvicorn.run(create_app(service), host=host, port=int(port), log_level="warning")


def _bootstrap(service: Node, peers, join_token: str) -> None:
    """Register with bootstrap peers, fan out to their peers, then sync."""
    seen: set[str] = set()
    frontier = [p for p in peers if p]
    while frontier:
        address = frontier.pop()
        if address in seen or address == service.config.address:
            continue
        seen.add(address)
        minute = int(service.clock().timestamp() // 60)
        payload = {
            "address": service.config.address,
            "pubkey": service.keypair.public_hex,
            "epoch_minute": minute,
            "join_proof": make_join_proof(
                service.keypair, service.config.address, minute, join_token
            ),
        }
        try:
            resp = service.transport.register(address, payload)
        except Exception as exc:
            click.echo(f"warning: bootstrap peer {address} unreachable: {exc}", err=True)
            continue
        if resp.status_code == 401:
            fail(f"AuthFailed: peer {address} rejected our join proof")
        if resp.status_code != 201:
            click.echo(f"warning: peer {address} answered {resp.status_code}", err=True)
            continue
        body = resp.json()
        now = service.clock()
        from .node import PeerInfo

        with service.lock:
            service.registry.add(PeerInfo(address, body["self"]["pubkey"], now))
        for entry in body.get("peers", []):
            if entry["address"] not in seen and entry["address"] != service.config.address:
                frontier.append(entry["address"])
    if service.peer_addresses():
        try:
            service.sync_on_join()
        except RenalchainError as exc:
            click.echo(f"warning: initial sync failed: {exc}", err=True)


# ------------------------------------------------------------------- tx ----


@main.group()
def tx():
    """Submit custody/health transactions."""


@tx.command("submit")
@click.option("--node", "node_address", required=True, help="host:port of the target node.")
@click.option("--tx-file", required=True, type=click.Path(path_type=Path),
              help="JSON file with donor, recipient, location, metrics objects.")
@click.option("--key", "key_path", required=True, type=click.Path(path_type=Path))
def tx_submit(node_address, tx_file, key_path):
    """Sign the payload and post it to a node; print the receipt."""
    try:
        payload = json.loads(Path(tx_file).read_text())
        keypair = Keypair.load(key_path)
        transaction = new_transaction(
            donor=DonorRecord.from_dict(payload["donor"]),
            recipient=RecipientRecord.from_dict(payload["recipient"]),
            location=LocationReading.from_dict(payload["location"]),
            metrics=HealthMetrics.from_dict(payload.get("metrics", {})),
            signing_key=keypair,
        )
    except (OSError, KeyError, ValueError, RenalchainError) as exc:
        fail(f"bad transaction payload: {exc}")

    try:
        resp = httpx.post(
            f"http://{node_address}/transactions",
            content=canonical_json({"transaction": transaction.to_dict()}),
            headers={"content-type": "application/json"},
            timeout=30.0,
        )
    except httpx.HTTPError as exc:
        fail(f"node unreachable: {exc}")
    if resp.status_code != 201:
        click.echo(resp.text, err=True)
        fail(f"node rejected transaction ({resp.status_code})")
    receipt = resp.json()
    click.echo(f"tx_id={receipt['tx_id']}")
    click.echo(f"next_block_index={receipt['next_block_index']}")
    click.echo(f"viability={receipt['viability']:.6f}")
    echo_flag(receipt["red_flag"])


# ---------------------------------------------------------------- chain ----


@main.group()
def chain():
    """Inspect and validate a node's chain."""


def _fetch_chain(node_address: str) -> dict:
    try:
        resp = httpx.get(f"http://{node_address}/chain", timeout=10.0)
        resp.raise_for_status()
        return resp.json()
    except httpx.HTTPError as exc:
        fail(f"node unreachable: {exc}")


@chain.command("show")
@click.option("--node", "node_address", required=True)
def chain_show(node_address):
    """Pretty-print the blocks of a node's chain."""
    payload = _fetch_chain(node_address)
    click.echo(f"length={payload['length']} difficulty={payload['difficulty']}")
    for block in payload["blocks"]:
        click.echo(
            f"block {block['index']}  {block['timestamp']}  proof={block['proof']}  "
            f"prev={block['previous_hash'][:12]}..  txs={len(block['transactions'])}"
        )
        for t in block["transactions"]:
            v = "unscored" if t["viability"] is None else f"{t['viability']:.6f}"
            flag = " RED-FLAG" if t["red_flag"] else ""
            click.echo(
                f"  tx {t['tx_id'][:12]}..  {t['donor']['donor_id']} -> "
                f"{t['recipient']['recipient_id']}  viability={v}{flag}"
            )


@chain.command("validate")
@click.option("--node", "node_address", required=True)
@click.option("--threshold", default=DEFAULT_RED_FLAG_THRESHOLD, show_default=True)
def chain_validate(node_address, threshold):
    """Re-validate a node's chain client-side; exit 0 iff Valid."""
    payload = _fetch_chain(node_address)
    try:
        blocks = [Block.from_dict(b) for b in payload["blocks"]]
    except RenalchainError as exc:
        click.echo(f"verdict=Invalid (unparseable block: {exc})")
        sys.exit(2)
    report = validate_chain(
        Chain(blocks=blocks, difficulty=payload["difficulty"]), threshold=threshold
    )
    click.echo(f"verdict={report.verdict}")
    for f in report.failures:
        click.echo(f"block {f.block_index}: {f.kind.value}: {f.detail}")
    sys.exit(0 if report.is_valid else 1)


# ------------------------------------------------------------------- ml ----


@main.group()
def ml():
    """Train, evaluate, and query the viability model."""


def _hyperparams(n_estimators, max_depth, min_samples_split, max_features, seed):
    if max_features not in ("sqrt", "all"):
        try:
            max_features = int(max_features)
        except ValueError:
            fail(f"--max-features must be 'sqrt', 'all', or an integer, got {max_features!r}")
    return rf.Hyperparams(
        n_estimators=n_estimators,
        max_depth=max_depth,
        min_samples_split=min_samples_split,
        max_features=max_features,
        seed=seed,
    )


def _print_report(report: rf.EvalReport) -> None:
    (tn, fp), (fn, tp) = report.confusion
    click.echo(f"test_size={report.test_size}")
    click.echo(f"accuracy={report.accuracy:.6f}")
    click.echo("confusion matrix ([[TN FP] [FN TP]], positive = ckd):")
    click.echo(f"  actual notckd: TN={tn} FP={fp}")
    click.echo(f"  actual ckd:    FN={fn} TP={tp}")


def _write_report_csv(report: rf.EvalReport, path: Path) -> None:
    (tn, fp), (fn, tp) = report.confusion
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["", "predicted_notckd", "predicted_ckd"])
        writer.writerow(["actual_notckd", tn, fp])
        writer.writerow(["actual_ckd", fn, tp])


@ml.command("train")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(path_type=Path))
@click.option("--out", "out_path", required=True, type=click.Path(path_type=Path))
@click.option("--n-estimators", default=100, show_default=True)
@click.option("--max-depth", default=None, type=int)
@click.option("--min-samples-split", default=2, show_default=True)
@click.option("--max-features", default="sqrt", show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--test-fraction", default=0.15, show_default=True)
def ml_train(dataset_path, out_path, n_estimators, max_depth, min_samples_split,
             max_features, seed, test_fraction):
    """Train on the holdout split's training side and write the model file."""
    hp = _hyperparams(n_estimators, max_depth, min_samples_split, max_features, seed)
    try:
        raw = ds.load_dataset(dataset_path)
        encoded = ds.preprocess(raw)
        train, test = ds.train_test_split(encoded, test_fraction, seed)
        model = rf.fit_random_forest(train, hp)
    except (OSError, RenalchainError) as exc:
        fail(str(exc))
    rf.save_model(model, out_path)
    click.echo(f"model written to {out_path} ({n_estimators} trees, seed {seed})")
    click.echo(f"train_size={len(train)}")
    _print_report(rf.evaluate(model, test))


@ml.command("eval")
@click.option("--model", "model_path", required=True, type=click.Path(path_type=Path))
@click.option("--dataset", "dataset_path", required=True, type=click.Path(path_type=Path))
@click.option("--seed", default=42, show_default=True)
@click.option("--test-fraction", default=0.15, show_default=True)
@click.option("--out-csv", "csv_path", default=None, type=click.Path(path_type=Path))
@click.option("--figure", "figure_path", default=None, type=click.Path(path_type=Path),
              help="Optional rendered confusion-matrix image.")
def ml_eval(model_path, dataset_path, seed, test_fraction, csv_path, figure_path):
    """Evaluate a saved model on the dataset's holdout split."""
    try:
        model = rf.load_model(model_path)
        raw = ds.load_dataset(dataset_path)
        encoded = ds.encode_rows(model.column_spec, raw)
        _, test = ds.train_test_split(encoded, test_fraction, seed)
        report = rf.evaluate(model, test)
    except (OSError, RenalchainError) as exc:
        fail(str(exc))
    _print_report(report)
    if csv_path:
        _write_report_csv(report, csv_path)
        click.echo(f"confusion matrix written to {csv_path}")
    if figure_path:
        _render_confusion(report, figure_path)
        click.echo(f"figure written to {figure_path}")


def _render_confusion(report: rf.EvalReport, path: Path) -> None:
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        fail("matplotlib is not installed; omit --figure or install it")
    fig, ax = plt.subplots(figsize=(4, 4))
    matrix = [list(report.confusion[0]), list(report.confusion[1])]
    ax.imshow(matrix, cmap="Blues")
    for i in range(2):
        for j in range(2):
            ax.text(j, i, str(matrix[i][j]), ha="center", va="center")
    ax.set_xticks([0, 1], ["pred notckd", "pred ckd"])
    ax.set_yticks([0, 1], ["actual notckd", "actual ckd"])
    ax.set_title(f"accuracy {report.accuracy:.4f}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


@ml.command("predict")
@click.option("--model", "model_path", required=True, type=click.Path(path_type=Path))
@click.option("--metrics", "metrics_path", required=True, type=click.Path(path_type=Path),
              help="JSON object of health metrics (missing attributes allowed).")
@click.option("--threshold", default=DEFAULT_RED_FLAG_THRESHOLD, show_default=True)
def ml_predict(model_path, metrics_path, threshold):
    """Score one measurement vector."""
    try:
        model = rf.load_model(model_path)
        metrics = HealthMetrics.from_dict(json.loads(Path(metrics_path).read_text()))
    except (OSError, ValueError, RenalchainError) as exc:
        fail(str(exc))
    viability = rf.predict_proba(model, metrics)
    click.echo(f"viability={viability:.6f}")
    echo_flag(viability < threshold)


if __name__ == "__main__":
    main()
