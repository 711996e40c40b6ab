import sys
from datetime import datetime, timedelta, timezone
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # oracle / netharness helpers

from renalchain.domain import (
    DonorRecord,
    HealthMetrics,
    LocationReading,
    RecipientRecord,
    new_transaction,
)
from renalchain.keys import Keypair
from renalchain.viability import dataset as ds
from renalchain.viability import forest as rf

REPO_ROOT = Path(__file__).resolve().parent.parent
SYNTHETIC_CSV = REPO_ROOT / "data" / "synthetic_ckd.csv"

T0 = datetime(2024, 3, 1, 12, 0, 0, tzinfo=timezone.utc)


class TickingClock:
    """Deterministic injected clock: advances one second per call."""

    def __init__(self, start: datetime = T0):
        self.now = start

    def __call__(self) -> datetime:
        self.now += timedelta(seconds=1)
        return self.now


def counter_bytes():
    """Deterministic tx_id source."""
    state = {"n": 0}

    def rand(n: int) -> bytes:
        state["n"] += 1
        return state["n"].to_bytes(4, "big") * (n // 4)

    return rand


@pytest.fixture(scope="session")
def keypair():
    return Keypair.generate(b"\x11" * 32)


@pytest.fixture(scope="session")
def other_keypair():
    return Keypair.generate(b"\x22" * 32)


def make_metrics(**overrides) -> HealthMetrics:
    base = dict(
        age=44.0, bp=80.0, sg=1.020, al=0.0, su=0.0, rbc="normal", pc="normal",
        pcc="notpresent", ba="notpresent", bgr=110.0, bu=32.0, sc=1.0,
        sod=140.0, pot=4.5, hemo=15.1, pcv=45.0, wc=7500.0, rc=5.1,
        htn="no", dm="no", cad="no", appet="good", pe="no", ane="no",
    )
    base.update(overrides)
    return HealthMetrics(**base)


def make_tx(keypair, *, rand_bytes=None, when=T0, **metric_overrides):
    return new_transaction(
        donor=DonorRecord("D-7", "Alex Doe", 44, "O+"),
        recipient=RecipientRecord("R-3", "Sam Roe", 51, "O+"),
        location=LocationReading(41.88, -87.63, when, "ORD courier leg"),
        metrics=make_metrics(**metric_overrides),
        signing_key=keypair,
        rand_bytes=rand_bytes or counter_bytes(),
    )


@pytest.fixture(scope="session")
def synthetic_raw():
    return ds.load_dataset(SYNTHETIC_CSV)


@pytest.fixture(scope="session")
def synthetic_split(synthetic_raw):
    encoded = ds.preprocess(synthetic_raw)
    return ds.train_test_split(encoded, 0.15, 42)


@pytest.fixture(scope="session")
def trained_model(synthetic_split):
    train, _ = synthetic_split
    return rf.fit_random_forest(train, rf.Hyperparams(n_estimators=25, seed=42))


@pytest.fixture(scope="session")
def model_file(trained_model, tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "model.json"
    rf.save_model(trained_model, path)
    return path
