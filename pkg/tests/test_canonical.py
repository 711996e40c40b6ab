import json
from datetime import datetime, timezone

import pytest
from hypothesis import given
from hypothesis import strategies as st

from renalchain.canonical import (
    Fixed6,
    canonical_bytes,
    canonical_json,
    format_timestamp,
    parse_timestamp,
    quantize6,
)


def test_object_keys_sorted_bytewise_no_whitespace():
    obj = {"b": 1, "a": [1, 2, {"z": None, "y": True}], "aa": "x"}
    assert canonical_json(obj) == '{"a":[1,2,{"y":true,"z":null}],"aa":"x","b":1}'


def test_construction_order_does_not_matter():
    a = {"index": 0, "proof": 3, "previous_hash": "ff"}
    b = {}
    b["previous_hash"] = "ff"
    b["proof"] = 3
    b["index"] = 0
    assert canonical_bytes(a) == canonical_bytes(b)


def test_fixed6_renders_exactly_six_fractional_digits():
    assert canonical_json({"v": Fixed6(1.0)}) == '{"v":1.000000}'
    assert canonical_json({"v": Fixed6(0.37)}) == '{"v":0.370000}'
    assert canonical_json({"v": Fixed6(1 / 3)}) == '{"v":0.333333}'


def test_plain_floats_round_trip_via_repr():
    values = [1.005, 91.0, -87.63, 1e-07, 123456.789]
    text = canonical_json(values)
    assert json.loads(text) == values


def test_booleans_are_not_integers():
    assert canonical_json([True, False, 1, 0]) == "[true,false,1,0]"


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        canonical_json(float("nan"))
    with pytest.raises(ValueError):
        canonical_json(float("inf"))


def test_unknown_type_rejected():
    with pytest.raises(TypeError):
        canonical_json({"x": object()})


def test_timestamp_format_microseconds_z():
    ts = datetime(2024, 1, 1, tzinfo=timezone.utc)
    assert format_timestamp(ts) == "2024-01-01T00:00:00.000000Z"
    assert parse_timestamp("2024-01-01T00:00:00.000000Z") == ts


def test_timestamp_parse_requires_exact_form():
    with pytest.raises(ValueError):
        parse_timestamp("2024-01-01T00:00:00Z")  # no microseconds
    with pytest.raises(ValueError):
        parse_timestamp("2024-01-01 00:00:00.000000Z")


def test_naive_timestamp_rejected():
    with pytest.raises(ValueError):
        format_timestamp(datetime(2024, 1, 1))


@given(st.dictionaries(st.text(), st.recursive(
    st.none() | st.booleans() | st.integers() | st.text(),
    lambda children: st.lists(children, max_size=3),
    max_leaves=8,
)))
def test_canonical_output_parses_back(obj):
    assert json.loads(canonical_json(obj)) == obj


@given(st.integers(0, 10**6))
def test_quantize6_is_idempotent_on_vote_fractions(k):
    v = quantize6(k / 10**6)
    assert quantize6(v) == v
    assert f"{v:.6f}" == f"{k / 10**6:.6f}"


def test_timestamp_round_trip_preserves_microseconds():
    ts = datetime(2031, 12, 5, 23, 59, 59, 123456, tzinfo=timezone.utc)
    assert parse_timestamp(format_timestamp(ts)) == ts
