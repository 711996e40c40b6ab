import numpy as np
import pytest

from renalchain.errors import BadFraction, EmptyDataset, ParseError, SchemaError
from renalchain.viability import dataset as ds

HEADER = "age,bp,sg,al,su,rbc,pc,pcc,ba,bgr,bu,sc,sod,pot,hemo,pcv,wc,rc,htn,dm,cad,appet,pe,ane,class"

ROW_FULL = "48,80,1.020,1,0,normal,normal,notpresent,notpresent,121,36,1.2,137,4.4,15.4,44,7800,5.2,yes,no,no,good,no,no,ckd"
ROW_HEALTHY = "40,80,1.025,0,0,normal,normal,notpresent,notpresent,100,25,0.8,142,4.6,15.9,48,6700,5.3,no,no,no,good,no,no,notckd"


def write(tmp_path, lines, name="data.csv"):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n")
    return path


def test_synthetic_file_loads_with_advertised_composition(synthetic_raw):
    assert len(synthetic_raw) == 400
    assert synthetic_raw.class_counts() == {"ckd": 250, "notckd": 150}


def test_wrong_column_count_is_schema_error(tmp_path):
    short_header = ",".join(HEADER.split(",")[:23])
    with pytest.raises(SchemaError):
        ds.load_dataset(write(tmp_path, [short_header]))


def test_wrong_header_name_is_schema_error(tmp_path):
    bad = HEADER.replace("hemo", "haemoglobin")
    with pytest.raises(SchemaError):
        ds.load_dataset(write(tmp_path, [bad, ROW_FULL]))


def test_row_with_wrong_width_is_schema_error(tmp_path):
    with pytest.raises(SchemaError):
        ds.load_dataset(write(tmp_path, [HEADER, ROW_FULL + ",extra"]))


def test_question_mark_parses_as_missing(tmp_path):
    row = ROW_FULL.split(",")
    row[11] = "?"  # sc
    raw = ds.load_dataset(write(tmp_path, [HEADER, ",".join(row)]))
    metrics, label = raw.rows[0]
    assert metrics.sc is None
    assert label == "ckd"


def test_whitespace_noise_is_normalized(tmp_path):
    row = ROW_FULL.split(",")
    row[18] = "\tyes"   # htn, tab noise as in the published file
    row[24] = "ckd\t"   # label with trailing tab
    raw = ds.load_dataset(write(tmp_path, [HEADER, ",".join(row)]))
    metrics, label = raw.rows[0]
    assert metrics.htn == "yes"
    assert label == "ckd"


def test_bad_number_is_parse_error(tmp_path):
    row = ROW_FULL.split(",")
    row[9] = "abc"  # bgr
    with pytest.raises(ParseError) as err:
        ds.load_dataset(write(tmp_path, [HEADER, ",".join(row)]))
    assert err.value.column == "bgr"
    assert err.value.line == 2


def test_bad_category_is_parse_error(tmp_path):
    row = ROW_FULL.split(",")
    row[5] = "cloudy"  # rbc
    with pytest.raises(ParseError):
        ds.load_dataset(write(tmp_path, [HEADER, ",".join(row)]))


def test_bad_label_is_parse_error(tmp_path):
    row = ROW_FULL.split(",")
    row[24] = "sick"
    with pytest.raises(ParseError):
        ds.load_dataset(write(tmp_path, [HEADER, ",".join(row)]))


def test_fixed_category_codes():
    assert ds.CATEGORY_CODES["rbc"] == {"normal": 0, "abnormal": 1}
    assert ds.CATEGORY_CODES["htn"] == {"no": 0, "yes": 1}
    assert ds.CATEGORY_CODES["appet"] == {"good": 0, "poor": 1}


def test_preprocess_encodes_and_imputes(tmp_path):
    rows = [HEADER]
    base = ROW_FULL.split(",")
    # three rows; middle one missing bp and rbc
    r1 = list(base); r1[1] = "70"; r1[5] = "normal"
    r2 = list(base); r2[1] = "?"; r2[5] = "?"
    r3 = list(base); r3[1] = "90"; r3[5] = "abnormal"
    r3[24] = "notckd"
    rows += [",".join(r) for r in (r1, r2, r3)]
    enc = ds.preprocess(ds.load_dataset(write(tmp_path, rows)))

    bp = enc.features[:, 1]
    assert bp[1] == 80.0  # median of {70, 90} -> 80
    rbc = enc.features[:, 5]
    assert rbc[0] == 0.0 and rbc[2] == 1.0
    assert rbc[1] == 0.0  # mode of {normal, abnormal} ties to lowest code
    assert enc.targets.tolist() == [1, 1, 0]

    spec = {c.name: c for c in enc.column_spec}
    assert spec["bp"].impute == 80.0
    assert spec["rbc"].kind == "binary-encoded"
    assert spec["age"].kind == "numeric"
    # no-missing column still records its imputation value
    assert spec["age"].impute == 48.0
    assert not spec["age"].degenerate


def test_preprocess_all_missing_column_imputes_zero_with_flag(tmp_path, caplog):
    rows = [HEADER]
    for label in ("ckd", "ckd", "notckd"):
        r = ROW_FULL.split(",")
        r[13] = "?"  # pot missing everywhere
        r[24] = label
        rows.append(",".join(r))
    with caplog.at_level("WARNING"):
        enc = ds.preprocess(ds.load_dataset(write(tmp_path, rows)))
    spec = {c.name: c for c in enc.column_spec}
    assert spec["pot"].impute == 0.0
    assert spec["pot"].degenerate
    assert np.all(enc.features[:, 13] == 0.0)
    assert any("pot" in message for message in caplog.messages)


def test_preprocess_empty_dataset():
    with pytest.raises(EmptyDataset):
        ds.preprocess(ds.RawDataset(rows=(), source_path="x"))


def test_encode_rows_reproduces_preprocess_exactly(synthetic_raw):
    enc = ds.preprocess(synthetic_raw)
    again = ds.encode_rows(enc.column_spec, synthetic_raw)
    assert np.array_equal(enc.features, again.features)
    assert np.array_equal(enc.targets, again.targets)


def test_encode_metrics_imputes_missing(synthetic_raw):
    enc = ds.preprocess(synthetic_raw)
    from renalchain.domain import HealthMetrics

    vector = ds.encode_metrics(enc.column_spec, HealthMetrics())  # everything missing
    assert vector.shape == (24,)
    for j, col in enumerate(enc.column_spec):
        assert vector[j] == col.impute


def test_split_sizes_and_partition(synthetic_raw):
    enc = ds.preprocess(synthetic_raw)
    train, test = ds.train_test_split(enc, 0.15, 42)
    assert len(test) == 60 and len(train) == 340
    joined = np.vstack([train.features, test.features])
    assert joined.shape[0] == 400
    # exact partition: every original row appears exactly once
    original = enc.features[np.lexsort(enc.features.T)]
    recombined = joined[np.lexsort(joined.T)]
    assert np.array_equal(original, recombined)


def test_split_deterministic(synthetic_raw):
    enc = ds.preprocess(synthetic_raw)
    a_train, a_test = ds.train_test_split(enc, 0.15, 42)
    b_train, b_test = ds.train_test_split(enc, 0.15, 42)
    assert np.array_equal(a_test.features, b_test.features)
    assert np.array_equal(a_train.targets, b_train.targets)
    c_train, c_test = ds.train_test_split(enc, 0.15, 43)
    assert not np.array_equal(a_test.features, c_test.features)


def test_split_small_even(tmp_path):
    rows = [HEADER, ROW_FULL, ROW_HEALTHY, ROW_FULL, ROW_HEALTHY]
    enc = ds.preprocess(ds.load_dataset(write(tmp_path, rows)))
    train, test = ds.train_test_split(enc, 0.5, 1)
    assert len(train) == 2 and len(test) == 2


@pytest.mark.parametrize("fraction", [0.0, 1.0, -0.2, 1.5])
def test_bad_fraction(fraction, synthetic_raw):
    enc = ds.preprocess(synthetic_raw)
    with pytest.raises(BadFraction):
        ds.train_test_split(enc, fraction, 42)
