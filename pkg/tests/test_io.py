import json
import os
import tempfile

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from besselmult import io as bio
from besselmult.norms import operator_norm

reals = st.floats(allow_nan=False, allow_infinity=False, width=64)


def test_parse_scalar_forms():
    assert bio.parse_scalar("1.5") == 1.5
    assert bio.parse_scalar("1-2i") == 1 - 2j
    assert bio.parse_scalar(" -3.5e-3+0.25i ") == -3.5e-3 + 0.25j
    assert bio.parse_scalar("2j") == 2j
    with pytest.raises(ValueError):
        bio.parse_scalar("abc")


def test_ragged_row_reports_line(tmp_path):
    f = tmp_path / "m.csv"
    f.write_text("# header comment\n1,2\n\n3,4\n5\n")
    with pytest.raises(bio.InputError, match=r"m\.csv:5: ragged row"):
        bio.read_matrix_csv(f)


def test_bad_entry_and_missing(tmp_path):
    f = tmp_path / "m.csv"
    f.write_text("1,2\n3,oops\n")
    with pytest.raises(bio.InputError, match=r":2: cannot parse"):
        bio.read_matrix_csv(f)
    with pytest.raises(bio.InputError, match="file not found"):
        bio.read_matrix_csv(tmp_path / "none.csv")
    (tmp_path / "e.csv").write_text("# nothing\n")
    with pytest.raises(bio.InputError, match="no data"):
        bio.read_matrix_csv(tmp_path / "e.csv")


def test_symbol_must_be_single_column(tmp_path):
    f = tmp_path / "s.csv"
    f.write_text("1,2\n")
    with pytest.raises(bio.InputError, match="single column"):
        bio.read_symbol_csv(f)


@given(st.integers(1, 5).flatmap(lambda k: hnp.arrays(float, (k, 3), elements=reals)))
def test_real_matrix_round_trip(A):
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "a.csv")
        bio.write_matrix_csv(path, A)
        np.testing.assert_array_equal(bio.read_matrix_csv(path), A)


@given(hnp.arrays(complex, st.integers(1, 6),
                  elements=st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e300)))
def test_complex_symbol_round_trip(v):
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "v.csv")
        bio.write_symbol_csv(path, v)
        np.testing.assert_array_equal(bio.read_symbol_csv(path), v)
        np.testing.assert_array_equal(bio.decode_vector(bio.encode_vector(v)), v)


def test_json_round_trip_of_estimate(tmp_path):
    est = operator_norm(np.array([[1.0, 2.0], [0.5, -1.0]]), 3, 1.5)
    text = bio.dump_json({"est": est, "inf": float("inf"), "flag": np.bool_(True)}, tmp_path / "r.json")
    back = json.loads((tmp_path / "r.json").read_text())
    assert back["est"]["lower"] == est.lower and back["est"]["upper"] == est.upper
    np.testing.assert_array_equal(bio.decode_vector(back["est"]["witness"]), est.witness)
    assert back["inf"] == "inf" and back["flag"] is True
    assert json.loads(text) == back
