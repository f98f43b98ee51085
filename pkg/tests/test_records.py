import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gausschain.records import OutputRecord, format_float, to_csv


def test_format_float():
    assert format_float(0.1) == "0.10000000000000001"
    assert format_float(2.0) == "2.0"
    assert format_float(1e300) == "1.0000000000000001e+300"
    assert format_float(math.inf) == '"inf"'
    assert format_float(-math.inf) == '"-inf"'
    assert format_float(math.nan) == '"nan"'


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_floats_round_trip(x):
    assert float(format_float(x)) == x


def test_record_layout():
    r = OutputRecord("demo", {"b": 1, "a": Fraction(1, 3)}, {"z": 1 + 2j, "n": np.int64(7)},
                     "somewhere", residuals={"r": 0.0}, passed=True)
    text = r.to_json()
    assert list(json.loads(text)) == ["command", "inputs", "outputs", "residuals", "provenance"]
    data = json.loads(text)
    assert list(data["inputs"]) == ["a", "b"]
    assert data["inputs"]["a"] == "1/3"
    assert data["outputs"] == {"n": 7, "passed": True, "z": {"im": 2.0, "re": 1.0}}


def test_big_integers_exact():
    n = 2**200 + 1
    text = OutputRecord("x", {}, {"n": n}, "p").to_json()
    assert json.loads(text)["outputs"]["n"] == n


def test_unserializable():
    with pytest.raises(TypeError):
        OutputRecord("x", {}, {"o": object()}, "p").to_json()


def test_records_validate(record_validator):
    r = OutputRecord("demo", {"tau": 0.3 + 1.1j}, {"v": math.inf, "q": Fraction(9, 64)}, "p",
                     residuals={"r": 1e-17}, passed=False)
    record_validator.validate(json.loads(r.to_json()))


def test_csv():
    assert to_csv(("n", "x"), [(0, 0.5), (1, 2.0)]) == "n,x\n0,0.5\n1,2.0\n"
