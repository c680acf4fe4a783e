import json

import numpy as np
import pytest

from biqutrit import jsonio
from biqutrit.exceptions import InputError


def test_seventeen_significant_digits():
    assert jsonio.dumps(0.1).strip() == "0.10000000000000001"
    assert jsonio.dumps([1.0, 2]).strip() == "[1.0, 2]"


def test_round_trips_exactly():
    x = {"a": [np.pi, -1e-300, 3.0], "b": {"c": True, "d": None, "e": "x"}, "f": np.float64(2.5)}
    back = json.loads(jsonio.dumps(x))
    assert back["a"] == [np.pi, -1e-300, 3.0] and back["b"] == x["b"] and back["f"] == 2.5


def test_load_reports_line(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("[1,\n2,\n]")
    with pytest.raises(InputError, match=":3:"):
        jsonio.load_file(str(p))
