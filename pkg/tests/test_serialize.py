import json

import numpy as np

from diracshell import serialize


def test_round15_pins_digits():
    x = 0.1 + 0.2
    assert serialize.round15(x) == 0.3
    assert serialize.round15(np.float64(2.0)) == 2.0


def test_jsonable_handles_numpy_and_complex():
    obj = {"a": np.float64(1.5), "b": np.int32(3), "c": 1 + 2j,
           "d": np.arange(3), "e": [np.bool_(True), None]}
    out = serialize.jsonable(obj)
    assert out["a"] == 1.5 and out["b"] == 3
    assert out["c"] == {"real": 1.0, "imag": 2.0}
    assert out["d"] == [0, 1, 2]
    assert out["e"] == [True, None]
    json.dumps(out)


def test_dump_json_deterministic_and_newline_terminated():
    payload = {"params": {"x": 1 / 3}, "results": {}, "diagnostics": {}}
    a = serialize.dump_json(payload)
    b = serialize.dump_json(payload)
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a)["params"]["x"] == float(format(1 / 3, ".15g"))


def test_dump_csv_format():
    text = serialize.dump_csv(("a", "b"), [(1.0, True), (0.25, False)])
    lines = text.split("\n")
    assert lines[0] == "a,b"
    assert lines[1] == "1,true"
    assert lines[2] == "0.25,false"
    assert text.endswith("\n")
    assert "\r" not in text


def test_write_text_lf_only(tmp_path):
    p = tmp_path / "x.csv"
    serialize.write_text(str(p), "a,b\n1,2\n")
    raw = p.read_bytes()
    assert raw == b"a,b\n1,2\n"
