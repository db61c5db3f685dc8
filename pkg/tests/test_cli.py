import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from scarflab.cli import run

SCHEMA = json.loads(resources.files("scarflab").joinpath("schemas/result.v1.json").read_text())


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), buf)
    return code, buf.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    assert doc["exit_code"] == code
    return code, doc


def test_points():
    code, doc = call_json("points", "--q", "3", "--r", "2")
    assert code == 0 and doc["result"]["count"] == 6
    assert doc["result"]["points"][0] == [2, 0, 0]


def test_points_csv():
    code, text = call("points", "--q", "6", "--r", "3", "--format", "csv")
    lines = text.split("\n")
    assert code == 0 and "\r" not in text and text.endswith("\n")
    assert lines[0] == "k,a1,a2,a3,a4,a5,a6"
    assert len(lines) - 2 == 56


def test_points_bad_q():
    code, doc = call_json("points", "--q", "0", "--r", "1")
    assert code == 2 and doc["error"]["kind"] == "usage"


def test_check_face_parallelogram():
    code, doc = call_json("check-face", "--q", "3", "--r", "2", "0,0,2", "1,1,0")
    res = doc["result"]
    assert code == 0 and res["agree"] and res["is_face"] is False
    assert res["witness"]["point"] == [1, 0, 1]
    assert set(res["verdicts"]) == {"geometric", "labels"}


def test_check_face_true_and_triangle():
    code, doc = call_json("check-face", "--q", "4", "--r", "4", "2,1,1,0", "2,0,1,1", "1,1,1,1")
    assert code == 0 and doc["result"]["is_face"] is True
    code, doc = call_json("check-face", "--q", "5", "--r", "3", "2,1,0,0,0", "1,2,0,0,0", "0,0,1,1,1")
    assert code == 0 and doc["result"]["is_face"] is False
    assert doc["result"]["verdicts"] == {"geometric": False, "labels": False, "catalog": False}


def test_check_face_usage():
    assert call_json("check-face", "--q", "3", "--r", "2", "--method", "catalog", "1,1,0")[0] == 2
    assert call_json("check-face", "--q", "3", "--r", "2", "1,1")[0] == 2
    assert call_json("check-face", "--q", "3", "--r", "2", "x,1,0")[0] == 2
    assert call_json("check-face", "--q", "3", "--r", "2", "1,1,0", "1,1,0")[0] == 2


def test_facets():
    assert call_json("facets", "--q", "5")[1]["result"]["count"] == 41
    assert call_json("facets", "--q", "5", "--family", "W")[1]["result"]["count"] == 20
    assert call_json("facets", "--q", "5", "--family", "U")[1]["result"]["count"] == 21
    assert call_json("facets", "--q", "4")[1]["result"]["count"] == 15
    assert call_json("facets", "--q", "4", "--r", "2")[0] == 2


def test_bounds_q6_block():
    code, doc = call_json("bounds", "--q", "6", "--r", "3", "--i", "2..4", "--compare")
    rows = doc["result"]["rows"]
    assert code == 0
    assert [(r["scarf"], r["l"], r["taylor"]) for r in rows] == [
        ("4710", "19660", "27720"),
        ("19845", "230360", "367290"),
        ("58530", "2118790", "3819816"),
    ]
    assert rows[0]["taylor_over_scarf"] == "924/157"


def test_bounds_beyond_pd():
    code, doc = call_json("bounds", "--q", "6", "--r", "3", "--i", "20", "--compare")
    row = doc["result"]["rows"][0]
    assert row["scarf"] == "0" and row["taylor"] == "1346766106565880"
    assert row["taylor_over_scarf"] is None


def test_bounds_small_and_usage():
    assert call_json("bounds", "--q", "1", "--r", "1", "--i", "0")[1]["result"]["rows"][0]["scarf"] == "1"
    assert call_json("bounds", "--q", "3", "--r", "4")[0] == 2
    assert call_json("bounds", "--q", "3", "--r", "2", "--i", "4..1")[0] == 2
    code, doc = call_json("bounds", "--q", "3", "--r", "2", "--i", "0..1", "--compare")
    assert doc["result"]["rows"][0]["l"] is None


def test_bounds_csv():
    code, text = call("bounds", "--q", "6", "--r", "3", "--i", "2..3", "--compare", "--format", "csv")
    assert text.splitlines()[0] == "i,scarf,l,taylor,taylor_over_scarf,l_over_scarf"
    assert text.splitlines()[1].startswith("2,4710,19660,27720,")


def test_fvector():
    code, doc = call_json("fvector", "--q", "5", "--method", "both")
    assert code == 0 and doc["result"]["match"]
    code, doc = call_json("fvector", "--q", "8")
    assert code == 0 and doc["result"]["log_concave"] and doc["result"]["top_value"] == "1"
    code, doc = call_json("fvector", "--q", "4", "--method", "both")
    assert code == 0 and doc["result"]["u_complex_match"]


def test_fvector_cap():
    code, doc = call_json("fvector", "--q", "7", "--method", "enumerate")
    assert code == 3 and doc["error"]["kind"] == "resource"


def test_morse_full_is_deterministic():
    a = call_json("morse-verify", "--q", "3", "--scale", "full")
    b = call_json("morse-verify", "--q", "3", "--scale", "full")
    assert a == b and a[0] == 0
    res = a[1]["result"]
    assert res["homogeneous"] and res["acyclic"] and res["critical_equals_scarf"]


def test_morse_sampled():
    code, doc = call_json("morse-verify", "--q", "5", "--scale", "sampled", "--samples", "2000", "--seed", "7")
    assert code == 0 and doc["result"]["pass_rate"] == "1"


def test_morse_caps():
    assert call_json("morse-verify", "--q", "5", "--scale", "full")[0] == 3
    assert call_json("morse-verify", "--q", "7", "--scale", "sampled")[0] == 3
    assert call_json("morse-verify", "--q", "3", "--r", "2")[0] == 2


def test_plot_data(tmp_path):
    code, text = call("plot-data", "6")
    lines = text.split("\n")
    assert code == 0 and "\r" not in text
    header = lines[0].split(",")
    rows = [dict(zip(header, line.split(","))) for line in lines[1:-1]]
    assert len(rows) == 56
    by_i = {int(r["i"]): r for r in rows}
    assert (by_i[2]["scarf"], by_i[2]["l"], by_i[2]["taylor"]) == ("4710", "19660", "27720")
    assert all(r["scarf"] == "0" for i, r in by_i.items() if i > 19)
    assert all(int(r["scarf"]) <= int(r["l"]) <= int(r["taylor"]) for r in rows)
    out = tmp_path / "plot.csv"
    code, doc = call_json("plot-data", "4", "5", "--out", str(out))
    assert code == 0 and doc["result"]["rows"] == 20 + 35
    assert out.read_bytes().count(b"\n") == 56


def test_threads_env(monkeypatch):
    monkeypatch.setenv("SCARFLAB_THREADS", "zero")
    assert call_json("points", "--q", "2", "--r", "1")[0] == 2
    monkeypatch.setenv("SCARFLAB_THREADS", "4")
    assert call_json("points", "--q", "2", "--r", "1")[0] == 0


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        run(["points", "--q", "3"], io.StringIO())
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "scarflab", "bounds", "--q", "6", "--r", "3", "--i", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["rows"][0]["scarf"] == "4710"
