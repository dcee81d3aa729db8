import csv
import io
import json

import pytest

from homtensor.cli import run


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return write


def call(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


C4 = {"vertices": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}
HARDCORE2 = {"q": 2, "alpha": ["1", "2"], "B": [["1", "1"], ["1", "0"]]}


def test_hom(files):
    code, out = call(["hom", "--graph", files("g.json", C4), "--target", files("h.json", HARDCORE2), "--field", "q"])
    assert code == 0 and out == "17\n"


def test_hom_gf(files):
    code, out = call(["hom", "--graph", files("g.json", C4), "--target", files("h.json", HARDCORE2), "--field", "gf:5"])
    assert code == 0 and out == "2 mod 5\n"


def test_holant_params(files):
    g = files("g.json", C4)
    assert call(["holant", "--param", "pm", "--graph", g]) == (0, "2\n")
    assert call(["holant", "--param", "wm:1/2", "--graph", g]) == (0, "49/16\n")
    assert call(["holant", "--param", "ec:3", "--graph", g]) == (0, "18\n")
    assert call(["holant", "--param", "vdcc", "--graph", g]) == (0, "1\n")


def test_slice_json_and_csv():
    code, out = call(["slice", "--param", "pm", "--k", "1", "--n", "4", "--gens", "pset"])
    assert code == 0
    obj = json.loads(out)
    assert obj["coords"]["(3,1)"] == "1"
    assert sum(v != "0" for v in obj["coords"].values()) == 1
    code, out = call(["slice", "--param", "pm", "--k", "1", "--n", "2", "--format", "csv"])
    assert out.splitlines() == ["exponent,value", "2 0,0", "1 1,1", "0 2,0"]


def test_slice_with_generator_file_and_hom(files):
    gens = files("gens.json", [{"vertices": 1, "labels": {"1": 0}},
                               {"vertices": 2, "edges": [[0, 1]], "labels": {"1": 0}}])
    h = files("h.json", HARDCORE2)
    code, out = call(["slice", "--param", "hom", "--target", h, "--k", "1", "--n", "2", "--gens", gens])
    assert code == 0
    assert set(json.loads(out)["coords"]) == {"(2,0)", "(1,1)", "(0,2)"}


def test_tensor_commands():
    code, out = call(["tensor", "--n", "3", "--a", "1", "--b", "2", "--decompose"])
    assert code == 0
    rep = json.loads(out)
    assert rep["tensor"]["coords"]["(3,0)"] == "1" and len(rep["decomposition"]["terms"]) == 3
    code, out = call(["tensor", "--n", "2", "--rank", "--field", "gf:2"])
    assert code == 0 and json.loads(out)["symmetric_rank"] == 3


def test_express_report():
    code, out = call(["express", "--d", "3", "--a", "0", "--trials", "10", "--max-vertices", "6", "--seed", "42"])
    assert code == 0
    meta, end = json.JSONDecoder().raw_decode(out)
    assert meta["d"] == 3 and meta["target"]["q"] == 3
    rows = list(csv.DictReader(io.StringIO(out[end:].lstrip())))
    assert len(rows) == 11 and all(r["ok"] == "1" for r in rows)


def test_express_field_error():
    code, _ = call(["express", "--d", "2", "--field", "gf:2"])
    assert code == 2


def test_lower_bound():
    code, out = call(["lower-bound", "--d", "3", "--a", "1"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {r["prime"]: r["gf_rank"] for r in rows}["5"] == "3"


def test_hardcore_csv():
    code, out = call(["hardcore", "--kmax", "5", "--lambda", "7"])
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["k", "bell", "rank", "two_pow_k"]
    assert [r["rank"] for r in rows] == ["1", "2", "5", "15", "52"]
    assert all(r["rank"] == r["bell"] for r in rows)


def test_hardcore_errors():
    assert call(["hardcore", "--kmax", "7", "--lambda", "7"])[0] == 2
    assert call(["hardcore", "--kmax", "3", "--lambda", "1"])[0] == 2


def test_pm_rank():
    code, out = call(["pm-rank", "--nmax", "4", "--format", "json"])
    assert code == 0 and json.loads(out)[0]["gf3"] == 2


def test_usage_and_input_errors(files):
    assert call([])[0] == 2
    assert call(["holant", "--param", "pm"])[0] == 2
    assert call(["holant", "--param", "zz", "--graph", files("g.json", C4)])[0] == 2
    assert call(["holant", "--param", "pm", "--graph", "/nonexistent.json"])[0] == 2
    assert call(["hom", "--graph", files("g.json", C4), "--target", files("h.json", {"alpha": ["0"], "B": [["1"]]})])[0] == 2


def test_malformed_json_reports_position(files, capsys):
    code, _ = call(["holant", "--param", "pm", "--graph", files("bad.json", '{"vertices": 2,\n  "edges": [[0 1]]}')])
    assert code == 2
    assert "line 2, column" in capsys.readouterr().err


def test_loop_rejected(files, capsys):
    code, _ = call(["holant", "--param", "pm", "--graph", files("l.json", {"vertices": 2, "edges": [[1, 1]]})])
    assert code == 2 and "loop" in capsys.readouterr().err


def test_verification_failure_exit_code(monkeypatch, capsys):
    import homtensor.cli as cli

    def broken(res, trials, max_vertices, seed=0):
        from homtensor.graphs import MultiGraph
        row = {"trial": 0, "graph": MultiGraph(1), "ok": False,
               "wm": 0, "incidence": 0, "expanded": 0, "moved": 0, "hom": 1}
        return {"passed": False, "rows": [row], "mismatch": row}

    monkeypatch.setattr(cli, "verify_expressibility", broken)
    code, _ = call(["express", "--d", "3", "--trials", "1"])
    assert code == 1
    assert "counterexample" in capsys.readouterr().err


def test_deterministic_output():
    argv = ["express", "--d", "2", "--a", "1", "--trials", "15", "--seed", "7"]
    assert call(argv) == call(argv)


def test_selftest_table(monkeypatch):
    import homtensor.acceptance as acc

    monkeypatch.setattr(acc, "CRITERIA", [c for c in acc.CRITERIA if c[0] in ("3", "5")])
    code, out = call(["selftest"])
    assert code == 0
    assert [line.split()[:2] for line in out.splitlines()] == [["PASS", "3"], ["PASS", "5"]]
