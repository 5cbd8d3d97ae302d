import io
import json

import pytest

from curvesing.cli import CONFIG_ENV, Config, load_config, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_newton():
    code, out, _ = call("newton", "y^2-x^3")
    assert code == 0
    assert out.startswith("P=(2,3) d=6")
    code, out, _ = call("--format", "json", "newton", "y^2-x^3")
    assert json.loads(out)["faces"][0]["P"] == [2, 3]


def test_classify():
    assert call("classify", "(x^3+y^2)^2+x^3*y^3")[:2] == (0, "(B_{3,2}^2)^{B_{3,2}}\n")


def test_milnor_and_intersect():
    assert call("milnor", "x^3+y^7")[1] == "12\n"
    assert call("intersect", "y", "y-x^3")[1] == "3\n"


def test_resolve_formats():
    code, out, _ = call("resolve", "--dot", "y^2-x^3")
    assert code == 0 and out.startswith("graph resolution {")
    code, out, _ = call("resolve", "--json", "y^2-x^3")
    assert sorted(n["mult"] for n in json.loads(out)["nodes"]) == [2, 3, 6]


def test_torus_verify():
    code, out, _ = call("torus", "verify", "--f2", "y+x^2", "--f5", "y^5+y+x^2")
    assert code == 0
    assert "iota: 10" in out and "mu: 49" in out and "type: B_{50,2}" in out
    code, out, _ = call("torus", "verify", "--f2", "y+x^2", "--f5", "y^5+y+x^2", "--json")
    data = json.loads(out)
    assert (data["iota"], data["mu"], data["normalized"]) == (10, 49, "B_{50,2}")
    assert data["table_row"]["hit"]


def test_torus_verify_reports_discrepancy():
    # values starting with '-' need the --opt=value form
    code, out, _ = call("torus", "verify", "--f2", "y^2",
                        "--f5=-3*x*y^4+2*y^4-2*x*y^3-y^3+x^3*y^2+3*x^2*y^2-2*x^3*y-3*x^5")
    assert code == 0 and "TABLE_DISCREPANCY L-III-c" in out


def test_census():
    code, out, _ = call("torus", "census", "--count", "5", "--seed", "2")
    assert code == 0 and "unexplained misses: 0" in out


def test_goldens():
    code, out, _ = call("goldens")
    assert code == 0
    assert out.strip().endswith("21/21 passed")


@pytest.mark.parametrize("argv", [(), ("bogus",), ("newton",), ("torus", "verify", "--f2", "y"),
                                  ("classify", "y^2-"), ("torus", "census", "--count", "0"),
                                  ("torus", "verify", "--f2", "x^3", "--f5", "y")])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_analysis_error_json():
    code, _, err = call("--json-errors", "classify", "y^2*(y-x)")
    assert code == 1
    assert json.loads(err) == {"error": "non_reduced_input",
                               "message": "factor y appears with multiplicity 2"}
    code, _, err = call("--json-errors", "classify", "y^2-")
    assert code == 2 and json.loads(err)["position"] == 4


def test_config_file(tmp_path, monkeypatch):
    path = tmp_path / "cfg"
    path.write_text("# engine limits\nmax_resolution_depth = 1\noutput_format=json\n")
    assert load_config(str(path)) == Config(max_resolution_depth=1, output_format="json")
    monkeypatch.setenv(CONFIG_ENV, str(path))
    code, out, _ = call("milnor", "x^3+y^7")
    assert (code, json.loads(out)) == (0, {"mu": 12})
    code, _, err = call("milnor", "(y^2-x^3)^2-4*x^5*y-x^7")
    assert code == 1 and "max_depth_exceeded" in err


@pytest.mark.parametrize("text", ["depth=3\n", "seed=x\n", "tower_depth_limit=0\n", "nonsense\n"])
def test_bad_config(tmp_path, monkeypatch, text):
    path = tmp_path / "cfg"
    path.write_text(text)
    monkeypatch.setenv(CONFIG_ENV, str(path))
    assert call("milnor", "x^3+y^7")[0] == 2
