import io
import json
from pathlib import Path

import pytest

from equicobar.cli import run
from equicobar.errors import InputError
from equicobar.io import caps_from_env, dumps, map_from, read_json, space_from

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def call(*argv):
    buf = io.StringIO()
    code = run([str(a) for a in argv], buf)
    report = json.loads(buf.getvalue())
    assert report["exit_code"] == code
    return code, report


def test_validate_good_and_corrupted():
    code, rep = call("validate", "--input", FIX / "rp2.json")
    assert code == 0 and rep["ok"]
    code, rep = call("validate", "--input", FIX / "rp2_corrupted.json")
    assert code == 1 and not rep["ok"] and rep["simplex"] == "u"


def test_missing_file_is_exit_3():
    code, rep = call("validate", "--input", FIX / "no_such_file.json")
    assert code == 3 and "not found" in rep["error"]


def test_malformed_json_reports_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"nondeg": [1, }')
    code, rep = call("validate", "--input", bad)
    assert code == 3 and ":1:" in rep["error"]


def test_homology_command():
    code, rep = call("homology", "--input", FIX / "rp2.json", "--field", "F2")
    assert code == 0 and rep["dims"] == [1, 1, 1]
    code, rep = call("homology", "--model", "T2", "--field", "Q")
    assert rep["dims"] == [1, 2, 1]


def test_bad_field_is_exit_3():
    code, _ = call("homology", "--model", "S2", "--field", "F6")
    assert code == 3


def test_pi1_of_circle():
    code, rep = call("pi1", "--input", FIX / "s1.json", "--coset-bound", 100)
    assert code == 0
    assert rep["presentation"] == "<a | >"
    assert rep["certificate"] == "infinite" and rep["order"] is None


def test_cover_of_rp2():
    code, rep = call("cover", "--input", FIX / "rp2.json", "--field", "Q")
    assert code == 0
    assert rep["homology"] == [1, 0, 1]
    assert all(rep["checks"].values())


def test_cobar_of_sphere():
    code, rep = call("cobar", "--model", "S2", "--field", "Q", "--degree", 5)
    assert code == 0 and rep["d2_ok"]
    assert rep["dims"] == [1, 1, 1, 1, 1]


def test_equivalence_verdict_exit_codes():
    code, rep = call("equivalence", "--map", FIX / "rp2_to_point.json", "--notion", 3, "--field", "F3")
    assert (code, rep["verdict"]) == (0, "Yes")
    code, rep = call("equivalence", "--map", FIX / "rp2_to_point.json", "--notion", 3, "--field", "F2")
    assert (code, rep["verdict"]) == (1, "No")
    code, rep = call("equivalence", "--map", FIX / "wedge_collapse.json", "--notion", 1, "--field", "Q")
    assert (code, rep["verdict"]) == (1, "No")


def test_equivariant_equivalence():
    code, rep = call("equivalence", "--map", FIX / "swapcollapse.json", "--group", FIX / "c2.json", "--notion", 2)
    assert code == 1 and rep["verdict"] == "No"
    assert [r["subgroup"] for r in rep["table"]] == ["e", "G"]


def test_descent_command():
    code, rep = call("descent", "--set", FIX / "swap_set.json", "--extension", FIX / "f2_f4.json")
    assert code == 0
    assert rep["dim"] == 2 and rep["descent"] and rep["unit"]
    assert rep["grouplikes"] == {"base": 0, "top": 2}


def test_orbit_diagram_and_fixed_points():
    code, rep = call("orbit-diagram", "--input", FIX / "swap_wedge.json")
    assert code == 0 and rep["theta_phi_identity"]
    code, _ = call("fixed-points", "--input", FIX / "swap_wedge.json", "--field", "F2")
    assert code == 0


def test_models_and_points():
    code, rep = call("models")
    assert code == 0 and "RP2" in json.dumps(rep)
    code, rep = call("points", "--model", "RP2", "--field", "F3")
    assert code == 0


def test_output_file(tmp_path):
    target = tmp_path / "report.json"
    buf = io.StringIO()
    run(["--output", str(target), "homology", "--model", "S2", "--field", "F2"], buf)
    assert target.read_text() == buf.getvalue()


def test_bad_cap_env(monkeypatch):
    monkeypatch.setenv("EQUICOBAR_CAPS", "degree=-1")
    code, rep = call("cobar", "--model", "S2")
    assert code == 3 and "EQUICOBAR_CAPS" in rep["error"]


def test_caps_from_env_formats():
    assert caps_from_env({"EQUICOBAR_CAPS": '{"degree": 3}'}) == {"degree": 3}
    assert caps_from_env({"EQUICOBAR_CAPS": "degree=3, length=2"}) == {"degree": 3, "length": 2}
    assert caps_from_env({}) == {}
    with pytest.raises(InputError):
        caps_from_env({"EQUICOBAR_CAPS": "degree=x"})


def test_loaders():
    X = space_from(read_json(FIX / "rp2.json"))
    assert X.counts()[:3] == [1, 2, 2]
    assert space_from({"model": "S2"}).counts()[:3] == [1, 0, 1]
    f = map_from(read_json(FIX / "wedge_collapse.json"))
    assert f.validate().ok


def test_dumps_is_canonical():
    text = dumps({"b": 1, "a": (1, 2)})
    assert text.endswith("\n")
    assert list(json.loads(text)) == ["a", "b", "schema"]
