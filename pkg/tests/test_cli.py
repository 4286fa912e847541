import io
import json
import subprocess
import sys

import pytest

from singforge.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_json():
    code, out, _ = run("classify", "--type", "2,3,7,11", "--json")
    env = json.loads(out)
    assert code == 0 and env["exit_code"] == 0 and env["schema_version"] == 1
    assert env["command"] == "classify" and env["args"] == {"type": [2, 3, 7, 11]}
    res = env["result"]
    assert (res["outcome"], res["proof"]) == ("exceptional", "bump_obstruction")
    bump = [s for s in res["trace"] if s["step"] == "bump_obstruction"][0]
    assert bump["inequality"] == "19/6 > 3"


def test_newton_check_text():
    assert run("newton-check", "--type", "2,3,7,42")[1].strip() == "log-canonical (boundary)"
    assert run("newton-check", "--type", "2,3,7,41")[1].strip() == "canonical (interior)"
    assert run("newton-check", "--type", "2,3,7,43")[1].strip() == "not log-canonical (outside)"


def test_input_file(tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"n": 3, "support": [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 1]]}))
    code, out, _ = run("plt-weight", "--input", str(p))
    assert code == 0 and out.strip() == "1,1,1"


def test_discrepancy():
    code, out, _ = run("discrepancy", "--type", "2,3,7,41", "--weight", "861,574,246,42", "--q", "1,1,1,1", "--json")
    assert code == 0 and json.loads(out)["result"]["alpha"] == "860/861"


def test_verify_tables():
    code, out, _ = run("verify-tables")
    assert code == 0 and out.strip() == "109/109 rows match embedded fixtures"


def test_verify_tables_mismatch(tmp_path):
    # dropping a ledger entry makes classification fail for that row
    from importlib import resources

    entries = json.loads(resources.files("singforge").joinpath("data/ledger.json").read_text())
    p = tmp_path / "l.json"
    p.write_text(json.dumps([e for e in entries if e["type"] != [2, 3, 8, 8]]))
    code, out, err = run("verify-tables", "--ledger", str(p))
    assert code == 4
    assert out.startswith("107/109 rows match")
    assert "[2, 3, 8, 8]" in out and "[2, 3, 8, 16]" in out


def test_wps_model_roundtrip():
    for t in ("3,3,5,5", "2,3,7,11", "2,4,6,10"):
        code, out, _ = run("wps-model", "--type", t, "--json")
        assert code == 0
        again = json.dumps(json.loads(out), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        assert again == out


def test_deterministic_bytes():
    assert run("tables", "--json")[1] == run("tables", "--json")[1]
    assert run("enumerate", "--verdicts")[1] == run("enumerate", "--verdicts")[1]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["bogus"], 2),
        ([], 2),
        (["classify"], 2),
        (["classify", "--type", "2,x,7,11"], 2),
        (["classify", "--type", "2,3,7"], 2),
        (["classify", "--type", "3,2,7,11"], 2),
        (["classify", "--type", "2,3,7,11", "--frobnicate"], 2),
        (["classify", "--type", "2,3,7,11", "--json", "--markdown"], 2),
        (["leading", "--type", "2,3,5"], 2),
        (["leading", "--type", "2,3,5", "--weight", "2,4,6"], 2),
        (["discrepancy", "--type", "2,3,5", "--weight", "15,10,6"], 2),
        (["newton-check", "--input", "/nonexistent.json"], 2),
        (["plt-weight", "--type", "2,3,7,42"], 3),
        (["classify", "--type", "2,3,7,42"], 3),
        (["classify", "--type", "2,3,5,7"], 3),
        (["wps-model", "--type", "2,3,7,11"], 0),
    ],
)
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_precondition_quotes_criterion():
    code, out, err = run("plt-weight", "--type", "2,3,7,42")
    assert code == 3 and "all-ones point must be interior" in err
    code, out, _ = run("plt-weight", "--type", "2,3,7,42", "--json")
    env = json.loads(out)
    assert env["exit_code"] == 3 and env["error"].startswith("precondition")


def test_console_entry():
    r = subprocess.run([sys.executable, "-m", "singforge", "classify", "--type", "2,3,7,7"], capture_output=True, text=True)
    assert r.returncode == 0 and "non-exceptional" in r.stdout
