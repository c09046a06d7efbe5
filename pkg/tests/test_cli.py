import json
import subprocess
import sys

import pytest

from artal.cli import EXIT_PARSE, EXIT_RANGE, EXIT_SINGULAR, EXIT_VERIFY, main, run


def test_table_text_and_json():
    text, status = run(["table"])
    assert status == 0
    assert text.splitlines()[-1].split("|")[1:] == [" 0, 1 ", " 0, 1 ", " 1, 2 ", " 2, 3 ", " 5 ", " 8 ", " 12"]
    rows = json.loads(run(["table", "--format", "json"])[0])
    assert rows[1] == {"k": 4, "possible_n": [0, 1], "distribution": {"0": 54, "1": 72}}


def test_classify():
    text, status = run(["classify", "--subset", "[0,0 1,0 2,0 0,1]"])
    assert status == 0 and "n=1" in text and "TypeI" in text
    d = json.loads(run(["classify", "--subset", "[0,0 1,0 2,0 0,1]", "--format", "json"])[0])
    assert d == {"subset": "[0,0 0,1 1,0 2,0]", "k": 4, "n": 1, "tag": "TypeI"}


def test_orbits_and_invariants():
    d = json.loads(run(["orbits", "--k", "3", "--format", "json"])[0])
    assert [o["n"] for o in d[0]["orbits"]] == [1, 0]
    d = json.loads(run(["invariants", "--subset", "[0,0 1,0 2,0 0,1]", "--format", "json"])[0])
    assert d["summary"]["fibre_counts"] == {"d6": 1, "alex": 1, "split": 1, "lks": 1}


def test_realize_json_is_exact():
    d = json.loads(run(["realize", "--mu", "0", "--subset", "[0,1 1,1 2,1]", "--format", "json"])[0])
    assert d["mu"] == "0/1"
    kinds = [r["kind"] for r in d["records"]]
    assert kinds.count("tangency") == 3 and kinds.count("concurrency") == 1
    conc = next(r for r in d["records"] if r["kind"] == "concurrency")
    assert conc["point"] == [{"rational": "0/1", "omega": "0/1"}] * 2 + [{"rational": "1/1", "omega": "0/1"}]
    assert d["canonical_type"]["k"] == 3


def test_scan_k7_empty():
    d = json.loads(run(["zariski-scan", "--k", "7", "--mu", "2", "--format", "json"])[0])
    assert d["scans"][0]["certificates"] == []


def test_scan_write_and_verify(tmp_path):
    out = tmp_path / "certs"
    text, status = run(["zariski-scan", "--k", "4", "--mu", "2,-1/2", "--output-dir", str(out), "--format", "json"])
    assert status == 0
    files = sorted(out.glob("*.json"))
    assert len(files) == 2
    text, status = run(["zariski-verify", *map(str, files)])
    assert status == 0 and "2/2 certificates verified" in text
    report = tmp_path / "scan.json"
    report.write_text(text := run(["zariski-scan", "--k", "5", "--mu", "3", "--format", "json"])[0])
    assert run(["zariski-verify", str(report)])[1] == 0


def test_verify_failure_exit(tmp_path):
    cert = json.loads(run(["zariski-scan", "--k", "4", "--mu", "2", "--format", "json"])[0])["scans"][0]["certificates"][0]
    cert["counts"]["n2"] = 1
    f = tmp_path / "bad.json"
    f.write_text(json.dumps(cert))
    text, status = run(["zariski-verify", str(f), "--format", "json"])
    assert status == EXIT_VERIFY
    assert json.loads(text)["results"][0]["reason"] == "counts-mismatch"


@pytest.mark.parametrize(
    "argv, status",
    [
        (["classify", "--subset", "[0,0 7,1]"], EXIT_PARSE),
        (["realize", "--mu", "abc", "--subset", "[0,0]"], EXIT_PARSE),
        (["classify", "--subset", "[0,0 1,0]"], EXIT_RANGE),
        (["zariski-scan", "--k", "12", "--mu", "2"], EXIT_RANGE),
        (["zariski-scan", "--k", "4", "--mu", "1"], EXIT_SINGULAR),
        (["realize", "--mu", "1", "--subset", "[0,0]"], EXIT_SINGULAR),
    ],
)
def test_error_codes(argv, status, capsys):
    assert main(argv) == status
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_missing_file(tmp_path):
    assert run(["zariski-verify", str(tmp_path / "nope.json")])[1] == EXIT_PARSE


def test_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_output_file(tmp_path):
    f = tmp_path / "table.txt"
    assert main(["table", "--output", str(f)]) == 0
    assert f.read_text().startswith("k ")


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "artal", "zariski-scan", "--k", "4", "--mu", "2", "0", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
