import json
import subprocess
import sys

import pytest

from wreathrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wreath(capsys):
    code, out, _ = run(capsys, "wreath", "A5", "A5")
    assert code == 0 and out.splitlines() == ["W = A5 ≀ A5", "d = 2"]
    code, out, _ = run(capsys, "wreath", "A5", "S5", "--breakdown")
    lines = out.splitlines()
    assert lines[0] == "W = S5 ≀ A5"
    assert lines[1] == "d = 3; direct=2 dA+1=2 p=2:3"
    code, out, _ = run(capsys, "wreath", "S5", "S5", "S5")
    assert out.splitlines()[-1] == "d = 4"


def test_wreath_json_is_stable(capsys):
    _, a, _ = run(capsys, "wreath", "A5", "S5", "--json")
    _, b, _ = run(capsys, "wreath", "A5", "S5", "--json")
    assert a == b
    data = json.loads(a)
    assert data["d"] == 3 and data["terms"]["primes"] == {"2": 3}


def test_small_commands(capsys):
    assert run(capsys, "awr", "2", "A5")[1].strip() == "3"
    assert run(capsys, "dxg", "2,2", "S5")[1].strip() == "3"
    assert run(capsys, "dp", "2,12", "2")[1].strip() == "2"
    code, out, _ = run(capsys, "awr", "2", "C3", "--oracle")
    assert code == 0 and out.splitlines() == ["2", "oracle: 2"]


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "show", "S5")
    assert code == 0
    assert out.splitlines()[0] == "S5: socle A5, |S|=60, ab=C2, d=2"
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == 0 and len(json.loads(out)["entries"]) > 100
    code, out, _ = run(capsys, "catalog", "show", "M", "--json")
    assert json.loads(out)["socle_order"] == "808017424794512875886459904961710757005754368000000000"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "wreath", "A5", "NoSuchGroup")
    assert code == 2 and "unknown group" in err
    code, _, err = run(capsys, "wreath", "A5", "PSL2_77")
    assert code == 2 and "PSL2_7" in err
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "dp", "2,12", "4")[0] == 2
    assert run(capsys, "awr", "C0", "A5")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "dxg", "2", "M24", "--oracle")[0] == 2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "catalog", "--json")
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["record"] == "summary" and records[-1]["fail"] == 0


def test_custom_catalog(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"entries": [{
        "name": "PSL2_53", "socle_name": "PSL2_53", "socle_order": "74412",
        "abelianization": [], "rank": 2, "simple": True}]}))
    code, out, _ = run(capsys, "wreath", "PSL2_53", "S5", "--catalog", str(path))
    assert code == 0 and out.splitlines()[-1] == "d = 3"
    path.write_text("{not json")
    assert run(capsys, "wreath", "A5", "--catalog", str(path))[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "wreathrank", "dp", "2,12", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1"
