from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from largeness.cli import HANDLERS, RunConfig, canonical_json, compact, main, run

MULT6 = '{"kind": "residues", "mod": 6, "residues": [0]}'


def invoke(*args):
    res = CliRunner().invoke(main, list(args))
    return res.exit_code, res.stdout


def report(*args):
    code, out = invoke(*args)
    return code, json.loads(out) if out.strip() else None


def test_all_commands_registered():
    assert set(main.commands) == set(HANDLERS)
    assert len(HANDLERS) == 17


@pytest.mark.parametrize(
    "args",
    [
        ["law-check", "--semigroup", "ex(4,6)"],
        ["cancel-profile", "--semigroup", "max(10)", "--sample-size", "10"],
        ["fs", "--generators", "[1, 2, 4]"],
        ["ip-search", "--depth", "4"],
        ["ip-split", "--generators", "[2,4,8,16,32,64]", "--parts", "2", "--out-len", "3"],
        ["ffs", "--generators", "[1,1,1,1,1,1,1,1]"],
        ["ufs", "--generators", "[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1]"],
        ["ip-ad", "--generators", json.dumps([2 ** i for i in range(13)])],
        ["cr-search", "--family", "[[1,1,1],[1,3,1]]", "--set", MULT6],
        ["cr-split", "--nmax", "1", "--entry-horizon", "2"],
        ["jp-search", "--polys", "[[1],[1,1]]", "--seqs", "[[6,6,6,6]]", "--set", MULT6],
        ["jp-robust", "--polys", "[[1]]", "--seqs", json.dumps([[3] * 40]), "--remove", "[3,6]",
         "--set", '{"kind": "residues", "mod": 3, "residues": [0]}'],
        ["pp-search", "--polys", "[[2],[0,1]]", "--set", MULT6],
        ["pp-anchored", "--polys", "[[2],[0,1]]", "--set", MULT6],
        ["pp-split", "--degree-max", "1", "--coeff-max", "2", "--size-max", "1"],
        ["pvdw", "--polys", "[[1],[2]]", "--ys", "[5,5,5]",
         "--set", '{"kind": "residues", "mod": 5, "residues": [0]}'],
        ["pws-check", "--set", '{"kind": "residues", "mod": 3, "residues": [0]}'],
    ],
    ids=lambda a: a[0],
)
def test_commands_verify(args):
    code, rep = report(*args)
    assert code == 0, rep
    assert rep["status"] == "verified" and rep["verification"] == "pass"
    assert rep["checks"]


def test_exit_codes():
    assert invoke("ip-search", "--set", '{"kind": "list", "values": [1, 2, 3]}', "--depth", "3")[0] == 3
    assert invoke("ffs", "--generators", "[1,1,1]", "--out-len", "5")[0] == 3
    assert invoke("ufs", "--semigroup", "max(10)", "--generators", "[1,2,3,4,5,6,7,8,9,10]")[0] == 1
    assert invoke("fs", "--semigroup", "bogus")[0] == 2
    assert invoke("fs", "--set", '{"kind": "nope"}', "--generators", "[1]")[0] == 2
    assert invoke("pws-check", "--set", '{"kind": "list", "values": [1, 2, 4, 8]}')[0] == 3
    assert invoke("ip-search", "--depth", "0")[0] == 2  # click usage error


def test_error_payload():
    code, rep = report("ufs", "--semigroup", "max(10)", "--generators", "[1,2,3,4,5,6,7,8,9,10]")
    assert rep["status"] == "verification-failed"
    assert rep["error"]["type"] == "UniquenessViolation"


def test_output_is_deterministic(tmp_path):
    args = ["cr-split", "--nmax", "1", "--entry-horizon", "2", "--parts", "2"]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert invoke(*args, "--out", str(a))[0] == 0
    assert invoke(*args, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "backend" not in a.read_text()


def test_json_from_file(tmp_path):
    p = tmp_path / "gens.json"
    p.write_text("[1, 2, 4]")
    s = tmp_path / "set.json"
    s.write_text(MULT6)
    assert invoke("fs", "--generators", f"@{p}")[0] == 0
    assert invoke("pp-search", "--polys", "[[1]]", "--set", str(s))[0] == 0


def test_run_config_validation():
    cert = run(RunConfig("fs", {"depth": 0}, {"generators": [1]}))
    assert cert.status == "config-error" and cert.exit_code == 2
    assert run(RunConfig("nope")).status == "config-error"


def test_compact_and_canonical():
    small = list(range(10))
    assert compact(small) == small
    big = list(range(5000))
    c = compact(big)
    assert c["count"] == 5000 and c["hash"].startswith("sha256:") and c["head"] == big[:8]
    assert compact(big) == c
    assert canonical_json({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_log_env(monkeypatch):
    monkeypatch.setenv("LARGENESS_LOG", "debug")
    assert invoke("fs", "--generators", "[1]")[0] == 0
