import json
import subprocess

import pytest


def run(cli, *args, env=None):
    return subprocess.run([cli, *map(str, args)], capture_output=True, text=True, env=env, timeout=600)


def run_json(cli, *args):
    r = run(cli, *args)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout)


def test_thresholds(cli):
    a1 = run_json(cli, "thresholds", "A1")
    assert a1["levels"] == [1, 4, 7, 10, 13, 28]
    assert a1["total"] == 6
    assert run_json(cli, "thresholds", "--algebra", "A3")["total"] == 60
    a4 = run_json(cli, "thresholds", "A4")
    assert (a4["total"], a4["max"]) == (69, 1045)


def test_json_keys_are_sorted(cli):
    out = run(cli, "thresholds", "A2").stdout
    data = json.loads(out)
    assert json.dumps(data, sort_keys=True, separators=(",", ":")) == json.dumps(data, separators=(",", ":"))


def test_candidates_formats(cli):
    data = run_json(cli, "candidates", "--algebra", "A2", "--level", "5")
    assert sorted(tuple(c["weight"]) for c in data["candidates"]) == [(0, 0), (2, 2)]
    csv = run(cli, "--format", "csv", "candidates", "--algebra", "A2", "--level", "5").stdout.splitlines()
    assert csv[0].split(",")[0] == "weight"
    assert len(csv) == 3
    text = run(cli, "candidates", "--algebra", "A2", "--level", "5", "--format", "text").stdout
    assert "(22)" in text


def test_classify_certificate(cli, tmp_path):
    cert = tmp_path / "cert.json"
    data = run_json(cli, "classify", "--algebra", "A2", "--level", "57", "--jgroup", "auto", "--emit-certificate", cert)
    stored = json.loads(cert.read_text())
    assert stored == data
    for key in ("level", "jgroup", "probes", "bounds", "verdict"):
        assert key in stored
    assert stored["verdict"] == "no-exotic"
    assert [1, 4] in [p["mu"] for p in stored["probes"]]
    assert all(b["bound"] == 0 for b in stored["bounds"])


def test_unresolved_exit_code(cli):
    assert run(cli, "classify", "--algebra", "A2", "--level", "57", "--probe-budget", "1").returncode == 2


def test_survivors(cli):
    data = run_json(cli, "survivors", "--algebra", "A1", "--level", "10")
    groups = {tuple(g["theta"]): sorted(e["weight"][0] for e in g["entries"]) for g in data["groups"]}
    assert groups == {(0, 1): [0, 6], (1, 2): [4, 10], (5, 16): [3, 7]}


def test_branch_solve(cli):
    data = run_json(cli, "branch", "--algebra", "A1", "--level", "10", "--solve")
    sol = data["branching"][0]["solutions"][0]
    assert sol["verify"]["ok"]
    rows = sorted(sorted(tuple(t["weight"]) for t in r["terms"]) for r in sol["branching"]["rows"])
    assert rows == [[(0,), (6,)], [(3,), (7,)], [(4,), (10,)]]


def test_verify_catalog(cli, catalog):
    data = run_json(cli, "verify", "--catalog", catalog)
    assert data["ok"]
    assert len(data["entries"]) == 11


def test_verify_corrupted_catalog(cli, catalog, tmp_path):
    entries = json.loads(catalog.read_text())
    swap = {(3,): [4], (4,): [3]}
    for row in entries[0]["rows"]:
        for t in row["terms"]:
            t["weight"] = swap.get(tuple(t["weight"]), t["weight"])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(entries))
    r = run(cli, "verify", "--catalog", bad)
    assert r.returncode == 3
    report = json.loads(r.stdout)
    assert not report["entries"][0]["verify"]["ok"]
    assert report["entries"][0]["verify"]["s_residual"] > 0.1


def test_verify_empty_catalog(cli, tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("[]")
    r = run(cli, "verify", "--catalog", empty)
    assert r.returncode == 0
    assert "warning" in r.stderr


@pytest.mark.parametrize(
    "args",
    [
        [],
        ["thresholds", "Q7"],
        ["candidates", "--algebra", "A2"],
        ["classify", "--algebra", "A2", "--level", "5", "--jgroup", "sideways"],
        ["sweep", "A2", "--from", "9", "--to", "3"],
        ["nonsense"],
    ],
)
def test_usage_errors(cli, args):
    assert run(cli, *args).returncode == 64


def test_sweep_identifies_a1(cli):
    data = run_json(cli, "sweep", "A1", "--from", "1", "--to", "30")
    assert data["identified"] == [10, 28]
    assert data["step2_levels"] == [10, 28]


def test_sweep_output_independent_of_jobs(cli):
    one = run(cli, "sweep", "A2", "--jobs", "1")
    many = run(cli, "sweep", "A2", "--jobs", "4")
    assert one.returncode == many.returncode == 0
    assert one.stdout == many.stdout
    assert json.loads(one.stdout)["identified"] == [5, 9, 21]


def test_sweep_resumes_from_cache(cli, tmp_path):
    first = run(cli, "--cache-dir", tmp_path, "sweep", "A2", "--no-solve")
    assert any(tmp_path.rglob("*.json"))
    second = run(cli, "sweep", "A2", "--no-solve", env={"ETALE_CACHE_DIR": str(tmp_path)})
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
