import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
BIN = os.environ.get("QTORDER_BIN", str(ROOT / "build" / "qtorder"))
FIX = ROOT / "fixtures"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("QTORDER_CAPS", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env, timeout=300)


def reports(proc):
    return [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]


def value(rep):
    v = rep["value"]
    return Fraction(int(v["num"]), int(v["den"]))


def test_rotation_fixture_exact():
    p = run("compute", "rotation", "--map", str(FIX / "rot_3_5.json"), "--iters", "100")
    assert p.returncode == 0
    (r,) = reports(p)
    assert value(r) == Fraction(3, 5)
    assert r["enclosure"] == ["3/5", "3/5"]
    assert r["schema"] == 1


def test_rademacher_word():
    p = run("compute", "rademacher", "--word", "SRSRR")
    assert p.returncode == 0
    (r,) = reports(p)
    # SRSRR = T1 T2 in semigroup form
    assert value(r) == 0
    assert list(r.keys()) == ["schema", "quantity", "value", "enclosure", "samples", "seed", "status", "notes"]


def test_dehornoy_floor_b2():
    p = run("compute", "dehornoy-floor", "--strands", "2", "--braid", "1 1 1 1 1")
    assert p.returncode == 0
    assert value(reports(p)[0]) == 2


def test_braid_translation_sigma1():
    p = run("compute", "braid-tn", "--strands", "2", "--braid", "1")
    lo, hi = (Fraction(s) for s in reports(p)[0]["enclosure"])
    assert lo <= Fraction(1, 2) <= hi


def test_brooks_and_magnus():
    r = reports(run("compute", "brooks", "--word", "BABAa"))
    assert value(r[0]) == -1
    m = reports(run("compute", "magnus-compare", "--u", "e", "--v", "b"))
    assert value(m[0]) == -1


def test_growth_encloses_count():
    r = reports(run("compute", "growth", "--h", "aabbb"))[0]
    lo, hi = (Fraction(s) for s in r["enclosure"])
    assert lo <= 3 <= hi


def test_mobius_parabolic_float_value():
    r = reports(run("compute", "mobius-tn", "--map", str(FIX / "mobius_parabolic.json")))[0]
    assert abs(r["value"]["float"]) <= r["value"]["abs_err"]
    assert r["enclosure"][0] <= 0 <= r["enclosure"][1]


def test_usage_errors_exit_2():
    assert run("compute", "nonsense").returncode == 2
    assert run("verify", "nonsense").returncode == 2
    assert run("compute", "rademacher", "--format", "xml", "--word", "S").returncode == 2
    assert run("compute", "rademacher").returncode == 2
    assert run("compute", "rademacher", "--word", "S", env={"QTORDER_CAPS": "nope"}).returncode == 2


def test_domain_error_exit_1():
    p = run("compute", "rademacher", "--word", "SRX")
    assert p.returncode == 1
    (r,) = reports(p)
    assert r["status"] == "FAIL"
    assert r["notes"][0] == "PARSE_ERROR"
    p = run("compute", "dehornoy-floor", "--strands", "3", "--braid", "1 5")
    assert p.returncode == 1
    assert reports(p)[0]["notes"][0] == "BAD_GENERATOR"


def test_caps_override_reaches_library():
    braid = "1 2 -1 2 1 -2 -1"
    assert run("compute", "dehornoy-floor", "--strands", "3", "--braid", braid).returncode == 0
    p = run("compute", "dehornoy-floor", "--strands", "3", "--braid", braid,
            env={"QTORDER_CAPS": "reduction_steps=1"})
    assert p.returncode == 1
    (r,) = reports(p)
    assert r["quantity"] == "dehornoy_floor"
    assert r["notes"][0] == "REDUCTION_CAP"


def test_verify_all_deterministic():
    a = run("verify", "all", "--radius", "4", "--seed", "1")
    b = run("verify", "all", "--radius", "4", "--seed", "1")
    assert a.returncode == 0, a.stdout
    assert a.stdout == b.stdout
    rs = reports(a)
    assert rs and all(r["status"] == "PASS" for r in rs)
    assert all(r["seed"] == 1 for r in rs)


@pytest.mark.parametrize("suite", ["completion", "hyperbolic"])
def test_verify_suites_pass(suite):
    p = run("verify", suite, "--seed", "7")
    assert p.returncode == 0
    rs = reports(p)
    assert rs and all(r["status"] == "PASS" for r in rs)


def test_hyperbolic_names():
    rs = reports(run("verify", "hyperbolic"))
    names = [r["quantity"] for r in rs]
    assert "hyperbolic_parabolic" in names and "hyperbolic_translation" in names


def test_csv_format_and_out(tmp_path):
    out = tmp_path / "r.csv"
    p = run("verify", "completion", "--format", "csv", "--out", str(out))
    assert p.returncode == 0
    assert p.stdout == ""
    lines = out.read_text().splitlines()
    assert lines[0] == "quantity,value,lo,hi,samples,seed,status,notes"
    assert len(lines) > 1


def test_embed_csv(tmp_path):
    p = run("embed", "rademacher", "--radius", "3")
    assert p.returncode == 0
    lines = p.stdout.splitlines()
    assert lines[0] == "element_word,x,y"
    rows = [line.split(",") for line in lines[1:]]
    assert ["e", "0", "0"] in rows
    coords = {(r[1], r[2]) for r in rows}
    assert len(coords) == len(rows)
    out = tmp_path / "hair.csv"
    assert run("embed", "brooks-hair", "--radius", "2", "--out", str(out)).returncode == 0
    hair = out.read_text().splitlines()
    assert hair[0] == "element_word,x,y"
    assert len(hair) == 1 + 17
