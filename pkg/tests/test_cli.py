import json

import pytest

from stci.cli import main
from stci.mpoly import parse_poly, to_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_delta(capsys):
    code, out, _ = run(capsys, "delta", "--gens", "3,4,6", "--m", "25")
    assert code == 0 and "delta: 5" in out and "[1, 1, 3]" in out
    code, _, err = run(capsys, "delta", "--gens", "3,4,6", "--m", "1")
    assert code == 2 and "NotInSemigroup" in err
    code, data = run_json(capsys, "delta", "--gens", "2,3", "--m", "7", "--all")
    assert data["verdicts"][1]["value"] == [2, 1]
    assert data["verdicts"][2]["value"] == [[2, 1]]


def test_glue(capsys):
    code, out, _ = run(capsys, "glue", "--curve", "2,3,4,8")
    assert code == 0 and "GLUES at i0=2, witness d=(1,1,0)" in out
    code, out, _ = run(capsys, "glue", "--curve", "2,4,7,8")
    assert code == 0 and "NO GLUING (all splits fail)" in out
    code, _, err = run(capsys, "glue", "--curve", "1,2")
    assert code == 2 and "at least 3" in err
    code, _, _ = run(capsys, "glue", "--curve", "4,3,2")
    assert code == 2


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["delta", "--gens", "a,b", "--m", "3"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "extend", "--base", "1,2,4", "--ell", "2", "--m", "4")
    assert code == 2 and "NotCoprime" in err


def test_extend_golden(capsys):
    code, data = run_json(capsys, "extend", "--base", "3,4,6", "--ell", "1", "--m", "25", "--shape", "xn")
    assert code == 0
    eqs = {e["name"]: e["poly"] for e in data["equations"]}
    assert len(parse_poly(eqs["F*"], 5)) == 7
    assert data["oracle"]["vanishing"] and data["oracle"]["eq1"]
    assert set(data) >= {"job", "verdicts", "equations", "oracle", "timing_ms"}


def test_extend_strict_condition(capsys):
    code, _, err = run(capsys, "extend", "--base", "3,4,6", "--ell", "1", "--m", "19", "--shape", "xn", "--strict")
    assert code == 3 and "ConditionFails" in err
    code, _, err = run(capsys, "extend", "--base", "3,4,6", "--ell", "1", "--m", "13", "--shape", "xn")
    assert code == 3


def test_extend_bad(capsys):
    code, data = run_json(capsys, "extend", "--base", "1,2,4", "--ell", "3", "--m", "4", "--q", "5")
    assert code == 0
    eqs = {e["name"]: e["poly"] for e in data["equations"]}
    assert parse_poly(eqs["F"], 5) == parse_poly("x4^3 - x0^2*x3", 5)
    z = data["oracle"]["zero_set"][0]
    assert z["q"] == 5 and z["extras"] == [] and z["missing"] == []
    assert "EVIDENCE" in z["label"]


def test_json_round_trip(capsys):
    _, data = run_json(capsys, "extend", "--base", "1,2,4", "--ell", "1", "--m", "23", "--shape", "chain")
    nv = len(data["job"]["exponents"]) + 1
    for e in data["equations"]:
        assert to_text(parse_poly(e["poly"], nv)) == e["poly"]


@pytest.mark.parametrize("argv", [
    ["glue", "--curve", "2,3,4,8"],
    ["extend", "--base", "3,4,6", "--ell", "1", "--m", "25", "--shape", "xn"],
    ["extend", "--base", "1,2,4", "--ell", "3", "--m", "4"],
])
def test_text_and_json_agree(capsys, argv):
    _, text, _ = run(capsys, *argv)
    _, data = run_json(capsys, *argv)
    for v in data["verdicts"]:
        assert f"{v['name']}: {v['value']}" in text
    for e in data.get("equations", []):
        assert f"{e['name']} = {e['poly']}" in text


def test_verify_curve(capsys):
    code, data = run_json(capsys, "verify", "--curve", "3,4,6,25", "--toric-bound", "7",
                          "--eq", "x1^2 - x0*x3", "--eq", "x1*x2*x3^3 - x0^4*x4")
    assert code == 0 and all(c["contained"] for c in data["oracle"]["toric"]["checks"])
    code, _, _ = run(capsys, "verify", "--curve", "3,4,6,25", "--eq", "x1^2 - x0*x2")
    assert code == 4
    code, data = run_json(capsys, "verify", "--curve", "3,4,6,25", "--eq", "x1^2 - x0*x3",
                          "--eq", "x2^3 - x0*x3^2", "--eq", "x1*x2*x3^3 - x0^4*x4",
                          "--q", "7", "--exclude-line", "3")
    assert code == 0 and data["oracle"]["zero_set"][0]["extras"] == []


def test_verify_extension(capsys):
    code, data = run_json(capsys, "verify", "--base", "3,4,6", "--ell", "1", "--m", "25", "--shape", "xn",
                          "--toric-bound", "7")
    assert code == 0
    assert all(c["contained"] for c in data["oracle"]["toric"]["checks"])


def test_sweep_ex45(capsys):
    code, data = run_json(capsys, "sweep", "--family", "ex45", "--s", "3..10")
    assert code == 0
    assert data["summary"] == {"instances": 8, "ok": 8, "glue": 0}


def test_sweep_ex56(capsys):
    code, data = run_json(capsys, "sweep", "--family", "ex56", "--ell", "1..3", "--s", "2..5")
    assert code == 0
    assert data["summary"]["instances"] == data["summary"]["ok"] > 0
    assert all("gcd" in s["reason"] for s in data["skipped"])
    code, text, _ = run(capsys, "sweep", "--family", "rational-normal")
    assert code == 0 and "rational-normal" in text


def test_sweep_collects_errors(capsys):
    code, data = run_json(capsys, "sweep", "--family", "ex45", "--s", "1..3", "--strict")
    assert [r.get("error") for r in data["instances"]] == ["ConditionFails", "ConditionFails", "ConditionFails"]
    assert code == 4
