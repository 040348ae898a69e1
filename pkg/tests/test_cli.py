"""Command-line surface: output formats, exit codes, determinism."""

import json

import pytest

from negpolylog.algebra import rf_from_json
from negpolylog.cli import main, parse_complex
from negpolylog.polylog import chi_neg


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_closed_form_text(capsys):
    code, out, _ = run(capsys, "li", "0")
    assert code == 0 and out.strip() == "z/(1-z)"
    code, out, _ = run(capsys, "chi", "2", "--format", "text")
    assert code == 0 and out.strip() == "(z + 6z^3 + z^5)/(1-z^2)^3"
    code, out, _ = run(capsys, "cot-poly", "1")
    assert code == 0 and out.strip() == "-1 - u^2"
    code, out, _ = run(capsys, "tanh-poly", "1")
    assert code == 0 and out.strip() == "1 - u^2"


def test_closed_form_latex(capsys):
    code, out, _ = run(capsys, "chi", "3", "--format", "latex")
    assert code == 0
    assert out.strip() == r"\frac{z + 23z^{3} + 23z^{5} + z^{7}}{(1-z^{2})^{4}}"


def test_closed_form_json_round_trips(capsys):
    code, out, _ = run(capsys, "chi", "2", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["kind"] == "chi" and blob["n"] == 2
    assert rf_from_json(blob) == chi_neg(2)


def test_poly_json(capsys):
    code, out, _ = run(capsys, "cot-poly", "3", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"target": "cot", "n": 3, "coeffs": ["-2", "0", "-8", "0", "-6"]}


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "li", "1", "0.5")
    assert code == 0 and float(out) == pytest.approx(2.0)
    code, out, _ = run(capsys, "eval", "chi", "0", "0.5")
    assert code == 0 and float(out) == pytest.approx(2 / 3)
    code, out, _ = run(capsys, "eval", "li", "2", "0.3+0.2i")
    assert code == 0 and "i" in out
    code, out, _ = run(capsys, "eval", "tan-poly", "2", "0.5")
    assert code == 0 and float(out) == pytest.approx(2 * 0.5 + 2 * 0.5**3)


def test_eval_pole_exit_code(capsys):
    code, _, err = run(capsys, "eval", "li", "0", "1")
    assert code == 3 and "pole" in err.lower()


def test_usage_errors(capsys):
    code, _, err = run(capsys, "eval", "li", "1", "half")
    assert code == 2 and "parse" in err
    code, _, _ = run(capsys, "li", "65")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_parse_complex():
    assert parse_complex("0.5") == 0.5 + 0j
    assert parse_complex("0.3+0.2i") == 0.3 + 0.2j
    assert parse_complex("1-2i") == 1 - 2j
    assert parse_complex("1e-3+2.5e1i") == 0.001 + 25j
    with pytest.raises(Exception):
        parse_complex("i")


def test_verify_ladder(capsys):
    code, out, _ = run(capsys, "verify", "ladder", "--n-max", "10")
    assert code == 0
    assert "checks passed" in out
    assert "FAIL" not in out


def test_verify_inverse_json(capsys):
    code, out, _ = run(capsys, "verify", "inverse", "--n-max", "2", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    names = {r["identity"] for r in reports}
    assert sum(1 for name in names if not name.startswith("generic")) == 12
    for r in reports:
        assert set(r) >= {"identity", "n", "points", "pass"}
        for p in r["points"]:
            assert set(p) >= {"x", "lhs", "rhs", "rel_err"}
        assert r["pass"] is True


def test_verify_inverse_name_filter(capsys):
    code, out, _ = run(capsys, "verify", "inverse", "--n-max", "3", "--name", "arcsinh",
                       "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert {r["identity"] for r in reports} == {"arcsinh"}
    assert [r["n"] for r in reports] == [0, 1, 2, 3]


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n-max", "2", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(r["pass"] for r in reports)
    names = {r["identity"] for r in reports}
    assert {"construction route equality", "duplication identity",
            "ladder main relation"} <= names


def test_poly_latex(capsys):
    code, out, _ = run(capsys, "cot-poly", "1", "--format", "latex")
    assert code == 0 and out.strip() == "-1 - u^{2}"


def test_verify_caps(capsys):
    code, _, err = run(capsys, "verify", "trig", "--n-max", "11")
    assert code == 2 and "n-max" in err
    code, _, err = run(capsys, "verify", "ladder", "--n-max", "16")
    assert code == 2


def test_ladder_command(capsys):
    code, out, _ = run(capsys, "ladder", "--n", "6")
    assert code == 0
    assert out.strip() == (
        "Li[-6](z) - Li[-6](-z) = (2/z) * [Li[0](z^2) - 12*Li[-1](z^2) + 60*Li[-2](z^2)"
        " - 160*Li[-3](z^2) + 240*Li[-4](z^2) - 192*Li[-5](z^2) + 64*Li[-6](z^2)]"
    )
    code, out, _ = run(capsys, "ladder", "--n", "2", "--arrangement", "halved")
    assert code == 0 and out.startswith("(z/2)")
    code, out, _ = run(capsys, "ladder", "--n", "6", "--format", "json")
    assert json.loads(out)["coefficients"] == ["1", "-12", "60", "-160", "240", "-192", "64"]
    code, out, _ = run(capsys, "ladder", "--n", "4", "--format", "latex")
    assert code == 0 and out.startswith(r"\operatorname{Li}")


def test_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "inverse", "--n-max", "2", "--format", "json")
    _, out2, _ = run(capsys, "verify", "inverse", "--n-max", "2", "--format", "json")
    assert out1 == out2
