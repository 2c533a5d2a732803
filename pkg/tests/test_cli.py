import json

import pytest

from charprod.cli import main, parse_family, render_table
from charprod.charsets import SignPair
from helpers import field


def test_eval_t13(capsys):
    assert main(["eval", "T 1 3 --", "--p", "13"]) == 0
    out = capsys.readouterr().out
    assert "closed: 2" in out and "brute:  2" in out and "match: true" in out


def test_eval_s1(capsys):
    assert main(["eval", "S1 0 +", "--p", "13"]) == 0
    out = capsys.readouterr().out
    assert "closed: 12" in out


def test_eval_t22(capsys):
    assert main(["eval", "T 2 2 -+", "--p", "5"]) == 0
    out = capsys.readouterr().out
    assert "closed: 4" in out and "cardinality: 1" in out


def test_eval_negative_param_and_a_kind(capsys):
    # S_{-4,0}^{--} = 2 when q = 1 mod 4
    assert main(["eval", "S -4 0 --", "--p", "13"]) == 0
    assert "closed: 2" in capsys.readouterr().out
    # A-kind containing zero has product 0
    assert main(["eval", "A 1 -1 ++", "--p", "13"]) == 0
    out = capsys.readouterr().out
    assert "closed: 0" in out and "match: true" in out


def test_eval_extension_field(capsys):
    assert main(["eval", "T 2,1 1 --", "--p", "3", "--n", "2"]) == 0
    assert "match: true" in capsys.readouterr().out


def test_eval_parse_errors(capsys):
    assert main(["eval", "T 1 -1 --", "--p", "13"]) == 2
    assert "j + l != 0" in capsys.readouterr().err
    assert main(["eval", "T x 3 --", "--p", "13"]) == 2
    assert "token 2" in capsys.readouterr().err
    assert main(["eval", "Q 1 3 --", "--p", "13"]) == 2
    assert "token 1" in capsys.readouterr().err
    assert main(["eval", "S 1 1 ++", "--p", "13"]) == 2
    assert "k != l" in capsys.readouterr().err
    assert main(["eval", "T 1 3 --", "--p", "12"]) == 2


def test_parse_family_shapes():
    ctx = field(13)
    fam = parse_family(ctx, "s1 3 -")
    assert fam.kind == "S1" and fam.signs == -1
    fam = parse_family(ctx, "t 1 3 -+")
    assert fam.signs == SignPair(-1, 1)
    with pytest.raises(ValueError):
        parse_family(ctx, "T 1 3")
    with pytest.raises(ValueError):
        parse_family(ctx, "S1 3 -+")
    with pytest.raises(ValueError):
        parse_family(ctx, "")


def test_verify_empty_range(capsys):
    assert main(["verify", "--qmin", "50", "--qmax", "40"]) == 0
    assert capsys.readouterr().out == ""


def test_verify_small_range_report_roundtrip(tmp_path):
    out = tmp_path / "report.jsonl"
    rc = main(["verify", "--qmax", "9", "--out", str(out),
               "--suites", "tables,intro,dickson"])
    assert rc == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert rows and all(r["ok"] for r in rows)
    keys = {"q", "suite", "case", "expected", "actual", "ok"}
    assert all(keys <= set(r) for r in rows)
    assert {r["q"] for r in rows} == {3, 5, 7, 9}
    # round-trip: re-serializing gives back the same line content
    assert all(json.loads(json.dumps(r)) == r for r in rows)


def test_verify_exit_one_on_mismatch(monkeypatch, capsys):
    # poison one closed form to prove mismatches flip the exit code
    from charprod import closedform, sweeps

    real = closedform.prod_T_closed

    def poisoned(ctx, j, l, signs):
        value = real(ctx, j, l, signs)
        return ctx.add(value, ctx.one) if (j, tuple(signs)) == (0, (1, 1)) else value

    monkeypatch.setattr(sweeps.closedform, "prod_T_closed", poisoned)
    assert main(["verify", "--qmax", "5", "--suites", "tables"]) == 1


def test_verify_rejects_bad_suite(capsys):
    assert main(["verify", "--qmax", "9", "--suites", "nope"]) == 2


def test_verify_workers(tmp_path):
    out = tmp_path / "par.jsonl"
    rc = main(["verify", "--qmax", "13", "--workers", "2",
               "--suites", "intro,dickson", "--out", str(out)])
    assert rc == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert {r["q"] for r in rows} == {3, 5, 7, 9, 11, 13}


def test_table_command(capsys):
    for tid in ("1", "2", "3", "4"):
        assert main(["table", tid, "--p", "7"]) == 0
        out = capsys.readouterr().out
        assert "MISMATCH" not in out
    assert main(["table", "2", "--p", "3"]) == 0
    out = capsys.readouterr().out
    assert "skipped" in out  # tau=3 and tau=1/3 rows fold away at p=3


def test_table_rows_against_spec_examples(capsys):
    assert main(["table", "2", "--p", "7"]) == 0
    out = capsys.readouterr().out
    assert "tau=1 [q=+-1 mod 8] [j=2 l=2]  ++: 1/1  +-: 1/1  -+: 6/6  --: 5/5" in out
    assert main(["table", "1", "--p", "13"]) == 0
    out = capsys.readouterr().out
    # quadruple example: S products at tau=0 over F_13 are (3, 12, 6, 11)
    assert "tau=0 [k=0 l=4]  ++: 3/3  +-: 12/12  -+: 6/6  --: 11/11" in out


def test_table_render_extension_field():
    lines, mismatches = render_table(field(3, 2), 4)
    assert mismatches == 0


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["table", "9", "--p", "7"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # --qmax is required
    assert exc.value.code == 2
