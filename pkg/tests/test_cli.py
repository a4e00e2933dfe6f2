"""Command-line behaviour: subcommands, exit codes, machine output."""

import json
from fractions import Fraction

import pytest

from nalc.cli import run

POLL_KB = (
    "assert (some Support war_x)(p1) >= 0.6 <= 0.5\n"
    "assert (some Support war_y)(p2) >= 0.8 <= 0.1\n"
    "spec war_x < War\n"
    "spec war_y < War\n"
)


@pytest.fixture
def poll_kb(tmp_path):
    path = tmp_path / "polls.nalc"
    path.write_text(POLL_KB, encoding="utf-8")
    return str(path)


class TestEntailsCommand:
    def test_positive_query_exits_zero(self, poll_kb, capsys):
        code = run(["entails", poll_kb, "--query",
                    "assert (some Support War)(p1) >= 0.6 <= 0.5"])
        assert code == 0
        assert "true" in capsys.readouterr().out

    def test_negative_query_exits_one(self, poll_kb, capsys):
        code = run(["entails", poll_kb, "--query",
                    "assert (some Support War)(p1) >= 0.9 <= 0.4"])
        assert code == 1

    def test_trace_shows_the_derivation(self, poll_kb, capsys):
        run(["entails", poll_kb, "--trace", "--query",
             "assert (some Support War)(p1) >= 0.6 <= 0.5"])
        out = capsys.readouterr().out
        assert "Support(p1,x1) >= 0.6 <= 0.5" in out
        assert "(and War war_x*)(x1) >= 0.6 <= 0.5" in out
        assert "War(x1) < 0.6 > 0.5" in out
        assert "War(x1) >= 0.6 <= 0.5" in out
        assert "clash" in out

    def test_oracle_agreement_flag(self, poll_kb, capsys):
        code = run(["entails", poll_kb, "--oracle", "--query",
                    "assert (some Support War)(p2) >= 0.8 <= 0.1"])
        assert code == 0
        assert "oracle agreement: true" in capsys.readouterr().out

    def test_malformed_kb_exits_two(self, tmp_path, capsys):
        path = tmp_path / "broken.nalc"
        path.write_text("assert C(a) >= 1.2 <= 0\n", encoding="utf-8")
        code = run(["entails", str(path), "--query", "assert C(a) >= 0 <= 1"])
        assert code == 2
        assert "degree-range" in capsys.readouterr().err

    def test_batch_mode_runs_each_line(self, poll_kb, tmp_path, capsys):
        queries = tmp_path / "queries.txt"
        queries.write_text(
            "assert (some Support War)(p1) >= 0.6 <= 0.5\n"
            "assert (some Support War)(p1) >= 0.9 <= 0.4\n",
            encoding="utf-8",
        )
        code = run(["entails", poll_kb, "--queries", str(queries)])
        out = capsys.readouterr().out
        assert code == 1
        assert out.count(":") >= 2 and "true" in out and "false" in out

    def test_json_round_trips(self, poll_kb, capsys):
        run(["entails", poll_kb, "--json", "--query",
             "assert (some Support War)(p1) >= 0.6 <= 0.5"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["answer"] is True
        assert payload["query"].startswith("assert")


class TestOtherCommands:
    def test_check_satisfiable(self, poll_kb):
        assert run(["check", poll_kb]) == 0

    def test_check_unsatisfiable(self, tmp_path):
        path = tmp_path / "bad.nalc"
        path.write_text("assert bot(a) >= 1 <= 0\n", encoding="utf-8")
        assert run(["check", str(path)]) == 1

    def test_nnf(self, capsys):
        assert run(["nnf", "(not (and A B))"]) == 0
        assert capsys.readouterr().out.strip() == "(or (not A) (not B))"

    def test_expand_prints_the_assertional_form(self, poll_kb, capsys):
        assert run(["expand", poll_kb]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == [
            "assert (some Support (and War war_x*))(p1) >= 0.6 <= 0.5",
            "assert (some Support (and War war_y*))(p2) >= 0.8 <= 0.1",
        ]

    def test_subsumes(self, capsys):
        assert run(["subsumes", "--sub", "(and A B)", "--super", "A"]) == 0
        assert run(["subsumes", "--sub", "(or A B)", "--super", "A"]) == 1

    def test_subsumes_with_terminology(self, poll_kb):
        assert run(["subsumes", poll_kb, "--sub", "war_x", "--super", "War"]) == 0

    def test_glb_prints_rationals_and_decimals(self, poll_kb, tmp_path, capsys):
        path = tmp_path / "role.nalc"
        path.write_text(
            "assert R(a,b) >= 0.6 <= 0.3\nassert R(a,b) >= 0.7 <= 0.4\n",
            encoding="utf-8",
        )
        assert run(["glb", str(path), "--assertion", "R(a,b)"]) == 0
        out = capsys.readouterr().out
        assert "7/10 3/10" in out and "0.7 0.3" in out

    def test_glb_json_round_trips_rationals(self, tmp_path, capsys):
        path = tmp_path / "role.nalc"
        path.write_text("assert R(a,b) >= 2/3 <= 0.25\n", encoding="utf-8")
        assert run(["glb", str(path), "--json", "--assertion", "R(a,b)"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert Fraction(payload["bound"]["n"]) == Fraction(2, 3)
        assert Fraction(payload["bound"]["m"]) == Fraction(1, 4)

    def test_lub_rejects_role_assertions(self, tmp_path, capsys):
        path = tmp_path / "role.nalc"
        path.write_text("assert R(a,b) >= 0.5 <= 0.5\n", encoding="utf-8")
        assert run(["lub", str(path), "--assertion", "R(a,b)"]) == 2

    def test_usage_error(self, capsys):
        assert run(["entails"]) == 2
