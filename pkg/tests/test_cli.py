import json
import subprocess
import sys

import pytest

from restrictedsums.cli import (
    EXIT_CAP,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_VIOLATION,
    main,
    parse_family,
    parse_int_list,
    parse_window,
)
from restrictedsums.domain import IntegerLattice, PrimeField
from restrictedsums.errors import InputError


class TestParsing:
    def test_family_literals(self):
        fam = parse_family("{0,1,4};{2,3}", IntegerLattice())
        assert fam.members == ((0, 1, 4), (2, 3))

    def test_repetition_shorthand(self):
        fam = parse_family("{0,1,2}x5", IntegerLattice())
        assert fam.members == ((0, 1, 2),) * 5

    def test_mixed_repetition(self):
        fam = parse_family("{0,1}x2;{5}", IntegerLattice())
        assert fam.members == ((0, 1), (0, 1), (5,))

    def test_tuple_elements(self):
        fam = parse_family("{(0,0),(1,2)};{(3,-1)}", IntegerLattice(2))
        assert fam.members == (((0, 0), (1, 2)), ((3, -1),))

    def test_residues_validated(self):
        parse_family("{0,1,6}", PrimeField(7))
        with pytest.raises(InputError):
            parse_family("{0,7}", PrimeField(7))

    @pytest.mark.parametrize("bad", [
        "", "{}", "0,1", "{0,1", "{0,1}y3", "{0,1}x0", "{a}", "{(1,2}",
    ])
    def test_bad_literals(self, bad):
        with pytest.raises(InputError):
            parse_family(bad, IntegerLattice())

    def test_int_lists_and_ranges(self):
        assert parse_int_list("5") == (5,)
        assert parse_int_list("2,3,5") == (2, 3, 5)
        assert parse_int_list("2:5") == (2, 3, 4, 5)
        assert parse_int_list("1,4:6") == (1, 4, 5, 6)
        assert parse_window("0:12") == (0, 12)
        with pytest.raises(InputError):
            parse_int_list("2:x")


class TestEnumerate:
    def test_prime_field(self, capsys):
        code = main(["enumerate", "--kind", "linear", "--zp", "7",
                     "{0,1,2};{0,1,2};{0,1,2}"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "cardinality=5" in out
        assert "[1, 2, 3, 4, 5]" in out

    def test_cyclic_empty(self, capsys):
        code = main(["enumerate", "--kind", "cyclic", "--int", "{0,1}x3"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "cardinality=0" in out

    def test_distinct(self, capsys):
        code = main(["enumerate", "--kind", "distinct", "--int", "{0,1,2}x3"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "[3]" in out

    def test_jsonl_format(self, capsys):
        code = main(["enumerate", "--kind", "plain", "--zp", "5",
                     "--format", "jsonl", "{3,4};{3,4}"])
        rec = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert rec["elements"] == [1, 2, 3]

    def test_oracle_crosscheck(self, capsys):
        code = main(["enumerate", "--kind", "cyclic", "--int", "--oracle",
                     "{0,1,5}x5"])
        assert code == EXIT_OK

    def test_parse_error_exit_2(self, capsys):
        assert main(["enumerate", "--int", "{0,1"]) == EXIT_INPUT
        assert main(["enumerate", "{0,1}"]) == EXIT_INPUT  # no domain

    def test_cap_exit_3(self, capsys):
        code = main(["enumerate", "--int", "--oracle", "--cap", "10",
                     "{0,1,2,3}x4"])
        assert code == EXIT_CAP

    def test_argparse_error_exit_2(self, capsys):
        assert main(["enumerate", "--kind", "bogus", "--int", "{0}"]) == EXIT_INPUT
        assert main(["no-such-command"]) == EXIT_INPUT


class TestIdentities:
    def test_all_pass(self, capsys):
        code = main(["identities", "--max-even", "6", "--max-odd", "5",
                     "--max-n", "4", "--max-k", "2"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "FAIL" not in out
        lines = [l for l in out.splitlines() if l.startswith("PASS")]
        assert len(lines) > 10
        assert any("cycle-transform n=6" in l for l in lines)
        assert any("cycle-path-recursion n=9" in l for l in lines)


class TestVerify:
    def test_corollary(self, capsys):
        code = main(["verify", "--check", "corollary", "--zp", "2,3,5,7"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "instances=82" in out

    def test_l3_small(self, capsys):
        code = main(["verify", "--check", "l3", "--zp", "2,3"])
        assert code == EXIT_OK

    def test_equality_window(self, capsys):
        code = main(["verify", "--check", "equality", "--int",
                     "--window", "0:7", "--sizes", "3", "--n", "4:5"])
        assert code == EXIT_OK

    def test_structural_violations_exit_1(self, capsys):
        # cyclic n=3 forced equalities are honestly reported as violations
        code = main(["verify", "--check", "equality", "--int",
                     "--window", "0:5", "--sizes", "3", "--n", "3",
                     "--kind", "cyclic"])
        out = capsys.readouterr().out
        assert code == EXIT_VIOLATION
        assert "violated" in out


class TestSweep:
    def test_writes_jsonl_report(self, tmp_path, capsys):
        out_file = tmp_path / "report.jsonl"
        code = main(["sweep", "--check", "conjecture", "--zp", "5",
                     "--n", "3", "--sizes", "3", "--format", "jsonl",
                     "--out", str(out_file)])
        assert code == EXIT_OK
        lines = out_file.read_text().splitlines()
        records = [json.loads(l) for l in lines]
        assert records[-1]["record"] == "summary"
        assert records[-1]["instances"] == 2000  # 10^3 families x 2 kinds
        body = records[:-1]
        assert len(body) == 2000
        assert {r["verdict"] for r in body} <= {"holds", "equality"}
        assert all(set(r) >= {"check", "domain", "kind", "family", "bound",
                              "actual", "verdict", "witness"} for r in body)

    def test_repeat_is_byte_identical(self, tmp_path, capsys):
        args = ["sweep", "--check", "conjecture", "--zp", "7", "--n", "3",
                "--sizes", "3", "--kind", "linear", "--cap", "500",
                "--sample", "150", "--seed", "42", "--format", "jsonl"]
        f1, f2 = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        assert main(args + ["--out", str(f1)]) == EXIT_OK
        assert main(args + ["--out", str(f2)]) == EXIT_OK
        b1, b2 = f1.read_bytes(), f2.read_bytes()
        assert b1 == b2
        assert b1  # sampled run still produced records

    def test_out_dir_env_override(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("RESTRICTEDSUMS_OUT_DIR", str(tmp_path))
        code = main(["sweep", "--check", "corollary", "--zp", "3",
                     "--format", "jsonl", "--out", "cov.jsonl"])
        assert code == EXIT_OK
        assert (tmp_path / "cov.jsonl").exists()

    def test_text_format(self, tmp_path, capsys):
        out_file = tmp_path / "report.txt"
        code = main(["sweep", "--check", "corollary", "--zp", "5",
                     "--out", str(out_file)])
        assert code == EXIT_OK
        text = out_file.read_text()
        assert "summary:" in text
        assert "equality" in text


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "restrictedsums", "enumerate", "--int",
         "--kind", "linear", "{0,1};{5,7};{0,1}"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[5, 6, 7, 8, 9]" in proc.stdout
