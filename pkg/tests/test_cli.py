import json

import pytest

from tribsum.cli import (
    EXIT_MISMATCH,
    EXIT_OEIS,
    EXIT_OK,
    EXIT_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTerm:
    def test_catalog_sequence(self, capsys):
        code, out, _ = run(capsys, "term", "--seq", "tribonacci", "--n", "7")
        assert code == EXIT_OK
        assert out.strip() == "24"

    def test_negative_index(self, capsys):
        code, out, _ = run(capsys, "term", "--seq", "perrin", "--n", "-1")
        assert code == EXIT_OK
        assert out.strip() == "-1"

    def test_explicit_parameters(self, capsys):
        code, out, _ = run(capsys, "term",
                           "--r", "2", "--s", "1", "--t", "1",
                           "--w0", "0", "--w1", "1", "--w2", "2",
                           "--n", "5")
        assert code == EXIT_OK
        assert out.strip() == "33"

    def test_rational_parameters(self, capsys):
        code, out, _ = run(capsys, "term",
                           "--r", "1/2", "--s", "1", "--t", "1",
                           "--w0", "0", "--w1", "1", "--w2", "1",
                           "--n", "3")
        assert code == EXIT_OK
        assert out.strip() == "3/2"

    def test_seq_and_explicit_conflict(self, capsys):
        code, _, err = run(capsys, "term", "--seq", "tribonacci",
                           "--r", "1", "--n", "3")
        assert code == EXIT_USAGE
        assert "mutually exclusive" in err

    def test_missing_parameters(self, capsys):
        code, _, err = run(capsys, "term", "--r", "1", "--n", "3")
        assert code == EXIT_USAGE
        assert "--w0" in err

    def test_decimal_rejected(self, capsys):
        code, _, err = run(capsys, "term",
                           "--r", "1.5", "--s", "1", "--t", "1",
                           "--w0", "0", "--w1", "1", "--w2", "1",
                           "--n", "3")
        assert code == EXIT_USAGE

    def test_unknown_sequence(self, capsys):
        code, _, err = run(capsys, "term", "--seq", "fibonacci", "--n", "3")
        assert code == EXIT_USAGE
        assert "unknown sequence" in err

    def test_zero_t_negative_index(self, capsys):
        code, _, _ = run(capsys, "term",
                         "--r", "1", "--s", "1", "--t", "0",
                         "--w0", "0", "--w1", "1", "--w2", "1",
                         "--n", "-2")
        assert code == EXIT_USAGE

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "--format", "json",
                           "term", "--seq", "tribonacci", "--n", "13")
        assert code == EXIT_OK
        record = json.loads(out)
        assert record == {"command": "term", "seq": "tribonacci",
                          "n": 13, "value": "927"}


class TestSum:
    def test_forward_all(self, capsys):
        code, out, _ = run(capsys, "sum", "--seq", "tribonacci",
                           "--dir", "fwd", "--parity", "all", "--n", "10")
        assert code == EXIT_OK
        assert out.strip() == "326 (FwdAll_Generic)"

    def test_degenerate_case(self, capsys):
        code, out, _ = run(capsys, "sum", "--seq", "pell-padovan",
                           "--dir", "fwd", "--parity", "even", "--n", "2")
        assert code == EXIT_OK
        assert out.strip() == "5 (Fwd_021_Even)"

    def test_backward_even(self, capsys):
        code, out, _ = run(capsys, "sum", "--seq", "pell-padovan",
                           "--dir", "bwd", "--parity", "even", "--n", "1")
        assert code == EXIT_OK
        assert out.strip() == "3 (Bwd_021_Even)"

    def test_fallback_case(self, capsys):
        code, out, _ = run(capsys, "sum",
                           "--r", "1", "--s", "1", "--t", "-1",
                           "--w0", "0", "--w1", "1", "--w2", "1",
                           "--dir", "fwd", "--parity", "all", "--n", "6")
        assert code == EXIT_OK
        assert out.strip().endswith("(OracleFallback)")

    def test_check_flag(self, capsys):
        code, out, _ = run(capsys, "--format", "json",
                           "sum", "--seq", "perrin",
                           "--dir", "bwd", "--parity", "odd", "--n", "2",
                           "--check")
        assert code == EXIT_OK
        record = json.loads(out)
        assert record["value"] == "1"
        assert record["oracle_checked"] is True

    def test_backward_n_zero_rejected(self, capsys):
        code, _, _ = run(capsys, "sum", "--seq", "tribonacci",
                         "--dir", "bwd", "--parity", "all", "--n", "0")
        assert code == EXIT_USAGE

    def test_json_deterministic(self, capsys):
        args = ("--format", "json", "sum", "--seq", "tribonacci",
                "--dir", "fwd", "--parity", "odd", "--n", "3")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second
        assert json.loads(first)["value"] == "34"


class TestVerify:
    def test_single_sequence(self, capsys):
        code, out, _ = run(capsys, "verify", "--seq", "tribonacci",
                           "--max-n", "20")
        assert code == EXIT_OK
        assert "PASS" in out
        assert "FAIL" not in out

    def test_random_parameter_sets(self, capsys):
        code, out, _ = run(capsys, "verify", "--seq", "tribonacci",
                           "--max-n", "10", "--random", "3", "--seed", "7")
        assert code == EXIT_OK
        assert "FAIL" not in out

    def test_json_records(self, capsys):
        code, out, _ = run(capsys, "--format", "json",
                           "verify", "--seq", "perrin", "--max-n", "10")
        assert code == EXIT_OK
        records = [json.loads(line) for line in out.splitlines()]
        assert records[-1]["suite"] == "total"
        assert records[-1]["status"] == "PASS"


class TestOeisCheck:
    def test_single_fixture_backed(self, capsys):
        code, out, _ = run(capsys, "oeis-check", "--seq", "tribonacci")
        assert code == EXIT_OK
        assert "aligned (shift 1)" in out
        assert "50/50 match" in out

    def test_no_oeis_id_skipped(self, capsys):
        code, out, _ = run(capsys, "oeis-check", "--seq", "pell-perrin")
        assert code == EXIT_OK
        assert "skipped" in out

    def test_missing_fixture_fails(self, capsys):
        code, out, _ = run(capsys, "oeis-check", "--seq", "narayana")
        assert code == EXIT_OEIS
        assert "error" in out

    def test_fixture_dir_override(self, capsys, tmp_path):
        (tmp_path / "b001608.txt").write_text(
            "".join(f"{n} {v}\n" for n, v in enumerate(
                [3, 0, 2, 3, 2, 5, 5, 7, 10, 12, 17, 22, 29, 39, 51])))
        code, out, _ = run(capsys, "oeis-check", "--seq", "perrin",
                           "--count", "12", "--fixture-dir", str(tmp_path))
        assert code == EXIT_OK
        assert "12/12 match" in out

    def test_misaligned_data_fails(self, capsys, tmp_path):
        (tmp_path / "b001608.txt").write_text(
            "".join(f"{n} 0\n" for n in range(40)))
        code, out, _ = run(capsys, "oeis-check", "--seq", "perrin",
                           "--fixture-dir", str(tmp_path))
        assert code == EXIT_OEIS
        assert "no alignment" in out


class TestBench:
    def test_reports_speedup(self, capsys):
        code, out, _ = run(capsys, "--format", "json",
                           "bench", "--seq", "tribonacci", "--n", "500")
        assert code == EXIT_OK
        record = json.loads(out)
        assert record["case_used"] == "FwdAll_Generic"
        assert record["closed_ns"] > 0 and record["oracle_ns"] > 0


class TestCatalog:
    def test_lists_all_keys(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert len(lines) == 15
        assert lines[0].startswith("tribonacci")
        assert any("pell-perrin" in line and line.rstrip().endswith("-")
                   for line in lines)

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--format", "json", "catalog")
        records = [json.loads(line) for line in out.splitlines()]
        assert code == EXIT_OK
        assert [r["key"] for r in records] == [
            "tribonacci", "tribonacci-lucas", "third-order-pell",
            "third-order-pell-lucas", "third-order-modified-pell",
            "padovan", "perrin", "padovan-perrin", "pell-padovan",
            "pell-perrin", "jacobsthal-padovan", "jacobsthal-perrin",
            "narayana", "third-order-jacobsthal",
            "third-order-jacobsthal-lucas"]
