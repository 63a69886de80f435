"""Command-line interface: rendering, exit codes, and format contracts."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from pdbell import checks
from pdbell.bernoulli import bernoulli
from pdbell.checks import CheckReport, Status, SuiteConfig, SuiteReport
from pdbell.cli import _check_exit_code, canonical_json, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# table


def test_table_pdb_text(capsys):
    code, out, err = run_cli(capsys, "table", "pdb", "--max-n", "3")
    assert code == 0
    assert err == ""
    assert out == (
        "table pdb\n"
        "n=0: 1\n"
        "n=1: 0 1\n"
        "n=2: 1 1 1\n"
        "n=3: 5 4 3 1\n"
    )


def test_table_single_row(capsys):
    code, out, _ = run_cli(capsys, "table", "stirling2", "--n", "4")
    assert code == 0
    assert out == "table stirling2\nn=4: 0 1 7 6 1\n"


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "pdb", "--max-n", "2", "--format", "csv")
    assert code == 0
    assert out == (
        "family,n,k,value\n"
        "pdb,0,0,1\n"
        "pdb,1,0,0\n"
        "pdb,1,1,1\n"
        "pdb,2,0,1\n"
        "pdb,2,1,1\n"
        "pdb,2,2,1\n"
    )


def test_table_json_is_canonical(capsys):
    code, out, _ = run_cli(capsys, "table", "bell", "--max-n", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "config", "results"}
    assert doc["command"] == "table"
    assert "overall" not in doc
    assert [row["value"] for row in doc["results"]] == ["1", "1", "2", "5", "15"]
    assert all("k" not in row for row in doc["results"])
    assert canonical_json(doc) == out  # parse + re-serialize is byte-identical


def test_table_polynomial_rows_use_bar_separator(capsys):
    code, out, _ = run_cli(capsys, "table", "pdb_poly", "--n", "2")
    assert code == 0
    line = out.splitlines()[1]
    assert line.startswith("n=2: ")
    assert line.count(" | ") == 2  # three polynomial cells


def test_table_r_ordered_bell_row_and_sequence(capsys):
    code, out, _ = run_cli(capsys, "table", "r_ordered_bell", "--n", "1", "--max-r", "5")
    assert code == 0
    assert out == "table r_ordered_bell\nn=1: 1 2 3 4 5 6\n"
    code, out, _ = run_cli(capsys, "table", "r_ordered_bell", "--max-n", "3", "--r", "0")
    assert code == 0
    assert out == "table r_ordered_bell\nn=0: 1\nn=1: 1\nn=2: 3\nn=3: 13\n"


def test_table_higher_bernoulli_defaults_to_first_order(capsys):
    code, out, _ = run_cli(capsys, "table", "higher_bernoulli", "--max-n", "3")
    assert code == 0
    values = [line.split(": ")[1] for line in out.splitlines()[1:]]
    assert values == [str(bernoulli(n)) for n in range(4)]


def test_table_resource_cap(capsys):
    code, out, _ = run_cli(capsys, "table", "bell", "--max-n", "1001")
    assert code == 3
    assert "resource cap" in out


def test_table_unknown_family_is_usage_error(capsys):
    code, _, _ = run_cli(capsys, "table", "no_such_family")
    assert code == 2


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


# ----------------------------------------------------------------------
# check


def test_check_all_passes(capsys):
    code, out, _ = run_cli(capsys, "check", "--max-n", "8", "--max-r", "3")
    assert code == 0
    assert "overall: pass" in out
    assert out.count("known-failing-as-printed") >= 4


def test_check_selection_reports_in_registry_order(capsys):
    code, out, _ = run_cli(
        capsys, "check", "wilf_scan", "thm_2_3", "--max-n", "6", "--max-r", "2"
    )
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith("check ")]
    assert lines[0].startswith("check thm_2_3:")
    assert lines[1].startswith("check wilf_scan:")


def test_check_known_failing_only_still_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "check", "eq_14_printed", "--max-n", "5")
    assert code == 0
    assert "witness n=0: lhs=1 rhs=y" in out
    assert "overall: pass" in out


def test_check_unknown_id(capsys):
    code, out, err = run_cli(capsys, "check", "no_such_id")
    assert code == 2
    assert out == ""
    assert "unknown check id" in err


def test_check_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "check", "thm_2_3", "thm_2_9", "--max-n", "6", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "config", "results"}
    assert "overall" not in doc
    assert canonical_json(doc) == out
    assert set(doc["config"]) == {
        "max_n",
        "max_r",
        "max_m",
        "oracle_cap",
        "series_order",
        "tolerance",
        "wilf_bound",
    }
    for result in doc["results"]:
        assert {"id", "status", "bounds", "ms"} <= set(result)


def test_check_csv_header(capsys):
    code, out, _ = run_cli(
        capsys, "check", "thm_2_3", "--max-n", "5", "--format", "csv"
    )
    assert code == 0
    header = out.splitlines()[0]
    assert header == "id,status,bounds,witness_params,lhs,rhs,ms,error"


def test_check_oracle_cap_flag_limit(capsys):
    code, out, _ = run_cli(capsys, "check", "--oracle-cap", "11")
    assert code == 3
    assert "102247563" in out


def test_check_inconclusive_tolerance(capsys):
    code, out, _ = run_cli(
        capsys, "check", "thm_2_10_b", "--tol", "1e-300", "--max-n", "4"
    )
    assert code == 4
    assert "inconclusive" in out


def test_check_bad_tolerances_are_usage_errors(capsys):
    for tol in ("0", "-1e-9", "abc"):
        code, _, _ = run_cli(capsys, "check", "--tol", tol)
        assert code == 2


def test_exit_code_priority():
    cfg = SuiteConfig()

    def report(*statuses_and_errors):
        results = tuple(
            CheckReport(
                check_id=f"c{i}", status=status, bounds={}, ms=0, error=error
            )
            for i, (status, error) in enumerate(statuses_and_errors)
        )
        return SuiteReport(results=results, config=cfg)

    ok = (Status.PASS, None)
    fail = (Status.FAIL, None)
    inconclusive = (Status.INCONCLUSIVE, None)
    cap_err = (Status.ERROR, "resource-cap: too big")
    other_err = (Status.ERROR, "RuntimeError: boom")

    assert _check_exit_code(report(ok, ok)) == 0
    assert _check_exit_code(report(ok, fail, inconclusive)) == 1
    assert _check_exit_code(report(ok, inconclusive, cap_err)) == 4
    assert _check_exit_code(report(ok, cap_err)) == 3
    assert _check_exit_code(report(ok, other_err)) == 1
    assert _check_exit_code(report(cap_err, other_err)) == 3
    assert _check_exit_code(report((Status.KNOWN_FAILING, None),)) == 0


# ----------------------------------------------------------------------
# oracle


def test_oracle_text(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--max-n", "4")
    assert code == 0
    assert out.splitlines()[0] == "oracle comparison up to n=4"
    assert out.splitlines()[-1] == "all cells equal"
    assert "n=3 pdb_row: formula 5 4 3 1 | brute 5 4 3 1 | ok" in out


def test_oracle_resource_cap(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--max-n", "11")
    assert code == 3
    assert "resource cap" in out


def test_oracle_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--max-n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert canonical_json(doc) == out
    assert all(cell["equal"] for cell in doc["results"])
    code, out, _ = run_cli(capsys, "oracle", "--max-n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,kind,index,formula,brute,equal"


# ----------------------------------------------------------------------
# egf


def test_egf_deranged_bell(capsys):
    code, out, _ = run_cli(capsys, "egf", "deranged_bell", "--order", "5")
    assert code == 0
    values = [line.rsplit("=", 1)[1] for line in out.splitlines()[1:]]
    assert values == ["1", "0", "1", "5", "28", "199"]


def test_egf_ordered_bell(capsys):
    code, out, _ = run_cli(capsys, "egf", "ordered_bell", "--order", "3")
    assert code == 0
    values = [line.rsplit("=", 1)[1] for line in out.splitlines()[1:]]
    assert values == ["1", "1", "3", "13"]


def test_egf_pdb_with_parameter(capsys):
    code, out, _ = run_cli(capsys, "egf", "pdb", "--r", "1", "--order", "3")
    assert code == 0
    assert out.splitlines()[-1].endswith("n!*c_n=4")  # pdb_number(3, 1)


def test_egf_higher_bernoulli_defaults_to_first_order(capsys):
    code, out, _ = run_cli(
        capsys, "egf", "higher_bernoulli", "--order", "2", "--format", "csv"
    )
    assert code == 0
    assert out == (
        "n,c_n,n_factorial_c_n\n"
        "0,1,1\n"
        "1,-1/2,-1/2\n"
        "2,1/12,1/6\n"
    )


def test_egf_order_cap(capsys):
    code, out, _ = run_cli(capsys, "egf", "deranged_bell", "--order", "257")
    assert code == 3
    assert "resource cap" in out


def test_egf_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "egf", "stirling_column", "--r", "2", "--order", "6", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert canonical_json(doc) == out
    # n! c_n recovers the k = 2 Stirling column.
    assert [row["n_factorial_c_n"] for row in doc["results"]] == [
        "0", "0", "1", "3", "7", "15", "31",
    ]


# ----------------------------------------------------------------------
# output redirection and process entry


def test_out_flag_writes_file_and_keeps_stdout_quiet(tmp_path, capsys):
    target = tmp_path / "row.csv"
    code, out, _ = run_cli(
        capsys, "table", "pdb", "--max-n", "1", "--format", "csv", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == (
        "family,n,k,value\npdb,0,0,1\npdb,1,0,0\npdb,1,1,1\n"
    )


def test_out_flag_preserves_exit_code(tmp_path, capsys):
    target = tmp_path / "report.txt"
    code, out, _ = run_cli(
        capsys,
        "check", "thm_2_10_b", "--tol", "1e-300", "--max-n", "4", "--out", str(target),
    )
    assert code == 4
    assert out == ""
    assert "inconclusive" in target.read_text(encoding="utf-8")


def test_module_execution_round_trip():
    proc = subprocess.run(
        [sys.executable, "-m", "pdbell", "table", "bell", "--max-n", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "table bell\nn=0: 1\nn=1: 1\nn=2: 2\nn=3: 5\n"


def test_main_returns_int_for_help():
    # argparse exits 0 for --help; main converts that to a return value.
    assert main(["--help"]) == 0
