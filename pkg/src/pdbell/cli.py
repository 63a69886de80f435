"""Command-line front end.

Four subcommands: ``table`` prints sequence and polynomial families,
``check`` runs the identity suite, ``oracle`` compares the sequence kernels
against literal enumeration cell by cell, and ``egf`` lists generating
series coefficients.  Output formats are text, canonical JSON (sorted keys,
two-space indent, rationals as strings, so parse + re-serialize is
byte-identical), and CSV with a mandatory header row.

Exit codes: 0 pass, 1 identity failure or unexpected error, 2 usage error,
3 resource cap, 4 inconclusive series tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Callable, Sequence

# The package re-exports the bernoulli function at top level, which shadows
# the submodule attribute, so pull the callables in directly.
from .bernoulli import bernoulli as bernoulli_number
from .bernoulli import higher_bernoulli
from . import checks
from . import oracle
from . import polynomials as poly
from . import sequences as seq
from . import series as ser

__all__ = ["RunConfig", "canonical_json", "main"]

# Soft resource limits for the table and egf commands; the enumeration
# oracle has its own hard cap.
MAX_TABLE_N = 1000
MAX_ORDER = 256

_EXIT_PASS = 0
_EXIT_FAIL = 1
_EXIT_USAGE = 2
_EXIT_RESOURCE = 3
_EXIT_INCONCLUSIVE = 4


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: one command plus the flags it honors."""

    command: str
    max_n: int = 10
    max_r: int = 8
    n: int | None = None
    r: int | None = None
    order: int = 24
    tolerance: Fraction = Fraction(1, 10**9)
    fmt: str = "text"
    out: str | None = None
    oracle_cap: int = 8
    family: str | None = None
    ids: tuple[str, ...] = ()


def canonical_json(payload: object) -> str:
    """Stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _parse_tol(text: str) -> Fraction:
    try:
        value = Fraction(Decimal(text))
    except (InvalidOperation, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {value}")
    return value


# ----------------------------------------------------------------------
# table families

_SEQ_FAMILIES: dict[str, Callable[[int], object]] = {
    "derangement": seq.derangement,
    "bell": seq.bell,
    "complementary_bell": seq.complementary_bell,
    "ordered_bell": seq.ordered_bell,
    "deranged_bell": seq.deranged_bell,
    "bernoulli": bernoulli_number,
}

_ROW_FAMILIES: dict[str, Callable[[int], list[object]]] = {
    "stirling2": lambda n: [seq.stirling2(n, k) for k in range(n + 1)],
    "partial_derangement": lambda n: [
        seq.partial_derangement(n, r) for r in range(n + 1)
    ],
    "truncated_ordered_bell": lambda n: [
        seq.truncated_ordered_bell(n, r) for r in range(n + 1)
    ],
    "pdb": lambda n: list(seq.pdb_row(n)),
    "pdb_poly": lambda n: [str(poly.pdb_poly(n, r)) for r in range(n + 1)],
}

TABLE_FAMILIES = (
    "stirling2",
    "r_stirling2",
    "derangement",
    "partial_derangement",
    "bell",
    "complementary_bell",
    "ordered_bell",
    "r_ordered_bell",
    "truncated_ordered_bell",
    "deranged_bell",
    "pdb",
    "pdb_poly",
    "bernoulli",
    "higher_bernoulli",
)

EGF_FAMILY_CHOICES = (
    "partial_derangement",
    "ordered_bell",
    "deranged_bell",
    "stirling_column",
    "higher_bernoulli",
    "pdb",
)


def _table_rows(cfg: RunConfig) -> list[dict[str, object]]:
    """Rows of {family, n, k?, value} covering the requested bounds."""
    family = cfg.family or ""
    r = cfg.r if cfg.r is not None else 0
    rows: list[dict[str, object]] = []

    def add(n: int, k: int | None, value: object) -> None:
        rows.append({"family": family, "n": n, "k": k, "value": str(value)})

    if family in _SEQ_FAMILIES:
        fn = _SEQ_FAMILIES[family]
        for n in range(cfg.max_n + 1):
            add(n, None, fn(n))
    elif family in _ROW_FAMILIES:
        fn_row = _ROW_FAMILIES[family]
        ns = [cfg.n] if cfg.n is not None else list(range(cfg.max_n + 1))
        for n in ns:
            for k, value in enumerate(fn_row(n)):
                add(n, k, value)
    elif family == "r_stirling2":
        for n in range(cfg.max_n + 1):
            for k in range(n + 1):
                add(n, k, seq.r_stirling2(n, k, r))
    elif family == "r_ordered_bell":
        if cfg.n is not None:
            for k in range(cfg.max_r + 1):
                add(cfg.n, k, seq.r_ordered_bell(cfg.n, k))
        else:
            for n in range(cfg.max_n + 1):
                add(n, None, seq.r_ordered_bell(n, r))
    elif family == "higher_bernoulli":
        shift = cfg.r if cfg.r is not None else 1
        for n in range(cfg.max_n + 1):
            add(n, None, higher_bernoulli(n, shift))
    else:
        raise ValueError(f"unknown table family {family!r}")
    return rows


def _render_table(cfg: RunConfig, rows: list[dict[str, object]]) -> str:
    if cfg.fmt == "json":
        results = [
            {k: v for k, v in row.items() if not (k == "k" and v is None)}
            for row in rows
        ]
        return canonical_json(
            {"command": "table", "config": _config_echo(cfg), "results": results}
        )
    if cfg.fmt == "csv":
        data = [
            [row["family"], row["n"], "" if row["k"] is None else row["k"], row["value"]]
            for row in rows
        ]
        return _csv_text(["family", "n", "k", "value"], data)
    lines = [f"table {cfg.family}"]
    by_n: dict[int, list[dict[str, object]]] = {}
    for row in rows:
        by_n.setdefault(int(row["n"]), []).append(row)
    for n in sorted(by_n):
        group = by_n[n]
        if len(group) == 1 and group[0]["k"] is None:
            lines.append(f"n={n}: {group[0]['value']}")
        else:
            joined = " | ".join(str(g["value"]) for g in group)
            if all("y" not in str(g["value"]) for g in group):
                joined = " ".join(str(g["value"]) for g in group)
            lines.append(f"n={n}: {joined}")
    return "\n".join(lines) + "\n"


def _cmd_table(cfg: RunConfig) -> tuple[int, str]:
    if cfg.max_n > MAX_TABLE_N or (cfg.n is not None and cfg.n > MAX_TABLE_N):
        return (
            _EXIT_RESOURCE,
            f"resource cap: table rows are limited to n <= {MAX_TABLE_N}\n",
        )
    rows = _table_rows(cfg)
    return _EXIT_PASS, _render_table(cfg, rows)


# ----------------------------------------------------------------------
# check


def _config_echo(cfg: RunConfig) -> dict[str, object]:
    return {
        "max_n": cfg.max_n,
        "max_r": cfg.max_r,
        "n": cfg.n,
        "r": cfg.r,
        "order": cfg.order,
        "format": cfg.fmt,
        "oracle_cap": cfg.oracle_cap,
    }


def _suite_config(cfg: RunConfig) -> checks.SuiteConfig:
    return checks.SuiteConfig(
        max_n=cfg.max_n,
        max_r=cfg.max_r,
        max_m=cfg.max_r,
        oracle_cap=cfg.oracle_cap,
        series_order=cfg.order,
        tolerance=cfg.tolerance,
    )


def _check_exit_code(report: checks.SuiteReport) -> int:
    statuses = [r.status for r in report.results]
    if any(s is checks.Status.FAIL for s in statuses):
        return _EXIT_FAIL
    if any(s is checks.Status.INCONCLUSIVE for s in statuses):
        return _EXIT_INCONCLUSIVE
    errored = [r for r in report.results if r.status is checks.Status.ERROR]
    if errored:
        if any(r.error and r.error.startswith("resource-cap:") for r in errored):
            return _EXIT_RESOURCE
        return _EXIT_FAIL
    return _EXIT_PASS


def _render_check_text(report: checks.SuiteReport) -> str:
    lines = []
    for r in report.results:
        bounds = ", ".join(f"{k}={v}" for k, v in sorted(r.bounds.items()))
        suffix = f" ({bounds})" if bounds else ""
        lines.append(f"check {r.check_id}: {r.status.value}{suffix} [{r.ms} ms]")
        if r.witness is not None:
            params = " ".join(f"{k}={v}" for k, v in r.witness.params.items())
            lines.append(f"  witness {params}: lhs={r.witness.lhs} rhs={r.witness.rhs}")
        if r.error is not None:
            lines.append(f"  error: {r.error}")
    counts: dict[str, int] = {}
    for r in report.results:
        counts[r.status.value] = counts.get(r.status.value, 0) + 1
    tally = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    lines.append(f"overall: {report.overall} ({len(report.results)} checks: {tally})")
    return "\n".join(lines) + "\n"


def _render_check(report: checks.SuiteReport, cfg: RunConfig) -> str:
    if cfg.fmt == "json":
        return canonical_json(
            {
                "command": "check",
                "config": report.config.to_dict(),
                "results": [r.to_dict() for r in report.results],
            }
        )
    if cfg.fmt == "csv":
        rows = []
        for r in report.results:
            bounds = ";".join(f"{k}={v}" for k, v in sorted(r.bounds.items()))
            if r.witness is not None:
                params = ";".join(f"{k}={v}" for k, v in r.witness.params.items())
                lhs, rhs = r.witness.lhs, r.witness.rhs
            else:
                params = lhs = rhs = ""
            rows.append(
                [r.check_id, r.status.value, bounds, params, lhs, rhs, r.ms, r.error or ""]
            )
        return _csv_text(
            ["id", "status", "bounds", "witness_params", "lhs", "rhs", "ms", "error"],
            rows,
        )
    return _render_check_text(report)


def _cmd_check(cfg: RunConfig) -> tuple[int, str]:
    if cfg.oracle_cap > oracle.DEFAULT_CAP:
        return (
            _EXIT_RESOURCE,
            f"resource cap: --oracle-cap is limited to {oracle.DEFAULT_CAP}; "
            "the enumeration visits every block permutation of every partition "
            "(545835 at n = 8, 7087261 at n = 9, 102247563 at n = 10)\n",
        )
    ids = None if not cfg.ids or "all" in cfg.ids else list(cfg.ids)
    report = checks.run_all(_suite_config(cfg), ids)
    return _check_exit_code(report), _render_check(report, cfg)


# ----------------------------------------------------------------------
# oracle


def _oracle_cells(cap: int) -> list[dict[str, object]]:
    cells: list[dict[str, object]] = []
    perm_cap = min(cap, oracle.PERMUTATION_CAP)

    def add(n: int, kind: str, formula: list[object], brute: list[object]) -> None:
        cells.append(
            {
                "n": n,
                "kind": kind,
                "formula": [str(v) for v in formula],
                "brute": [str(v) for v in brute],
                "equal": [str(v) for v in formula] == [str(v) for v in brute],
            }
        )

    for n in range(cap + 1):
        add(n, "pdb_row", list(seq.pdb_row(n)), list(oracle.brute_pdb_row(n, cap)))
        add(
            n,
            "stirling2",
            [seq.stirling2(n, k) for k in range(n + 1)],
            [oracle.brute_stirling2(n, k, cap) for k in range(n + 1)],
        )
        add(n, "bell", [seq.bell(n)], [oracle.brute_bell(n, cap)])
        add(
            n,
            "complementary_bell",
            [seq.complementary_bell(n)],
            [oracle.brute_complementary_bell(n, cap)],
        )
        add(n, "ordered_bell", [seq.ordered_bell(n)], [oracle.brute_ordered_bell(n, cap)])
        if n <= perm_cap:
            add(
                n,
                "partial_derangement",
                [seq.partial_derangement(n, r) for r in range(n + 1)],
                [oracle.brute_partial_derangement(n, r, perm_cap) for r in range(n + 1)],
            )
    return cells


def _cmd_oracle(cfg: RunConfig) -> tuple[int, str]:
    cap = cfg.max_n
    if cap > oracle.DEFAULT_CAP:
        return (
            _EXIT_RESOURCE,
            f"resource cap: oracle enumeration is limited to n <= {oracle.DEFAULT_CAP}; "
            "the enumeration visits every block permutation of every partition "
            "(545835 at n = 8, 7087261 at n = 9, 102247563 at n = 10)\n",
        )
    cells = _oracle_cells(cap)
    all_equal = all(c["equal"] for c in cells)
    code = _EXIT_PASS if all_equal else _EXIT_FAIL
    if cfg.fmt == "json":
        return code, canonical_json(
            {"command": "oracle", "config": _config_echo(cfg), "results": cells}
        )
    if cfg.fmt == "csv":
        rows = []
        for c in cells:
            for idx, (f_val, b_val) in enumerate(zip(c["formula"], c["brute"])):
                rows.append(
                    [c["n"], c["kind"], idx, f_val, b_val, str(f_val == b_val).lower()]
                )
        return code, _csv_text(["n", "kind", "index", "formula", "brute", "equal"], rows)
    lines = [f"oracle comparison up to n={cap}"]
    for c in cells:
        mark = "ok" if c["equal"] else "MISMATCH"
        lines.append(
            f"n={c['n']} {c['kind']}: formula {' '.join(c['formula'])} | "
            f"brute {' '.join(c['brute'])} | {mark}"
        )
    lines.append("all cells equal" if all_equal else "MISMATCH FOUND")
    return code, "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# egf


def _cmd_egf(cfg: RunConfig) -> tuple[int, str]:
    family = cfg.family or ""
    order = cfg.order
    if order > MAX_ORDER:
        return (
            _EXIT_RESOURCE,
            f"resource cap: series order is limited to {MAX_ORDER}\n",
        )
    if family == "pdb":
        r = cfg.r if cfg.r is not None else 0
        series = ser.egf_pdb(r, Fraction(1), order)
    elif family in ("partial_derangement", "stirling_column", "higher_bernoulli"):
        param = cfg.r if cfg.r is not None else (1 if family == "higher_bernoulli" else 0)
        series = ser.egf_family(family, order, param)
    elif family in ("ordered_bell", "deranged_bell"):
        series = ser.egf_family(family, order)
    else:
        raise ValueError(f"unknown egf family {family!r}")
    rows = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        c = series.coeff(n)
        rows.append({"n": n, "c_n": str(c), "n_factorial_c_n": str(fact * c)})
    if cfg.fmt == "json":
        return _EXIT_PASS, canonical_json(
            {"command": "egf", "config": _config_echo(cfg), "results": rows}
        )
    if cfg.fmt == "csv":
        return _EXIT_PASS, _csv_text(
            ["n", "c_n", "n_factorial_c_n"],
            [[r["n"], r["c_n"], r["n_factorial_c_n"]] for r in rows],
        )
    lines = [f"egf {family} order {order}"]
    for r_ in rows:
        lines.append(f"n={r_['n']}: c_n={r_['c_n']} n!*c_n={r_['n_factorial_c_n']}")
    return _EXIT_PASS, "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdbell",
        description=(
            "Exact tables, identity checks, enumeration cross-checks, and "
            "generating-series listings for ordered set partitions with "
            "deranged blocks."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, default_max_n: int) -> None:
        p.add_argument("--max-n", type=_nonneg, default=default_max_n)
        p.add_argument("--max-r", type=_nonneg, default=8)
        p.add_argument("--n", type=_nonneg, default=None)
        p.add_argument("--r", type=_nonneg, default=None)
        p.add_argument("--order", type=_nonneg, default=24)
        p.add_argument("--tol", type=_parse_tol, default=Fraction(1, 10**9))
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--oracle-cap", type=_nonneg, default=8)

    p_table = sub.add_parser("table", help="print a sequence or polynomial family")
    p_table.add_argument("family", choices=TABLE_FAMILIES)
    common(p_table, default_max_n=10)

    p_check = sub.add_parser("check", help="run identity checks")
    p_check.add_argument("ids", nargs="*", default=["all"])
    common(p_check, default_max_n=20)

    p_oracle = sub.add_parser("oracle", help="compare kernels against enumeration")
    common(p_oracle, default_max_n=6)

    p_egf = sub.add_parser("egf", help="list generating series coefficients")
    p_egf.add_argument("family", choices=EGF_FAMILY_CHOICES)
    common(p_egf, default_max_n=10)
    return parser


def _run(cfg: RunConfig) -> tuple[int, str]:
    if cfg.command == "table":
        return _cmd_table(cfg)
    if cfg.command == "check":
        return _cmd_check(cfg)
    if cfg.command == "oracle":
        return _cmd_oracle(cfg)
    if cfg.command == "egf":
        return _cmd_egf(cfg)
    raise ValueError(f"unknown command {cfg.command!r}")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the exit code instead of raising SystemExit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else _EXIT_USAGE
        return code
    cfg = RunConfig(
        command=args.command,
        max_n=args.max_n,
        max_r=args.max_r,
        n=args.n,
        r=args.r,
        order=args.order,
        tolerance=args.tol,
        fmt=args.format,
        out=args.out,
        oracle_cap=args.oracle_cap,
        family=getattr(args, "family", None),
        ids=tuple(getattr(args, "ids", ()) or ()),
    )
    try:
        code, text = _run(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except oracle.CapExceededError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
