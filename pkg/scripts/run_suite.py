#!/usr/bin/env python3
"""Run the identity suite over a sweep of grid sizes and report timings.

Each grid runs every registered check.  The per-grid line shows status
counts and wall time, so growth in the exact-arithmetic cost is visible
as the grid widens.  Exit is nonzero if any grid fails overall.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from pdbell import checks
from pdbell.checks import Status, SuiteConfig


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Sweep the identity suite over increasing grid sizes."
    )
    parser.add_argument(
        "--grids",
        default="8,12,16,20",
        help="Comma-separated max_n values to sweep (default: 8,12,16,20).",
    )
    parser.add_argument(
        "--max-r",
        type=int,
        default=8,
        help="Fixed-count bound r for every grid (default: 8).",
    )
    parser.add_argument(
        "--oracle-cap",
        type=int,
        default=8,
        help="Largest n handed to the enumeration oracle (default: 8).",
    )
    parser.add_argument(
        "--verbose",
        action="store_true",
        help="Print one line per check instead of per-grid summaries.",
    )
    return parser.parse_args()


def run_grid(max_n: int, max_r: int, oracle_cap: int, verbose: bool) -> bool:
    cfg = SuiteConfig(
        max_n=max_n,
        max_r=max_r,
        max_m=max_r,
        oracle_cap=min(oracle_cap, max_n),
        tolerance=Fraction(1, 10**9),
    )
    start = time.perf_counter()
    report = checks.run_all(cfg)
    elapsed = time.perf_counter() - start
    counts: dict[str, int] = {}
    for result in report.results:
        counts[result.status.value] = counts.get(result.status.value, 0) + 1
        if verbose:
            mark = "ok" if result.status in (Status.PASS, Status.KNOWN_FAILING) else "!!"
            print(f"  {mark} {result.check_id:<24} {result.status.value:<26} {result.ms}ms")
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"n<={max_n:<3} r<={max_r:<2} {report.overall:<4} ({summary}) in {elapsed:.2f}s")
    return report.overall == "pass"


def main() -> int:
    args = parse_args()
    try:
        grids = [int(piece) for piece in args.grids.split(",") if piece.strip()]
    except ValueError:
        print("ERROR: --grids must be comma-separated integers")
        return 2
    if not grids or any(g < 1 for g in grids):
        print("ERROR: --grids needs at least one positive size")
        return 2
    all_pass = True
    for max_n in grids:
        all_pass &= run_grid(max_n, args.max_r, args.oracle_cap, args.verbose)
    return 0 if all_pass else 1


if __name__ == "__main__":
    raise SystemExit(main())
