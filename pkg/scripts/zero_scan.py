#!/usr/bin/env python3
"""Scan the alternating Bell sequence for zeros.

The sequence sum_k (-1)^k S(n,k) is conjectured to vanish only at
n = 2.  This scans a prefix, reports every zero, and prints digit
growth at checkpoints so the scan's progress is visible on long runs.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from pdbell import sequences as seq


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Scan sum_k (-1)^k S(n,k) for zeros up to a bound."
    )
    parser.add_argument(
        "--limit",
        type=int,
        default=1000,
        help="Largest n to scan (default: 1000).",
    )
    parser.add_argument(
        "--stride",
        type=int,
        default=100,
        help="Checkpoint interval for digit-count reporting (default: 100).",
    )
    parser.add_argument(
        "--output",
        help="Write the zero list and checkpoints to a JSON file.",
    )
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    if args.limit < 1 or args.stride < 1:
        print("ERROR: --limit and --stride must be >= 1")
        return 2
    zeros: list[int] = []
    checkpoints: list[dict[str, int]] = []
    for n in range(1, args.limit + 1):
        value = seq.complementary_bell(n)
        if value == 0:
            zeros.append(n)
            print(f"zero at n={n}")
        if n % args.stride == 0 or n == args.limit:
            digits = len(str(abs(value)))
            checkpoints.append({"n": n, "digits": digits})
            print(f"n={n}: {digits} digits, sign {'+' if value > 0 else '-' if value < 0 else '0'}")
    expected = [2] if args.limit >= 2 else []
    verdict = "only the known zero" if zeros == expected else "UNEXPECTED ZERO SET"
    print(f"zeros in 1..{args.limit}: {zeros} ({verdict})")
    if args.output:
        payload = {"limit": args.limit, "zeros": zeros, "checkpoints": checkpoints}
        Path(args.output).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return 0 if zeros == expected else 1


if __name__ == "__main__":
    raise SystemExit(main())
