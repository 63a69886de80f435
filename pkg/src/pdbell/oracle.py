"""Brute-force enumeration oracle.

Set partitions are enumerated as restricted growth strings (RGS): a sequence
a_1..a_n with a_1 = 0 and a_{i+1} <= 1 + max(a_1..a_i).  Element i belongs to
block a_i; numbering blocks by first appearance lists them in increasing
order of their minima, which is the canonical block order everywhere in this
package.  Orderings of a partition are permutations of that canonical block
list, visited in lexicographic order.

Everything here counts literally, one partition or permutation at a time,
with no formulas, so these functions are an independent ground truth for the
sequence kernels.  Costs explode quickly: there are 545835 block
permutations across all partitions of 8 items and about 10**8 at n = 10,
hence the hard cap.  Enumeration streams are single-consumer generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "DEFAULT_CAP",
    "PERMUTATION_CAP",
    "CapExceededError",
    "PartitionRGS",
    "is_valid_rgs",
    "enumerate_partitions",
    "brute_pdb_row",
    "brute_pdb",
    "brute_partial_derangement",
    "brute_stirling2",
    "brute_bell",
    "brute_complementary_bell",
    "brute_ordered_bell",
]

DEFAULT_CAP = 10
PERMUTATION_CAP = 9

_COST_HINT = (
    "the enumeration visits every block permutation of every partition "
    "(545835 at n = 8, 7087261 at n = 9, 102247563 at n = 10)"
)


class CapExceededError(RuntimeError):
    """Requested enumeration is larger than the configured cap allows."""


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if cap > DEFAULT_CAP:
        raise CapExceededError(
            f"cap {cap} exceeds the hard limit {DEFAULT_CAP}; {_COST_HINT}"
        )
    if n > cap:
        raise CapExceededError(f"{what}: n = {n} exceeds cap {cap}; {_COST_HINT}")


def is_valid_rgs(values: tuple[int, ...]) -> bool:
    """True when the tuple is a restricted growth string."""
    top = -1
    for i, a in enumerate(values):
        if a < 0 or a > top + 1:
            return False
        if i == 0 and a != 0:
            return False
        top = max(top, a)
    return True


@dataclass(frozen=True)
class PartitionRGS:
    """A set partition in restricted growth string form."""

    rgs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_valid_rgs(self.rgs):
            raise ValueError(f"not a restricted growth string: {self.rgs!r}")

    @property
    def size(self) -> int:
        return len(self.rgs)

    @property
    def block_count(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as 1-based element tuples, in increasing order of minima."""
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for i, a in enumerate(self.rgs, start=1):
            out[a].append(i)
        return tuple(tuple(b) for b in out)


def enumerate_partitions(n: int, cap: int = DEFAULT_CAP) -> Iterator[PartitionRGS]:
    """Yield all partitions of an n-set in lexicographic RGS order."""
    _check_cap(n, cap, "enumerate_partitions")
    if n == 0:
        yield PartitionRGS(())
        return
    a = [0] * n
    mx = [0] * n  # mx[i] = max(a[0..i])
    while True:
        yield PartitionRGS(tuple(a))
        i = n - 1
        while i > 0 and a[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            mx[j] = mx[i]


@lru_cache(maxsize=64)
def _pdb_row(n: int) -> tuple[int, ...]:
    tally = [0] * (n + 1)
    for part in enumerate_partitions(n, DEFAULT_CAP):
        k = part.block_count
        indices = range(k)
        for perm in itertools.permutations(indices):
            fixed = 0
            for i in indices:
                if perm[i] == i:
                    fixed += 1
            tally[fixed] += 1
    return tuple(tally)


def brute_pdb_row(n: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Tally every (partition, block permutation) pair of [n] by fixed blocks.

    Entry r counts the pairs in which the permutation keeps exactly r blocks
    of the canonical min-ordered block list in place.
    """
    _check_cap(n, cap, "brute_pdb_row")
    return list(_pdb_row(n))


def brute_pdb(n: int, r: int, cap: int = DEFAULT_CAP) -> int:
    """Count ordered partitions of [n] with exactly r blocks left in place."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    _check_cap(n, cap, "brute_pdb")
    if r > n:
        return 0
    return _pdb_row(n)[r]


@lru_cache(maxsize=32)
def _fixed_point_tally(n: int) -> tuple[int, ...]:
    tally = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        tally[sum(1 for i in range(n) if perm[i] == i)] += 1
    return tuple(tally)


def brute_partial_derangement(n: int, r: int, cap: int = PERMUTATION_CAP) -> int:
    """Count permutations of [n] with exactly r fixed points, one by one."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if cap > PERMUTATION_CAP:
        raise CapExceededError(
            f"cap {cap} exceeds the permutation limit {PERMUTATION_CAP}"
        )
    if n > cap:
        raise CapExceededError(
            f"brute_partial_derangement: n = {n} exceeds cap {cap} "
            f"({math.factorial(n)} permutations)"
        )
    if r > n:
        return 0
    return _fixed_point_tally(n)[r]


@lru_cache(maxsize=64)
def _block_count_tally(n: int) -> tuple[int, ...]:
    tally = [0] * (n + 1)
    for p in enumerate_partitions(n, DEFAULT_CAP):
        tally[p.block_count] += 1
    return tuple(tally)


def brute_stirling2(n: int, k: int, cap: int = DEFAULT_CAP) -> int:
    """Count partitions of [n] with exactly k blocks by enumeration."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    _check_cap(n, cap, "brute_stirling2")
    return _block_count_tally(n)[k] if k <= n else 0


def brute_bell(n: int, cap: int = DEFAULT_CAP) -> int:
    """Count all partitions of [n] by enumeration."""
    _check_cap(n, cap, "brute_bell")
    return sum(_block_count_tally(n))


def brute_complementary_bell(n: int, cap: int = DEFAULT_CAP) -> int:
    """Sum (-1)**block_count over all partitions of [n]."""
    _check_cap(n, cap, "brute_complementary_bell")
    return sum((-1) ** k * c for k, c in enumerate(_block_count_tally(n)))


def brute_ordered_bell(n: int, cap: int = DEFAULT_CAP) -> int:
    """Count (partition, block permutation) pairs of [n].

    Uses the exhaustive tally of :func:`brute_pdb_row`, which visits each
    pair exactly once.
    """
    _check_cap(n, cap, "brute_ordered_bell")
    return sum(_pdb_row(n))
