"""Exact integer kernels for the sequence families around partitions with
deranged blocks.

Everything is computed with Python's arbitrary precision integers; there is
no floating point anywhere in this module.  Triangles are memoized row at a
time and may be read from several threads at once: a cell, once written,
never changes, so concurrent callers always see the single-threaded values.

Conventions:

* ``stirling2(n, k)`` counts partitions of an n-set into k nonempty blocks.
  Queries with ``k > n`` return 0 without growing any table.
* ``r_stirling2(m, j, r)`` takes display indices directly: it counts
  partitions of an m-set into j blocks in which the elements 1..r occupy
  pairwise distinct blocks.  It is 0 when ``j < r``, ``j > m``, or ``m < r``.
* ``partial_derangement(n, r)`` counts permutations of n items with exactly
  r fixed points; it is 0 for ``r > n``.
* Negative indices are domain errors, never zeros.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "stirling2",
    "stirling2_explicit",
    "r_stirling2",
    "derangement",
    "partial_derangement",
    "bell",
    "complementary_bell",
    "complementary_r_bell",
    "ordered_bell",
    "r_ordered_bell",
    "truncated_ordered_bell",
    "deranged_bell",
    "pdb_number",
    "pdb_row",
]


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


class _MemoTriangle:
    """Append-only triangle for T(m, j) = T(m-1, j-1) + j*T(m-1, j).

    Seeded with T(r, r) = 1; row m (m >= r) stores entries j = r..m.  The
    ordinary Stirling triangle is the r = 0 instance.  Rows grow on demand
    under a lock and existing cells are never rewritten.
    """

    def __init__(self, r: int = 0) -> None:
        self.r = r
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    def value(self, m: int, j: int) -> int:
        r = self.r
        if m < r or j < r or j > m:
            return 0
        if m - r >= len(self._rows):
            self._grow(m)
        return self._rows[m - r][j - r]

    def _grow(self, m: int) -> None:
        with self._lock:
            while len(self._rows) <= m - self.r:
                prev = self._rows[-1]
                row_m = self.r + len(self._rows)
                row = []
                for j in range(self.r, row_m + 1):
                    idx = j - self.r
                    v = prev[idx - 1] if 0 <= idx - 1 < len(prev) else 0
                    if idx < len(prev):
                        v += j * prev[idx]
                    row.append(v)
                self._rows.append(row)


_triangles: dict[int, _MemoTriangle] = {}
_triangles_lock = threading.Lock()


def _triangle(r: int) -> _MemoTriangle:
    tri = _triangles.get(r)
    if tri is None:
        with _triangles_lock:
            tri = _triangles.setdefault(r, _MemoTriangle(r))
    return tri


def stirling2(n: int, k: int) -> int:
    """Stirling partition number: partitions of an n-set into k blocks."""
    _require_nonnegative(n=n, k=k)
    return _triangle(0).value(n, k)


def stirling2_explicit(n: int, k: int) -> int:
    """Alternating binomial sum for the Stirling partition number.

    Evaluated in exact rationals and normalized to an integer.  Kept as an
    independent cross-check of the recurrence-based triangle.
    """
    _require_nonnegative(n=n, k=k)
    total = sum((-1) ** (k - i) * math.comb(k, i) * i**n for i in range(k + 1))
    value = Fraction(total, math.factorial(k))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integer Stirling value for n={n}, k={k}")
    return value.numerator


def r_stirling2(m: int, j: int, r: int) -> int:
    """Restricted Stirling number with display indices.

    Counts partitions of an m-set into j blocks where elements 1..r lie in
    pairwise distinct blocks.  ``r_stirling2(m, j, 0)`` equals
    ``stirling2(m, j)``.
    """
    _require_nonnegative(m=m, j=j, r=r)
    return _triangle(r).value(m, j)


_derangements: list[int] = [1]
_derangements_lock = threading.Lock()


def derangement(n: int) -> int:
    """Permutations of n items with no fixed point (1 for n = 0)."""
    _require_nonnegative(n=n)
    if n >= len(_derangements):
        with _derangements_lock:
            while len(_derangements) <= n:
                m = len(_derangements)
                _derangements.append(m * _derangements[m - 1] + (-1) ** m)
    return _derangements[n]


def partial_derangement(n: int, r: int) -> int:
    """Permutations of n items with exactly r fixed points."""
    _require_nonnegative(n=n, r=r)
    if r > n:
        return 0
    return math.comb(n, r) * derangement(n - r)


def bell(n: int) -> int:
    """Number of partitions of an n-set."""
    _require_nonnegative(n=n)
    return sum(stirling2(n, k) for k in range(n + 1))


_comp_bell: list[int] = [1]
_comp_bell_lock = threading.Lock()


def complementary_bell(n: int) -> int:
    """Alternating Bell number: sum of (-1)^k * stirling2(n, k) over k."""
    _require_nonnegative(n=n)
    if n >= len(_comp_bell):
        with _comp_bell_lock:
            while len(_comp_bell) <= n:
                m = len(_comp_bell)
                _comp_bell.append(
                    sum((-1) ** k * stirling2(m, k) for k in range(m + 1))
                )
    return _comp_bell[n]


def complementary_r_bell(n: int, r: int) -> int:
    """Restricted variant of the alternating Bell number.

    Computed from the binomial expansion over cached alternating Bell values,
    so each query is O(n) once the base sequence exists.
    """
    _require_nonnegative(n=n, r=r)
    return sum(
        math.comb(n, k) * r**k * complementary_bell(n - k) for k in range(n + 1)
    )


def ordered_bell(n: int) -> int:
    """Number of ordered partitions (partitions with ordered blocks)."""
    _require_nonnegative(n=n)
    return sum(stirling2(n, k) * math.factorial(k) for k in range(n + 1))


def r_ordered_bell(n: int, r: int) -> int:
    """Ordered partitions counted with r distinguished seed elements.

    Defined as the sum over k of ``r_stirling2(n + r, k + r, r) * k!``.
    """
    _require_nonnegative(n=n, r=r)
    return sum(
        r_stirling2(n + r, k + r, r) * math.factorial(k) for k in range(n + 1)
    )


def truncated_ordered_bell(n: int, r: int) -> int:
    """Ordered partitions of an n-set using at least r blocks."""
    _require_nonnegative(n=n, r=r)
    if r > n:
        return 0
    return sum(stirling2(n, k) * math.factorial(k) for k in range(r, n + 1))


def deranged_bell(n: int) -> int:
    """Ordered partitions of an n-set in which no block keeps its position.

    Blocks are written in increasing order of their minima; the count weights
    each k-block partition by the derangement number of k.
    """
    _require_nonnegative(n=n)
    return sum(stirling2(n, k) * derangement(k) for k in range(n + 1))


def pdb_number(n: int, r: int) -> int:
    """Ordered partitions of an n-set with exactly r blocks left in place.

    Blocks are ordered by increasing minima; the count weights each k-block
    partition by the number of permutations of k blocks with exactly r fixed
    positions.  ``pdb_number(n, 0)`` equals ``deranged_bell(n)``.
    """
    _require_nonnegative(n=n, r=r)
    return sum(
        stirling2(n, k) * partial_derangement(k, r) for k in range(r, n + 1)
    )


def pdb_row(n: int) -> list[int]:
    """Row [pdb_number(n, 0), ..., pdb_number(n, n)]; sums to ordered_bell(n)."""
    _require_nonnegative(n=n)
    return [pdb_number(n, r) for r in range(n + 1)]
