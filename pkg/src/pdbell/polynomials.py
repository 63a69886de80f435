"""Dense integer polynomials in one variable plus the partition polynomial
families built on the sequence kernels.

``IntPolynomial`` is immutable and always canonical: trailing zero
coefficients are stripped, so equality is plain coefficient equality.  The
zero polynomial has an empty coefficient tuple and degree -1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from . import sequences as seq

__all__ = [
    "IntPolynomial",
    "exponential_poly",
    "r_exponential_poly",
    "geometric_poly",
    "pdb_poly",
]

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Polynomial with integer coefficients, stored lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = list(coefficients)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> int:
        """Coefficient of y**k (0 beyond the degree)."""
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        return self._coeffs[k] if k < len(self._coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(other * c for c in self._coeffs)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __rmul__(self, other: int) -> "IntPolynomial":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def evaluate(self, x: Scalar) -> Scalar:
        """Value at x by Horner's rule; exact for int or Fraction input."""
        acc: Scalar = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def reflected(self) -> "IntPolynomial":
        """The polynomial p(-y): odd coefficients change sign."""
        return IntPolynomial(
            -c if k % 2 else c for k, c in enumerate(self._coeffs)
        )

    def scale_variable(self, c: int) -> "IntPolynomial":
        """The polynomial p(c*y): coefficient k is multiplied by c**k."""
        return IntPolynomial(a * c**k for k, a in enumerate(self._coeffs))

    def times_y_power(self, r: int) -> "IntPolynomial":
        """Multiply by y**r."""
        if r < 0:
            raise ValueError(f"r must be nonnegative, got {r}")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * r + self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "y" if k == 1 else f"y^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# Constructors are cached: IntPolynomial is immutable, so instances can be
# shared freely, and the identity suite requests the same rows repeatedly.


@lru_cache(maxsize=4096)
def exponential_poly(n: int) -> IntPolynomial:
    """Partition polynomial: coefficient of y**k is stirling2(n, k)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return IntPolynomial(seq.stirling2(n, k) for k in range(n + 1))


@lru_cache(maxsize=4096)
def r_exponential_poly(n: int, r: int) -> IntPolynomial:
    """Restricted partition polynomial.

    Coefficient of y**k is ``r_stirling2(n + r, k + r, r)``, so the constant
    term counts partitions where the r seed elements absorb everything.
    """
    if n < 0 or r < 0:
        raise ValueError(f"n and r must be nonnegative, got n={n}, r={r}")
    return IntPolynomial(seq.r_stirling2(n + r, k + r, r) for k in range(n + 1))


@lru_cache(maxsize=4096)
def geometric_poly(n: int) -> IntPolynomial:
    """Ordered partition polynomial: coefficient of y**k is stirling2(n, k)*k!."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return IntPolynomial(
        seq.stirling2(n, k) * math.factorial(k) for k in range(n + 1)
    )


@lru_cache(maxsize=4096)
def pdb_poly(n: int, r: int) -> IntPolynomial:
    """Deranged-block polynomial.

    Coefficient of y**k is ``stirling2(n, k) * partial_derangement(k, r)``;
    evaluating at y = 1 gives ``pdb_number(n, r)`` and summing over r gives
    ``geometric_poly(n)``.
    """
    if n < 0 or r < 0:
        raise ValueError(f"n and r must be nonnegative, got n={n}, r={r}")
    return IntPolynomial(
        seq.stirling2(n, k) * seq.partial_derangement(k, r)
        for k in range(n + 1)
    )
