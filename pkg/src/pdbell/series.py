"""Truncated formal power series with exact rational coefficients.

A ``TruncatedSeries`` of order N stores the raw coefficients c_0..c_N of
sum c_n t^n.  For the exponential-style generating functions built here the
boundary convention is that callers multiply ``coeff(n)`` by n! to recover
integer sequence values; the series itself never stores that factor.

Binary operations truncate to the smaller order of the two operands and
never read coefficients beyond it.  Asking for a coefficient beyond the
truncation order is an error, not a zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import sequences as seq

__all__ = [
    "TruncatedSeries",
    "SeriesDivisionError",
    "SeriesExpError",
    "expm1",
    "compose_expm1",
    "compose_expm1_stirling",
    "egf_pdb",
    "egf_family",
    "EGF_FAMILIES",
]

Rational = Union[int, Fraction]


class SeriesDivisionError(ArithmeticError):
    """Division by a series whose constant term is zero."""


class SeriesExpError(ArithmeticError):
    """exp() applied to a series whose constant term is nonzero."""


class TruncatedSeries:
    """Immutable truncated power series over exact rationals."""

    __slots__ = ("_coeffs", "_order")

    def __init__(self, coefficients: Iterable[Rational], order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            if not coeffs:
                raise ValueError("order is required for an empty coefficient list")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        else:
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)
        self._order = order

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        """The monomial t."""
        return cls([0, 1], order)

    @classmethod
    def from_constant(cls, c: Rational, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of t**n; n beyond the truncation order is an error."""
        if n < 0 or n > self._order:
            raise ValueError(
                f"coefficient index {n} outside truncation order {self._order}"
            )
        return self._coeffs[n]

    def _common_order(self, other: "TruncatedSeries") -> int:
        return min(self._order, other._order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        return TruncatedSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(n + 1)], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        return TruncatedSeries(
            [self._coeffs[k] - other._coeffs[k] for k in range(n + 1)], n
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self._order)

    def scale(self, c: Rational) -> "TruncatedSeries":
        c = Fraction(c)
        return TruncatedSeries([c * a for a in self._coeffs], self._order)

    def shift(self, r: int) -> "TruncatedSeries":
        """Multiply by t**r, truncating at the same order."""
        if r < 0:
            raise ValueError(f"r must be nonnegative, got {r}")
        coeffs = [Fraction(0)] * r + list(self._coeffs)
        return TruncatedSeries(coeffs[: self._order + 1], self._order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self._coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common_order(other)
        b0 = other._coeffs[0]
        if b0 == 0:
            raise SeriesDivisionError(
                "cannot divide by a series with zero constant term"
            )
        out: list[Fraction] = []
        for k in range(n + 1):
            acc = self._coeffs[k]
            for i in range(1, k + 1):
                acc -= other._coeffs[i] * out[k - i]
            out.append(acc / b0)
        return TruncatedSeries(out, n)

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term, by the derivative recurrence."""
        if self._coeffs[0] != 0:
            raise SeriesExpError(
                "exp requires a zero constant term, got "
                f"{self._coeffs[0]}"
            )
        n = self._order
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if self._coeffs[k]:
                    acc += k * self._coeffs[k] * out[m - k]
            out[m] = acc / m
        return TruncatedSeries(out, n)

    def pow(self, k: int) -> "TruncatedSeries":
        """Integer power by binary exponentiation, truncated at this order."""
        if k < 0:
            raise ValueError(f"k must be nonnegative, got {k}")
        result = TruncatedSeries.one(self._order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self._order >= 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}], order={self._order})"


def expm1(order: int) -> TruncatedSeries:
    """The series exp(t) - 1 to the given order."""
    return TruncatedSeries.t(order).exp() - TruncatedSeries.one(order)


def compose_expm1(outer: TruncatedSeries) -> TruncatedSeries:
    """Substitute exp(t) - 1 into ``outer`` by Horner composition."""
    u = expm1(outer.order)
    result = TruncatedSeries.from_constant(outer.coeff(outer.order), outer.order)
    for k in range(outer.order - 1, -1, -1):
        result = result * u + TruncatedSeries.from_constant(
            outer.coeff(k), outer.order
        )
    return result


def compose_expm1_stirling(outer: TruncatedSeries) -> TruncatedSeries:
    """Substitute exp(t) - 1 into ``outer`` via the Stirling transport.

    Uses the column expansion of powers of exp(t) - 1, so the result
    coefficient c'_n is sum over k of outer_k * k! * stirling2(n, k) / n!.
    Independent of :func:`compose_expm1`; the two must agree.
    """
    n_max = outer.order
    out = []
    for n in range(n_max + 1):
        acc = Fraction(0)
        for k in range(n + 1):
            a = outer.coeff(k)
            if a:
                acc += a * math.factorial(k) * seq.stirling2(n, k)
        out.append(acc / math.factorial(n))
    return TruncatedSeries(out, n_max)


def egf_pdb(r: int, y: Rational, order: int) -> TruncatedSeries:
    """Exponential generating series of the deranged-block polynomials.

    With u = exp(t) - 1 the series is (y*u)**r / r! * exp(-y*u) / (1 - y*u);
    n! times coefficient n equals ``pdb_poly(n, r)`` evaluated at y.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    v = expm1(order).scale(y)
    head = v.pow(r).scale(Fraction(1, math.factorial(r)))
    return head * (-v).exp() / (TruncatedSeries.one(order) - v)


EGF_FAMILIES = (
    "partial_derangement",
    "ordered_bell",
    "deranged_bell",
    "stirling_column",
    "higher_bernoulli",
)


def bernoulli_base_series(order: int) -> TruncatedSeries:
    """The series t / (exp(t) - 1), built as the inverse of sum t^n/(n+1)!."""
    ratio = TruncatedSeries(
        [Fraction(1, math.factorial(n + 1)) for n in range(order + 1)], order
    )
    return TruncatedSeries.one(order) / ratio


def egf_family(family: str, order: int, param: int | None = None) -> TruncatedSeries:
    """Build a named exponential generating series.

    ``partial_derangement``, ``stirling_column``, and ``higher_bernoulli``
    take an integer ``param`` (the fixed-point count r, the column k, and the
    power r respectively); the other families take none.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    one = TruncatedSeries.one(order)
    if family == "partial_derangement":
        r = _required_param(family, param)
        t = TruncatedSeries.t(order)
        head = t.pow(r).scale(Fraction(1, math.factorial(r)))
        return head * (-t).exp() / (one - t)
    if family == "ordered_bell":
        exp_t = TruncatedSeries.t(order).exp()
        return one / (TruncatedSeries.from_constant(2, order) - exp_t)
    if family == "deranged_bell":
        u = expm1(order)
        return (-u).exp() / (one - u)
    if family == "stirling_column":
        k = _required_param(family, param)
        return expm1(order).pow(k).scale(Fraction(1, math.factorial(k)))
    if family == "higher_bernoulli":
        r = _required_param(family, param)
        return bernoulli_base_series(order).pow(r)
    raise ValueError(f"unknown generating-series family: {family!r}")


def _required_param(family: str, param: int | None) -> int:
    if param is None:
        raise ValueError(f"family {family!r} requires an integer parameter")
    if param < 0:
        raise ValueError(f"parameter for {family!r} must be nonnegative, got {param}")
    return param
