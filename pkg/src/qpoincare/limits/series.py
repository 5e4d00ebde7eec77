"""Truncated power series with noncommutative (or matrix) coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from ..ncpoly import NCPoly
from ..scalars import Scalar, as_scalar
from ..tensorcalc import OpMatrix, identity

__all__ = ["TruncatedSeries", "exp_series_scalar", "exp_matrix_truncated", "exp_oracle"]


def _zero_like(x):
    if isinstance(x, OpMatrix):
        n, m = x.shape
        return OpMatrix([[NCPoly() for _ in range(m)] for _ in range(n)])
    return NCPoly()


class TruncatedSeries:
    """sum_k coeffs[k] * var**k + O(var**(order+1)).

    Coefficients are NCPoly or OpMatrix; products keep only orders <= order,
    so coefficient k of a product depends on coefficients <= k of the factors.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError("order must be non-negative")
        zero = _zero_like(coeffs[0]) if coeffs else NCPoly()
        cs = list(coeffs[: order + 1])
        cs += [zero] * (order + 1 - len(cs))
        self.var = var
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, var, order, value):
        return cls(var, order, [value])

    def _check(self, other):
        if self.var != other.var:
            raise ValueError(f"series in {self.var} and {other.var} cannot be combined")

    def __add__(self, other):
        self._check(other)
        n = min(self.order, other.order)
        return TruncatedSeries(self.var, n, [a + b for a, b in zip(self.coeffs, other.coeffs)][: n + 1])

    def __neg__(self):
        return TruncatedSeries(self.var, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.var, self.order, [x.scale(c) for x in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if _is_zero(a) or _is_zero(b):
                    continue
                t = a * b
                acc = t if acc is None else acc + t
            out.append(acc if acc is not None else _zero_like(self.coeffs[0]))
        return TruncatedSeries(self.var, n, out)

    def map(self, f: Callable) -> "TruncatedSeries":
        return TruncatedSeries(self.var, self.order, [f(c) for c in self.coeffs])

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.var, min(order, self.order), self.coeffs)

    def entry(self, i, j) -> "TruncatedSeries":
        return TruncatedSeries(self.var, self.order, [c[i, j] for c in self.coeffs])

    def leading_order(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return k
        return None

    def is_zero_through(self, k: int) -> bool:
        return all(_is_zero(c) for c in self.coeffs[: k + 1])

    def __getitem__(self, k):
        return self.coeffs[k]

    def __str__(self):
        parts = [f"[{self.var}^{k}] {c}" for k, c in enumerate(self.coeffs) if not _is_zero(c)]
        return "\n".join(parts) + f"\n+ O({self.var}^{self.order + 1})" if parts \
            else f"O({self.var}^{self.order + 1})"


def _is_zero(x) -> bool:
    return x.is_zero()


def exp_series_scalar(c: Scalar, order: int) -> list[Scalar]:
    """Taylor coefficients of exp(c * t) in t."""
    c = as_scalar(c)
    out, term = [], Scalar.const(1)
    for k in range(order + 1):
        out.append(term / factorial(k))
        term = term * c
    return out


def exp_matrix_truncated(m: TruncatedSeries) -> TruncatedSeries:
    """exp(M) = sum M^k / k! for a series M without order-0 part."""
    if not _is_zero(m.coeffs[0]):
        raise ValueError("exponent must have no order-0 part")
    unit = identity(m.coeffs[0].shape[0]) if isinstance(m.coeffs[0], OpMatrix) else NCPoly.const(1)
    result = TruncatedSeries.constant(m.var, m.order, unit)
    power = TruncatedSeries.constant(m.var, m.order, unit)
    for k in range(1, m.order + 1):
        power = power * m
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def exp_oracle(m: TruncatedSeries, k: int):
    """Coefficient k of exp(M), summed over compositions of k (independent check)."""
    unit = identity(m.coeffs[0].shape[0]) if isinstance(m.coeffs[0], OpMatrix) else NCPoly.const(1)
    if k == 0:
        return unit
    total = _zero_like(m.coeffs[0])

    def comps(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in comps(rest - first):
                yield (first,) + tail

    for parts in comps(k):
        prod = unit
        for p in parts:
            prod = prod * m.coeffs[p]
        total = total + prod.scale(Fraction(1, factorial(len(parts))))
    return total
