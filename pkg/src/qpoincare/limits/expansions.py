"""Series expansions of the R-matrix family and of the matrix relations.

With ``q = exp(hbar * lambda)`` every R-matrix entry is a Laurent
polynomial in ``s = q**(1/2) = exp(hbar * lambda / 2)``, so each power of
``s`` expands as an exponential in whichever of hbar or lambda is the
series variable.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..presentation import EQUATIONS, rmats
from ..scalars import I, Scalar, param
from ..tensorcalc import OpMatrix, classical_r_matrix, identity, lift
from .series import TruncatedSeries, exp_matrix_truncated

__all__ = [
    "LIMIT_VARS",
    "scalar_series",
    "matrix_series",
    "expand_R_in_hbar",
    "exp_minus_i_hbar_r",
    "compare_R_vs_exp",
    "relation_series",
    "lifted",
    "constant_series",
    "unit_series",
    "polys_of",
]

# the series variable and the parameter left symbolic in the exponent
LIMIT_VARS = {"hbar": "lambda", "lambda": "hbar"}


def scalar_series(x: Scalar, var: str, order: int) -> list[Scalar]:
    """Coefficients of ``x`` in ``var`` after substituting ``s = exp(hbar*lambda/2)``."""
    other = param(LIMIT_VARS[var])
    out = [Scalar.const(0)] * (order + 1)
    for n, c in x.s_laurent().items():
        rate = other * Scalar.const(Fraction(n, 2))
        term = c
        for k in range(order + 1):
            out[k] = out[k] + term / factorial(k)
            term = term * rate
    return out


def matrix_series(m: OpMatrix, var: str, order: int) -> TruncatedSeries:
    """Series of a parameter-valued matrix, one OpMatrix per order."""
    if not m.is_scalar():
        raise ValueError("matrix_series needs parameter-valued entries")
    n, k = m.shape
    table = [[scalar_series(m.scalar_entry(i, j), var, order) for j in range(k)] for i in range(n)]
    coeffs = [OpMatrix([[table[i][j][t] for j in range(k)] for i in range(n)])
              for t in range(order + 1)]
    return TruncatedSeries(var, order, coeffs)


_RSERIES: dict = {}


def _r_family(var: str, order: int) -> dict:
    key = (var, order)
    if key not in _RSERIES:
        rm = rmats()
        _RSERIES[key] = {name: matrix_series(getattr(rm, name), var, order)
                         for name in ("r12", "r12i", "r21", "r21i")}
    return _RSERIES[key]


def expand_R_in_hbar(order: int) -> TruncatedSeries:
    if order < 1:
        raise ValueError("order must be at least 1")
    return _r_family("hbar", order)["r12"]


def exp_minus_i_hbar_r(order: int) -> TruncatedSeries:
    r = classical_r_matrix()
    gen = TruncatedSeries("hbar", order, [OpMatrix([[0] * 4] * 4), r.scale(-I)])
    return exp_matrix_truncated(gen)


def compare_R_vs_exp(order: int) -> TruncatedSeries:
    """R - exp(-i hbar r) as an hbar-series."""
    if order < 3:
        raise ValueError("order must be at least 3")
    return expand_R_in_hbar(order) - exp_minus_i_hbar_r(order)


def lifted(m: TruncatedSeries, slot: int) -> TruncatedSeries:
    return m.map(lambda c: lift(c, slot))


def relation_series(kind: str, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """LHS - RHS of a named matrix relation, with A and B given as 2x2 series."""
    fam = _r_family(a.var, a.order)
    mats = {"A": lifted(a, 1), "B": lifted(b, 2)}

    def product(factors):
        out = None
        for f in factors:
            m = fam[f[0].lower()] if len(f) == 1 else mats[f[0]]
            out = m if out is None else out * m
        return out

    left, right = EQUATIONS[kind]
    return product(left) - product(right)


def constant_series(m: OpMatrix, var: str, order: int) -> TruncatedSeries:
    return TruncatedSeries(var, order, [m])


def unit_series(var: str, order: int, n: int = 2) -> TruncatedSeries:
    return TruncatedSeries(var, order, [identity(n)])


def polys_of(m: TruncatedSeries) -> list[TruncatedSeries]:
    """Entrywise view: one NCPoly series per matrix entry."""
    n, k = m.coeffs[0].shape
    return [m.entry(i, j) for i in range(n) for j in range(k)]

