"""Linear ansatz solving over the scalar field.

The unknown is ``X = sum_k c_k * B_k`` for a finite basis ``B_k``; a
property that is linear in ``X`` and expressed as "these polynomials reduce
to zero" becomes a homogeneous linear system for the ``c_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..ncpoly import NCPoly
from ..scalars import ONE, ZERO, Scalar
from .rewrite import RewriteSystem

__all__ = ["AnsatzSolution", "linear_ansatz_solve", "nullspace", "rref"]


def rref(rows: list[dict], ncols: int):
    """Reduced row-echelon form of sparse rows {col: Scalar}; returns (rows, pivot cols)."""
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if not v.is_zero()}
        for pc in sorted(set(r) & set(pivots)):
            if pc in r:
                r = _axpy(r, pivots[pc], -r[pc])
        if not r:
            continue
        pc = min(r)
        inv = r[pc].inverse()
        r = {k: v * inv for k, v in r.items()}
        for k, p in list(pivots.items()):
            if pc in p:
                pivots[k] = _axpy(p, r, -p[pc])
        pivots[pc] = r
    for pc in sorted(pivots):
        r = pivots[pc]
        for other in sorted(set(r) & set(pivots)):
            if other != pc and other in r:
                r = _axpy(r, pivots[other], -r[other])
        pivots[pc] = r
    return [pivots[k] for k in sorted(pivots)], sorted(pivots)


def _axpy(a: dict, b: dict, c: Scalar) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, ZERO) + v * c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def nullspace(rows: list[dict], ncols: int) -> list[list[Scalar]]:
    red, piv = rref(rows, ncols)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, pc in zip(red, piv):
            c = r.get(f)
            if c is not None:
                v[pc] = -c
        basis.append(v)
    return basis


@dataclass
class AnsatzSolution:
    basis: list  # list of coefficient vectors spanning the solution space
    equations: int

    @property
    def dimension(self) -> int:
        return len(self.basis)


def linear_ansatz_solve(condition: Callable[[object], Sequence[NCPoly]], basis: Sequence,
                        system: RewriteSystem) -> AnsatzSolution:
    """Solve ``condition(sum c_k basis_k)`` reduces to 0 for the coefficients ``c_k``.

    ``condition`` must be linear; it is evaluated once per basis element.
    """
    columns: list[list[NCPoly]] = []
    for b in basis:
        columns.append([system.reduce(p) for p in condition(b)])
    neq = len(columns[0]) if columns else 0
    rows: dict = {}
    for k, col in enumerate(columns):
        for j, p in enumerate(col):
            for w, c in p.terms.items():
                rows.setdefault((j, w), {})[k] = c
    return AnsatzSolution(nullspace(list(rows.values()), len(basis)), neq)
