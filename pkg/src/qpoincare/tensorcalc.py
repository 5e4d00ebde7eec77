"""Operator matrices, tensor-space lifts and the q-deformed linear algebra.

``OpMatrix`` is a small dense matrix whose entries are :class:`NCPoly`;
products multiply entries in written order, so operator-valued matrices
stay correct in the noncommutative setting.  4x4 matrices act on the
two-fold tensor space with basis ordering 11, 12, 21, 22.
"""

from __future__ import annotations

from typing import Sequence

from .ncpoly import NCPoly, gen
from .scalars import I, ONE, ZERO, Scalar, ScalarError, as_scalar, param

__all__ = [
    "OpMatrix",
    "identity",
    "matrix_of",
    "permutation",
    "r_matrix",
    "r21_matrix",
    "classical_r_matrix",
    "lift",
    "lift3",
    "qybe_residual",
    "cybe_residual",
    "q_trace",
    "trace",
    "q_bracket",
    "q_scalar_product",
    "adjugate_P",
    "adjugate_W",
    "det_variant",
    "inverse_formula",
    "delta_q",
]


def _poly(x) -> NCPoly:
    return x if isinstance(x, NCPoly) else NCPoly.const(x)


class OpMatrix:
    """Dense n x m matrix of NCPoly entries (0-based indexing)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[_poly(x) for x in r] for r in rows]

    @property
    def shape(self):
        return len(self.rows), len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> NCPoly:
        """1-based access, matching the written matrix notation."""
        return self.rows[i - 1][j - 1]

    def entries(self):
        return [x for r in self.rows for x in r]

    def __add__(self, other):
        return OpMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return OpMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return OpMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "OpMatrix":
        return OpMatrix([[a.scale(c) for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, OpMatrix):
            return self.scale(other)
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = NCPoly()
                for t in range(k):
                    a, b = self.rows[i][t], other.rows[t][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return OpMatrix(out)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, OpMatrix) and self.rows == other.rows

    def transpose(self) -> "OpMatrix":
        return OpMatrix([list(r) for r in zip(*self.rows)])

    def dagger(self) -> "OpMatrix":
        """Operator conjugate transpose: (A^dagger)_{ij} = (A_{ji})^dagger."""
        return OpMatrix([[x.dagger() for x in r] for r in zip(*self.rows)])

    def map(self, f) -> "OpMatrix":
        return OpMatrix([[f(x) for x in r] for r in self.rows])

    def substitute(self, table) -> "OpMatrix":
        return self.map(lambda x: x.substitute(table))

    def subs_params(self, bindings) -> "OpMatrix":
        return self.map(lambda x: x.subs_params(bindings))

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries())

    def is_scalar(self) -> bool:
        return all(not x.terms or set(x.terms) == {()} for x in self.entries())

    def scalar_entry(self, i, j) -> Scalar:
        return self.rows[i][j].constant_term()

    def inverse_scalar(self) -> "OpMatrix":
        """Exact inverse of a parameter-valued matrix (Gauss-Jordan)."""
        if not self.is_scalar():
            raise ValueError("inverse_scalar needs parameter-valued entries")
        n, m = self.shape
        if n != m:
            raise ValueError("inverse of a non-square matrix")
        a = [[self.scalar_entry(i, j) for j in range(n)] + [ONE if i == j else ZERO for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
            if piv is None:
                raise ScalarError("singular parameter matrix")
            a[col], a[piv] = a[piv], a[col]
            inv = a[col][col].inverse()
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and not a[r][col].is_zero():
                    f = a[r][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return OpMatrix([row[n:] for row in a])

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)

    __repr__ = __str__


def identity(n: int) -> OpMatrix:
    return OpMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])


def matrix_of(prefix: str) -> OpMatrix:
    """2x2 matrix of generators ``prefix11 .. prefix22``."""
    return OpMatrix([[gen(f"{prefix}11"), gen(f"{prefix}12")],
                     [gen(f"{prefix}21"), gen(f"{prefix}22")]])


def permutation(dim: int = 2) -> OpMatrix:
    """Flip operator on C^dim (x) C^dim."""
    n = dim * dim
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(dim):
        for j in range(dim):
            rows[i * dim + j][j * dim + i] = ONE
    return OpMatrix(rows)


def r_matrix() -> OpMatrix:
    q = param("q")
    s = param("s")
    pref = ONE / s
    return OpMatrix([
        [q * pref, ZERO, ZERO, ZERO],
        [ZERO, pref, ZERO, ZERO],
        [ZERO, (q - ONE / q) * pref, pref, ZERO],
        [ZERO, ZERO, ZERO, q * pref],
    ])


def r21_matrix() -> OpMatrix:
    pi = permutation()
    return pi * r_matrix() * pi


def classical_r_matrix() -> OpMatrix:
    lam = param("lambda")
    c = I * lam / 2
    return OpMatrix([
        [c, ZERO, ZERO, ZERO],
        [ZERO, -c, ZERO, ZERO],
        [ZERO, 4 * c, -c, ZERO],
        [ZERO, ZERO, ZERO, c],
    ])


def _kron(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    # entries multiply as a_ij * b_kl, left factor first
    n, m = a.shape
    k, l = b.shape
    rows = []
    for i in range(n):
        for p in range(k):
            row = []
            for j in range(m):
                for t in range(l):
                    x, y = a.rows[i][j], b.rows[p][t]
                    row.append(x * y if x and y else NCPoly())
            rows.append(row)
    return OpMatrix(rows)


def lift(a: OpMatrix, slot: int) -> OpMatrix:
    """A (x) 1 for slot 1, 1 (x) A for slot 2."""
    if slot == 1:
        return _kron(a, identity(2))
    if slot == 2:
        return _kron(identity(2), a)
    raise ValueError("slot must be 1 or 2")


def lift3(m4: OpMatrix, slots: tuple) -> OpMatrix:
    """Embed a 4x4 two-site operator into the 8x8 three-site space."""
    if slots == (1, 2):
        return _kron(m4, identity(2))
    if slots == (2, 3):
        return _kron(identity(2), m4)
    if slots == (1, 3):
        p23 = _kron(identity(2), permutation())
        return p23 * _kron(m4, identity(2)) * p23
    raise ValueError(f"unsupported slots {slots}")


def qybe_residual(r: OpMatrix | None = None) -> OpMatrix:
    r = r or r_matrix()
    r12, r13, r23 = lift3(r, (1, 2)), lift3(r, (1, 3)), lift3(r, (2, 3))
    return r12 * r13 * r23 - r23 * r13 * r12


def cybe_residual(r: OpMatrix | None = None) -> OpMatrix:
    r = r or classical_r_matrix()
    r12, r13, r23 = lift3(r, (1, 2)), lift3(r, (1, 3)), lift3(r, (2, 3))

    def br(x, y):
        return x * y - y * x

    return br(r12, r13) + br(r12, r23) + br(r13, r23)


# q-linear algebra -----------------------------------------------------

def q_trace(a: OpMatrix) -> NCPoly:
    return a[0, 0] + a[1, 1].scale(param("q") ** 2)


def trace(a: OpMatrix) -> NCPoly:
    return a[0, 0] + a[1, 1]


def q_bracket(a: OpMatrix, b: OpMatrix) -> NCPoly:
    """<A, B>_q = A11 B22 - q^-2 A12 B21."""
    return a[0, 0] * b[1, 1] - (a[0, 1] * b[1, 0]).scale(ONE / param("q") ** 2)


def q_scalar_product(a: OpMatrix, b: OpMatrix, badj: OpMatrix) -> NCPoly:
    """(A, B)_q = -Tr_q(A B~) / (q^2 + 1), with B~ supplied."""
    del b  # the pairing only depends on the adjugate
    q2 = param("q") ** 2
    return q_trace(a * badj).scale(-ONE / (q2 + 1))


def adjugate_P(p: OpMatrix) -> OpMatrix:
    q2 = param("q") ** 2
    iq2 = ONE / q2
    return OpMatrix([
        [p[1, 1], p[0, 1].scale(-iq2)],
        [p[1, 0].scale(-iq2), (p[0, 0] + p[1, 1].scale(q2 - 1)).scale(iq2)],
    ])


def adjugate_W(w: OpMatrix, p: OpMatrix, a: Scalar | None = None) -> OpMatrix:
    a = param("a") if a is None else as_scalar(a)
    q2 = param("q") ** 2
    return adjugate_P(w) - adjugate_P(p).scale(a * (q2 - 1))


def det_variant(m: OpMatrix, kind: str) -> NCPoly:
    q = param("q")
    if kind == "det_q":
        # det_q(M) = M11 M22 - q^-2 M12 M21
        return m[0, 0] * m[1, 1] - (m[0, 1] * m[1, 0]).scale(ONE / q ** 2)
    if kind == "det_1/q_transpose":
        # det_{1/q}(M^T) = M11 M22 - q^2 M21 M12
        return m[0, 0] * m[1, 1] - (m[1, 0] * m[0, 1]).scale(q ** 2)
    if kind == "det_1/sqrtq":
        return m[0, 0] * m[1, 1] - (m[0, 1] * m[1, 0]).scale(q)
    raise ValueError(f"unknown determinant kind {kind!r}")


def inverse_formula(m: OpMatrix, kind: str) -> OpMatrix:
    """Inverse of a unimodular operator matrix, determinant set to one."""
    q = param("q")
    q2 = q ** 2
    if kind == "G":
        return OpMatrix([
            [m[1, 1].scale(q2) - m[0, 0].scale(q2 - 1), m[0, 1].scale(-q2)],
            [m[1, 0].scale(-q2), m[0, 0]],
        ])
    if kind == "Gb":
        return adjugate_P(m)
    if kind == "T":
        return OpMatrix([
            [m[1, 1], m[0, 1].scale(-ONE / q)],
            [m[1, 0].scale(-q), m[0, 0]],
        ])
    raise ValueError(f"unknown inverse kind {kind!r}")


def delta_q() -> OpMatrix:
    return OpMatrix([[ONE, ZERO], [ZERO, param("q") ** 2]])
