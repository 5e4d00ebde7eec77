"""The limit checks: classical (hbar -> 0), canonical (lambda -> 0) and components."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from ..ncpoly import NCPoly, gen
from ..scalars import I, ONE, Scalar, param
from ..tensorcalc import OpMatrix, identity, matrix_of, trace
from .components import (ETA, component_map, canonical_rules, levi_civita, lorentz_j, pauli,
                         poincare_rules)
from .expansions import compare_R_vs_exp, constant_series, relation_series
from .rules import CLASSICAL_NEEDS, classical_rules
from .series import TruncatedSeries, exp_matrix_truncated

__all__ = [
    "LimitResult",
    "CLASSICAL_RELATIONS",
    "CANONICAL_RELATIONS",
    "classical_limit_check",
    "canonical_limit_check",
    "component_form_check",
    "pauli_lubanski_limit_check",
    "omega_limit_check",
    "r_vs_exp_check",
    "pauli_lubanski_components",
    "LIMIT_CHECKS",
]


@dataclass
class LimitResult:
    name: str
    passed: bool
    variable: str
    orders: int  # coefficients 0..orders were required to vanish
    residue: list = field(default_factory=list)  # (order, label, poly) of offending coefficients
    details: dict = field(default_factory=dict)

    def witness(self) -> dict | None:
        if not self.residue:
            return None
        k, label, poly = self.residue[0]
        return {"variable": self.variable, "order": k, "entry": label, "coefficient": str(poly)}

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "variable": self.variable,
                "orders": self.orders, "witness": self.witness(),
                "details": {k: str(v) for k, v in self.details.items()}}


def _collect(series_by_label, upto: int):
    bad = []
    for label, s in series_by_label:
        for k in range(upto + 1):
            c = s.coeffs[k]
            if not c.is_zero():
                bad.append((k, label, c))
    bad.sort(key=lambda t: t[0])
    return bad


def _entries(m: TruncatedSeries):
    n, k = m.coeffs[0].shape
    return [(f"({i + 1},{j + 1})", m.entry(i, j)) for i in range(n) for j in range(k)]


# classical limit -------------------------------------------------------------

# relation -> (equation shape, slot-1 matrix, slot-2 matrix); None means W + a P
CLASSICAL_RELATIONS = {
    "pp": ("pp", "P", "P"),
    "gg": ("gg", "G", "G"),
    "ggb": ("ggb", "G", "Gb"),
    "pg": ("pg", "P", "G"),
    "wg": ("wg", "Wc", "G"),
    "wgb": ("wgb", "Wc", "Gb"),
    "wp": ("pw", "Wc", "P"),
    "ww": ("pp", None, "Wc"),
    "tt": ("tt", "T", "T"),
    "ttb": ("tt", "T", "Tb"),
    "tbtb": ("tt", "Tb", "Tb"),
}


def classical_limit_check(name: str, mutate_sign: bool = False, with_w_extra: bool = True,
                          a: Scalar | None = None) -> LimitResult:
    """Quantum relation minus its right side, reordered with i*hbar*{,}; must be O(hbar^2)."""
    if name not in CLASSICAL_RELATIONS:
        raise ValueError(f"unknown relation {name!r}")
    shape, x, y = CLASSICAL_RELATIONS[name]
    a = ONE / (2 * param("lambda")) if a is None else a
    if x is None:
        left = matrix_of("Wc") + matrix_of("P").scale(a)
    else:
        left = matrix_of(x)
    s = relation_series(shape, constant_series(left, "hbar", 1),
                        constant_series(matrix_of(y), "hbar", 1))
    rules = classical_rules(CLASSICAL_NEEDS[name], mutate_sign=mutate_sign, with_w_extra=with_w_extra)
    reordered = [(label, rules.reorder(e)) for label, e in _entries(s)]
    bad = _collect(reordered, 1)
    return LimitResult(f"classical-limit-{name}", not bad, "hbar", 1, bad,
                       {"mutateSign": mutate_sign, "wExtraTerm": with_w_extra})


# canonical limit ---------------------------------------------------------------

# relation -> (equation shape, slot-1, slot-2, order through which the residue vanishes)
CANONICAL_RELATIONS = {
    "pp": ("pp", "P", "P", 0),
    "gg": ("gg", "G", "G", 2),
    "ggb": ("ggb", "G", "Gb", 2),
    "pg": ("pg", "P", "G", 1),
}


def _zero2():
    return OpMatrix([[0, 0], [0, 0]])


def gamma_series(order: int, dagger: bool = False, inverse: bool = False) -> TruncatedSeries:
    """exp(i*lambda*J) (or with J^dagger, or its inverse) as a lambda-series."""
    j = matrix_of("Jd" if dagger else "J")
    c = -I if inverse else I
    return exp_matrix_truncated(TruncatedSeries("lambda", order, [_zero2(), j.scale(c)]))


def canonical_limit_check(name: str, hbar_commutators: Scalar | None = None) -> LimitResult:
    """Gamma = exp(i lambda J), q = exp(hbar lambda); reorder with the canonical commutators."""
    if name not in CANONICAL_RELATIONS:
        raise ValueError(f"unknown relation {name!r}")
    shape, x, y, k = CANONICAL_RELATIONS[name]
    order = k + 1

    def series(m):
        if m == "P":
            return constant_series(matrix_of("P"), "lambda", order)
        return gamma_series(order, dagger=(m == "Gb"))

    s = relation_series(shape, series(x), series(y))
    rules = canonical_rules(hbar_commutators)
    reordered = [(label, rules.reorder(e)) for label, e in _entries(s)]
    bad = _collect(reordered, k)
    first_nonzero = next((kk for kk in range(order + 1)
                          if any(not e.coeffs[kk].is_zero() for _, e in reordered)), None)
    return LimitResult(f"canonical-limit-{name}", not bad, "lambda", k, bad,
                       {"firstNonzeroOrder": first_nonzero})


def component_form_check() -> LimitResult:
    """The matrix commutators, mapped to components, are the usual Poincare brackets."""
    from .components import canonical_relations
    cm = component_map()
    pr = poincare_rules()
    bad = []
    for label, rel in canonical_relations():
        rest = pr.reorder_poly(cm(rel)).get(0)
        if rest is not None and not rest.is_zero():
            bad.append((0, label, rest))
    return LimitResult("canonical-limit-components", not bad, "lambda", 0, bad)


# components of W and Omega ---------------------------------------------------------

def _reduce_components(x: NCPoly) -> NCPoly:
    return poincare_rules().reorder_poly(component_map()(x)).get(0, NCPoly())


@lru_cache(maxsize=1)
def pauli_lubanski_components() -> dict:
    """W0, W1..W3 from the component formulas, and the 4-vector contraction."""
    def pc(m):
        return gen(f"P{m}")

    half = ONE / 2
    w = {0: NCPoly()}
    for k, m, n in itertools.product((1, 2, 3), repeat=3):
        e = levi_civita(k - 1, m - 1, n - 1)
        if e:
            w[0] = w[0] - (pc(k) * lorentz_j(m, n)).scale(half * e)
    for k in (1, 2, 3):
        acc = NCPoly()
        for m, n in itertools.product((1, 2, 3), repeat=2):
            e = levi_civita(k - 1, m - 1, n - 1)
            if e:
                acc = acc - (pc(0) * lorentz_j(m, n)).scale(half * e)
        for l, m in itertools.product((1, 2, 3), repeat=2):
            e = levi_civita(l - 1, m - 1, k - 1)
            if e:
                acc = acc - (pc(l) * lorentz_j(m, 0)).scale(ONE * e)
        w[k] = acc
    # W_beta = -1/2 eps_beta^{mu nu rho} J_{mu nu} P_rho with eps^{0123} = -1
    four = {}
    for beta in range(4):
        acc = NCPoly()
        for mu, nu, rho in itertools.product(range(4), repeat=3):
            e = -levi_civita(beta, mu, nu, rho) * ETA[beta]
            if e:
                acc = acc - (lorentz_j(mu, nu) * pc(rho)).scale(half * e)
        four[beta] = acc
    return {"W": w, "four": four}


def _w_matrix_from_components(w: dict) -> OpMatrix:
    out = identity(2).scale(-ONE).map(lambda x: x * w[0])
    for k in (1, 2, 3):
        out = out + pauli(k).map(lambda x, k=k: x * w[k])
    return out


def pauli_lubanski_limit_check(beta_first_order: Scalar | None = None) -> LimitResult:
    """W = a(beta Gb^-1 P G - P) with a = 1/(2 lambda), beta = 1 + c*lambda + O(lambda^2).

    With ``beta_first_order=None`` the coefficient c is solved for; the check
    passes when some c makes the order-lambda^0 part of W equal to
    -I W0 + sigma_k W_k modulo the Poincare commutators.  ``c = 0`` is the
    strict beta = 1 binding.
    """
    g = gamma_series(1)
    gbi = gamma_series(1, dagger=True, inverse=True)
    p = constant_series(matrix_of("P"), "lambda", 1)
    x = gbi * p * g - p
    half = ONE / 2
    w_lead = x[1].scale(half)  # a * (x0 + lambda x1) with x0 = 0
    closed = (matrix_of("P") * matrix_of("J") - matrix_of("Jd") * matrix_of("P")).scale(I * half)
    comps = pauli_lubanski_components()
    target = _w_matrix_from_components(comps["W"])
    strict = [_reduce_components(u - v) for u, v in zip(w_lead.entries(), target.entries())]
    pmat = [_reduce_components(u) for u in matrix_of("P").entries()]
    details = {"leadingIsClosedForm": w_lead == closed}
    four_ok = all(_reduce_components(comps["four"][b] - comps["W"][b]).is_zero() for b in range(4))
    details["fourVectorForm"] = four_ok
    # residue = -(c/2) P for the unique c that works, if any
    if beta_first_order is None:
        c = _proportional(strict, pmat)
        if c is None:
            bad = [(0, f"entry{i}", r) for i, r in enumerate(strict) if not r.is_zero()]
            return LimitResult("pauli-lubanski-limit", False, "lambda", 0, bad, details)
        beta_first_order = -2 * c
    details["betaFirstOrder"] = beta_first_order
    corr = [r + pm.scale(beta_first_order * half) for r, pm in zip(strict, pmat)]
    bad = [(0, f"({i // 2 + 1},{i % 2 + 1})", r) for i, r in enumerate(corr) if not r.is_zero()]
    details["strictResidue"] = "; ".join(str(r) for r in strict)
    return LimitResult("pauli-lubanski-limit", not bad and four_ok, "lambda", 0, bad, details)


def _proportional(xs, ys) -> Scalar | None:
    """Scalar c with xs == c * ys entrywise, or None."""
    c = None
    for x, y in zip(xs, ys):
        if y.is_zero():
            if not x.is_zero():
                return None
            continue
        w = next(iter(y.terms))
        cand = x.coeff(w) / y.terms[w]
        if c is None:
            c = cand
        if x != y.scale(c):
            return None
    return c if c is not None else Scalar.const(0)


def omega_matrix_expected() -> OpMatrix:
    j12, j23, j31 = lorentz_j(1, 2), lorentz_j(2, 3), lorentz_j(3, 1)
    return OpMatrix([[j12, j23 - j31.scale(I)], [j23 + j31.scale(I), -j12]])


def omega_limit_check() -> LimitResult:
    """(Omega - I)/lambda at lambda^0 and Tr(Omega) through lambda^2, in components."""
    g = gamma_series(2)
    gbi = gamma_series(2, dagger=True, inverse=True)
    om = g * gbi
    lead = [_reduce_components(x) for x in om[1].entries()]
    expected = [_reduce_components(x) for x in omega_matrix_expected().entries()]
    ratio = _proportional(lead, expected)
    tr = [_reduce_components(trace(c)) for c in om.coeffs]
    j2 = sum((lorentz_j(a, b) * lorentz_j(a, b) for a, b in ((1, 2), (2, 3), (3, 1))), NCPoly())
    expect_tr = [NCPoly.const(2), NCPoly(), _reduce_components(j2.scale(Scalar.const(4)))]
    bad = []
    for k in range(3):
        d = tr[k] - expect_tr[k]
        if not d.is_zero():
            bad.append((k, "trace", d))
    for i, (u, v) in enumerate(zip(lead, expected)):
        if u != v:
            bad.append((0, f"(Omega-I)/lambda ({i // 2 + 1},{i % 2 + 1})", u - v))
    details = {"traceMatches": not any(b[1] == "trace" for b in bad),
               "matrixMatches": not any(b[1] != "trace" for b in bad),
               "ratioToExpected": ratio,
               "leading": "; ".join(str(x) for x in lead)}
    return LimitResult("omega-limit", not bad, "lambda", 2, bad, details)


def r_vs_exp_check(order: int = 3) -> LimitResult:
    d = compare_R_vs_exp(order)
    low = _collect(_entries(d), 2)
    third = [(i, j) for i in range(4) for j in range(4) if not d.coeffs[3][i, j].is_zero()]
    ok = not low and third == [(2, 1)]
    details = {"order3Support": third,
               "order3Entry32": d.coeffs[3][2, 1] if third else None}
    return LimitResult("r-vs-exp", ok, "hbar", 2, low, details)


LIMIT_CHECKS = {
    **{f"classical-limit-{n}": (lambda n=n: classical_limit_check(n)) for n in CLASSICAL_RELATIONS},
    **{f"canonical-limit-{n}": (lambda n=n: canonical_limit_check(n)) for n in CANONICAL_RELATIONS},
    "canonical-limit-components": component_form_check,
    "pauli-lubanski-limit": pauli_lubanski_limit_check,
    "omega-limit": omega_limit_check,
    "r-vs-exp": r_vs_exp_check,
}
