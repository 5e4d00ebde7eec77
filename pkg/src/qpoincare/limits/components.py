"""Canonical commutators, Lorentz components and the Poincare rule set."""

from __future__ import annotations

import itertools
from functools import lru_cache

from ..ncpoly import NCPoly, commutator, gen
from ..scalars import I, ONE, Scalar, param
from ..tensorcalc import OpMatrix, identity, lift, matrix_of, permutation
from .rules import LimitRuleSet

__all__ = [
    "ETA",
    "levi_civita",
    "pauli",
    "ComponentMap",
    "component_map",
    "lorentz_j",
    "canonical_relations",
    "canonical_rules",
    "poincare_relations",
    "poincare_rules",
]

ETA = (-1, 1, 1, 1)
_IDX = ("11", "12", "21", "22")


def levi_civita(*idx) -> int:
    """Sign of the permutation ``idx`` of 0..n-1 (0 when indices repeat)."""
    if len(set(idx)) != len(idx):
        return 0
    sign = 1
    p = list(idx)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def pauli(k: int) -> OpMatrix:
    return {
        1: OpMatrix([[0, 1], [1, 0]]),
        2: OpMatrix([[0, -I], [I, 0]]),
        3: OpMatrix([[1, 0], [0, -1]]),
    }[k]


def lorentz_j(mu: int, nu: int) -> NCPoly:
    """J_{mu nu} in terms of the stored components Jc{mu}{nu} (mu < nu)."""
    if mu == nu:
        return NCPoly()
    if mu < nu:
        return gen(f"Jc{mu}{nu}")
    return -gen(f"Jc{nu}{mu}")


def _p(mu):
    return gen(f"P{mu}")


class ComponentMap:
    """P = -I P0 + sigma_k P_k and J = sigma_k (J_k0 - (i/2) eps_kmn J_mn)."""

    def __init__(self):
        p = identity(2).scale(-ONE).map(lambda x: x * _p(0))
        j = OpMatrix([[0, 0], [0, 0]])
        for k in (1, 2, 3):
            p = p + pauli(k).map(lambda x, k=k: x * _p(k))
            coef = lorentz_j(k, 0)
            for m, n in itertools.product((1, 2, 3), repeat=2):
                e = levi_civita(k - 1, m - 1, n - 1)
                if e:
                    coef = coef - lorentz_j(m, n).scale(I * Scalar.const(e) / 2)
            j = j + pauli(k).map(lambda x, c=coef: x * c)
        self.p_matrix = p
        self.j_matrix = j
        table = {}
        for a, ij in enumerate(_IDX):
            i, jj = divmod(a, 2)
            table[f"P{ij}"] = p[i, jj]
            table[f"J{ij}"] = j[i, jj]
            # Jd = J^dagger entrywise: (J^dagger)_{ij} = (J_{ji})^dagger
            table[f"Jd{ij}"] = j[jj, i].dagger()
        self.table = table

    def __call__(self, x: NCPoly) -> NCPoly:
        return x.substitute(self.table)

    def apply_matrix(self, m: OpMatrix) -> OpMatrix:
        return m.map(self)

    def reassemble_p(self) -> dict:
        """Components recovered from the 2x2 entries: inverse of the map on P."""
        p = {ij: gen(f"P{ij}") for ij in _IDX}
        half = ONE / 2
        return {
            "P0": (p["11"] + p["22"]).scale(-half),
            "P3": (p["11"] - p["22"]).scale(half),
            "P1": (p["12"] + p["21"]).scale(half),
            "P2": (p["21"] - p["12"]).scale(half * (-I)),
        }


@lru_cache(maxsize=1)
def component_map() -> ComponentMap:
    return ComponentMap()


# canonical (lambda -> 0) commutators at the matrix level -----------------------

def _entry_pairs():
    for i, j, k, l in itertools.product(range(2), repeat=4):
        yield i, j, k, l, 2 * i + k, 2 * j + l


def canonical_relations(hbar: Scalar | None = None) -> list[tuple[str, NCPoly]]:
    """[P1,P2]=0, [J1,Jd2]=0, [J1,J2]=2i hbar Pi(J2-J1), [P1,J2]=i hbar P1(2 Pi - I), with daggers."""
    hbar = param("hbar") if hbar is None else hbar
    P, J, Jd = matrix_of("P"), matrix_of("J"), matrix_of("Jd")
    pi = permutation()
    jj = (pi * (lift(J, 2) - lift(J, 1))).scale(2 * I * hbar)
    pj = (lift(P, 1) * (pi.scale(Scalar.const(2)) - identity(4))).scale(I * hbar)
    out = []
    for i, j, k, l, r, c in _entry_pairs():
        a, b = f"{i + 1}{j + 1}", f"{k + 1}{l + 1}"
        out.append(("PP", commutator(gen("P" + a), gen("P" + b))))
        out.append(("JJd", commutator(gen("J" + a), gen("Jd" + b))))
        out.append(("JJ", commutator(gen("J" + a), gen("J" + b)) - jj[r, c]))
        out.append(("PJ", commutator(gen("P" + a), gen("J" + b)) - pj[r, c]))
    out += [(name + "+dagger", x.dagger()) for name, x in out]
    return [(n, x) for n, x in out if not x.is_zero()]


def _swap_rules(relations, rank, var, name) -> LimitRuleSet:
    """Read ``x y - y x - c`` (x > y) as the swap rule ``x y -> y x + c``."""
    corrections: dict = {}
    for _, rel in relations:
        quad = [w for w in rel.terms if len(w) == 2]
        if not quad:
            continue
        w = max(quad, key=lambda u: tuple(rank[g] for g in u))
        x, y = w
        if rank[x] == rank[y]:
            continue
        lead = rel.terms[w]
        norm = rel.scale(lead.inverse())
        if norm.coeff((y, x)) != -ONE or len(quad) != 2:
            raise ValueError(f"relation is not a commutator rule: {rel}")
        corr = -(norm - NCPoly.word((x, y)) + NCPoly.word((y, x)))
        prev = corrections.get((x, y))
        if prev is not None and prev != corr:
            raise ValueError(f"inconsistent commutators for {x}, {y}: {prev} vs {corr}")
        corrections[(x, y)] = corr
    return LimitRuleSet(var, rank, corrections, shift=0, name=name)


def _canonical_rank() -> dict:
    order = [f"P{ij}" for ij in _IDX] + [f"J{ij}" for ij in _IDX] + [f"Jd{ij}" for ij in _IDX]
    return {g: k for k, g in enumerate(order)}


def canonical_rules(hbar: Scalar | None = None) -> LimitRuleSet:
    return _swap_rules(canonical_relations(hbar), _canonical_rank(), "lambda", "canonical")


# the undeformed Poincare algebra in components ----------------------------------

def poincare_relations(hbar: Scalar | None = None) -> list[tuple[str, NCPoly]]:
    hbar = param("hbar") if hbar is None else hbar
    ih = I * hbar
    out = []
    for mu, nu in itertools.combinations(range(4), 2):
        out.append(("PP", commutator(_p(mu), _p(nu))))
    pairs = list(itertools.combinations(range(4), 2))
    for mu in range(4):
        for nu, rho in pairs:
            rhs = _p(nu).scale(ih * ETA[mu] * (mu == rho)) - _p(rho).scale(ih * ETA[mu] * (mu == nu))
            out.append(("PJ", commutator(_p(mu), lorentz_j(nu, rho)) - rhs))
    for (mu, nu), (rho, sig) in itertools.combinations(pairs, 2):
        rhs = (lorentz_j(nu, sig).scale(ETA[mu] * (mu == rho) * ONE)
               + lorentz_j(mu, rho).scale(ETA[nu] * (nu == sig) * ONE)
               + lorentz_j(rho, nu).scale(ETA[mu] * (mu == sig) * ONE)
               + lorentz_j(sig, mu).scale(ETA[nu] * (nu == rho) * ONE)).scale(ih)
        out.append(("JJ", commutator(lorentz_j(mu, nu), lorentz_j(rho, sig)) - rhs))
    return out


def _poincare_rank() -> dict:
    order = [f"P{mu}" for mu in range(4)] + [f"Jc{m}{n}" for m, n in itertools.combinations(range(4), 2)]
    return {g: k for k, g in enumerate(order)}


def poincare_rules(hbar: Scalar | None = None) -> LimitRuleSet:
    return _swap_rules(poincare_relations(hbar), _poincare_rank(), "lambda", "poincare")

