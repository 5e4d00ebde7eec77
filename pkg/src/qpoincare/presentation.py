"""The deformed Poincare algebra: relation sets and derived operators."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .ncpoly import ALPHABET, NCPoly, gen
from .scalars import ONE, Scalar, param
from .tensorcalc import (OpMatrix, adjugate_P, adjugate_W, det_variant, identity,
                         inverse_formula, lift, matrix_of, q_bracket, q_trace, r21_matrix,
                         r_matrix, trace)

__all__ = [
    "RelationSet",
    "SectorAbsent",
    "matrix_relation",
    "ww_relation",
    "relation_equation",
    "build_defining_relations",
    "conjugate_relations",
    "expand_entries",
    "dedup",
    "define_W",
    "define_omega_and_K",
    "define_casimirs",
    "define_transformed",
    "derived_table",
    "P", "G", "Gb", "T", "Tb",
]

P = matrix_of("P")
G = matrix_of("G")
Gb = matrix_of("Gb")
T = matrix_of("T")
Tb = matrix_of("Tb")

_IDX = ("11", "12", "21", "22")


class SectorAbsent(ValueError):
    pass


@dataclass
class _R:
    """R-matrix family, built once per process."""

    r12: OpMatrix
    r12i: OpMatrix
    r21: OpMatrix
    r21i: OpMatrix


_RCACHE: list = []


def rmats() -> _R:
    if not _RCACHE:
        r12 = r_matrix()
        r21 = r21_matrix()
        _RCACHE.append(_R(r12, r12.inverse_scalar(), r21, r21.inverse_scalar()))
    return _RCACHE[0]


# each equation is a pair of products; factors are "R12", "R12i", "R21",
# "R21i" or (matrix-name, slot)
EQUATIONS = {
    "pp": ([("R12",), ("A", 1), ("R12i",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R21",)]),
    "gg": ([("R21i",), ("A", 1), ("R21",), ("B", 2)], [("B", 2), ("R12",), ("A", 1), ("R12i",)]),
    "ggb": ([("R12",), ("A", 1), ("R12i",), ("B", 2)], [("B", 2), ("R12",), ("A", 1), ("R12i",)]),
    "pg": ([("R21i",), ("A", 1), ("R21",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R12i",)]),
    # W relations: wg and pw share the shapes of pg and pp
    "wg": ([("R21i",), ("A", 1), ("R21",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R12i",)]),
    "wgb": ([("R12",), ("A", 1), ("R12i",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R12i",)]),
    "pw": ([("R12",), ("A", 1), ("R12i",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R21",)]),
    "tt": ([("R12",), ("A", 1), ("B", 2)], [("B", 2), ("A", 1), ("R12",)]),
    # hermitian conjugate of ggb, with Gb in slot 1
    "gbg": ([("R21i",), ("A", 1), ("R21",), ("B", 2)], [("B", 2), ("R21i",), ("A", 1), ("R21",)]),
    # Omega universality: Z1 R21 O2 R12 = R21 O2 R12 Z1
    "sigmacr": ([("A", 1), ("R21",), ("B", 2), ("R12",)], [("R21",), ("B", 2), ("R12",), ("A", 1)]),
}


def _product(factors, mats) -> OpMatrix:
    rm = rmats()
    out = None
    for f in factors:
        if len(f) == 1:
            m = getattr(rm, f[0].lower())
        else:
            m = lift(mats[f[0]], f[1])
        out = m if out is None else out * m
    return out


def relation_equation(kind: str, a: OpMatrix, b: OpMatrix) -> tuple[OpMatrix, OpMatrix]:
    """Left and right sides of a named matrix equation with A in slot 1, B in slot 2."""
    left, right = EQUATIONS[kind]
    mats = {"A": a, "B": b}
    return _product(left, mats), _product(right, mats)


def matrix_relation(kind: str, a: OpMatrix, b: OpMatrix) -> OpMatrix:
    lhs, rhs = relation_equation(kind, a, b)
    return lhs - rhs


def ww_relation(w: OpMatrix, p: OpMatrix, a: Scalar | None = None) -> OpMatrix:
    """R12 (W1 + a P1) R12^-1 W2 - W2 R21^-1 (W1 + a P1) R21."""
    a = param("a") if a is None else a
    return matrix_relation("pp", w + p.scale(a), w)


def expand_entries(m: OpMatrix) -> list[NCPoly]:
    return [x for x in m.entries() if not x.is_zero()]


def _canonical_key(x: NCPoly):
    # normalise by the coefficient of the largest word under a plain sort
    w = max(x.terms, key=lambda u: (len(u), u))
    y = x.scale(x.terms[w].inverse())
    return frozenset(y.terms.items())


def dedup(polys: Iterable[NCPoly]) -> list[NCPoly]:
    """Drop zeros and scalar multiples of earlier entries."""
    seen = set()
    out = []
    for p in polys:
        if p.is_zero():
            continue
        k = _canonical_key(p)
        if k in seen:
            continue
        seen.add(k)
        out.append(p)
    return out


@dataclass
class RelationSet:
    name: str
    relations: list[NCPoly]
    labels: list[str]
    sectors: frozenset
    includes_unimodularity: bool = False
    includes_dagger_closure: bool = False
    extra: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.relations)

    def with_extra(self, polys: Sequence[NCPoly], label: str) -> "RelationSet":
        rels = list(self.relations)
        labels = list(self.labels)
        keys = {_canonical_key(p) for p in rels}
        for p in polys:
            if p.is_zero() or _canonical_key(p) in keys:
                continue
            keys.add(_canonical_key(p))
            rels.append(p)
            labels.append(label)
        return RelationSet(self.name + "+" + label, rels, labels, self.sectors,
                           self.includes_unimodularity, self.includes_dagger_closure, dict(self.extra))

    def subs_params(self, bindings) -> "RelationSet":
        return RelationSet(self.name, [r.subs_params(bindings) for r in self.relations],
                           list(self.labels), self.sectors, self.includes_unimodularity,
                           self.includes_dagger_closure, dict(self.extra))

    def to_json(self) -> str:
        gens = sorted({g for r in self.relations for w in r.terms for g in w},
                      key=lambda g: ALPHABET[g].precedence)
        doc = {
            "name": self.name,
            "sectors": sorted(self.sectors),
            "includesUnimodularity": self.includes_unimodularity,
            "includesDaggerClosure": self.includes_dagger_closure,
            "generators": [{"name": g, "sector": ALPHABET[g].sector,
                            "precedence": ALPHABET[g].precedence,
                            "dagger": str(ALPHABET[g].dagger_image())} for g in gens],
            "relations": [{"label": l, "poly": str(r)} for l, r in zip(self.labels, self.relations)],
        }
        return json.dumps(doc, indent=2)


def unimodularity_relations(with_t: bool = False) -> list[tuple[str, NCPoly]]:
    out = [
        ("c3", det_variant(G, "det_1/q_transpose") - ONE),
        ("c4", det_variant(Gb, "det_q") - ONE),
    ]
    if with_t:
        out += [("dett", det_variant(T, "det_1/sqrtq") - ONE),
                ("dettb", det_variant(Tb, "det_1/sqrtq") - ONE)]
    return out


def base_relations(with_t: bool = False) -> list[tuple[str, NCPoly]]:
    out = []
    for name, a, b in (("pp", P, P), ("gg", G, G), ("ggb", G, Gb), ("pg", P, G)):
        out += [(name, x) for x in expand_entries(matrix_relation(name, a, b))]
    if with_t:
        for name, a, b in (("tt", T, T), ("ttb", T, Tb), ("tbtb", Tb, Tb)):
            out += [(name, x) for x in expand_entries(matrix_relation("tt", a, b))]
        for z in ("P", "G", "Gb"):
            for ij in _IDX:
                for t in ("T", "Tb"):
                    for kl in _IDX:
                        x, y = gen(z + ij), gen(t + kl)
                        out.append((f"cross-{z}-{t}", x * y - y * x))
    return out


def conjugate_relations() -> list[tuple[str, NCPoly]]:
    """Hermitian conjugates of gg, pg and ggb written as matrix equations.

    Unlike the entrywise dagger these need no inverse formula, so they stay
    valid when the determinants are not set to one.
    """
    out = []
    for name, shape, a, b in (("gg+dagger", "pp", Gb, Gb), ("pg+dagger", "wgb", P, Gb),
                              ("ggb+dagger", "gbg", Gb, G)):
        out += [(name, x) for x in expand_entries(matrix_relation(shape, a, b))]
    return out


def build_defining_relations(with_t: bool = False, with_unimodularity: bool = True,
                             with_dagger_closure: bool = True, dagger_mode: str | None = None) -> RelationSet:
    """Relations of the algebra, each read as ``= 0``.

    ``dagger_mode`` is "entrywise" (apply the dagger table, which inverts
    Gamma and Gamma-bar by the unimodular formulas) or "matrix" (use
    :func:`conjugate_relations`); the default picks "matrix" exactly when
    unimodularity is excluded.
    """
    if dagger_mode is None:
        dagger_mode = "entrywise" if with_unimodularity else "matrix"
    if dagger_mode not in ("entrywise", "matrix"):
        raise ValueError(f"unknown dagger mode {dagger_mode!r}")
    pairs = base_relations(with_t)
    if with_dagger_closure:
        if dagger_mode == "entrywise":
            pairs += [(f"{name}+dagger", x.dagger()) for name, x in pairs]
        else:
            pairs += conjugate_relations()
            if with_t:
                pairs += [(f"{name}+dagger", x.dagger()) for name, x in base_relations(True)
                          if name.startswith(("tt", "ttb", "tbtb", "cross"))]
    if with_unimodularity:
        pairs += unimodularity_relations(with_t)
    seen = set()
    rels, labels = [], []
    for name, x in pairs:
        if x.is_zero():
            continue
        k = _canonical_key(x)
        if k in seen:
            continue
        seen.add(k)
        rels.append(x)
        labels.append(name)
    sectors = {"P", "G", "Gb"} | ({"T", "Tb"} if with_t else set())
    name = "defining" + ("+T" if with_t else "") + ("+unimod" if with_unimodularity else "") \
        + ("+dagger" if with_dagger_closure else "")
    return RelationSet(name, rels, labels, frozenset(sectors), with_unimodularity, with_dagger_closure)


# derived operators ----------------------------------------------------

def define_W(a: Scalar | None = None, beta: Scalar | None = None) -> OpMatrix:
    """W = a (beta Gb^-1 P G - P), Gb^-1 from the unimodular inverse formula."""
    a = param("a") if a is None else a
    beta = param("beta") if beta is None else beta
    gbi = inverse_formula(Gb, "Gb")
    return (gbi * P * G).scale(a * beta) - P.scale(a)


def define_omega() -> OpMatrix:
    return G * inverse_formula(Gb, "Gb")


def define_omega_and_K(k3: str = "P22") -> dict:
    w = define_W()
    om = define_omega()
    return {
        "W": w,
        "Omega": om,
        "K1": q_trace(P),
        "K2": q_trace(w),
        "K3": gen(k3),
        "K4": q_bracket(G, Gb),
        "K5": trace(om),
    }


def define_casimirs() -> dict:
    w = define_W()
    a = param("a")
    q2 = param("q") ** 2
    pt = adjugate_P(P)
    wt = adjugate_W(w, P)
    return {
        "C1": -q_bracket(P, P),
        "C2a": (q_bracket(P, w) + q_bracket(w, P).scale(q2)).scale(a),
        "C2b": q_trace(P * wt).scale(a),
        "C2c": -q_bracket(w, w - P.scale(a * (q2 - 1))),
        "Ptilde": pt,
        "Wtilde": wt,
    }


def define_transformed(which: str, rels: RelationSet | None = None) -> OpMatrix:
    """SL_q(2,C) images: P' = Tb P T^-1, G' = T G T^-1, Gb' = Tb Gb Tb^-1, W' = Tb W T^-1."""
    if rels is not None and "T" not in rels.sectors:
        raise SectorAbsent("the T-sector is not part of this relation set")
    ti = inverse_formula(T, "T")
    tbi = inverse_formula(Tb, "T")
    if which == "P":
        return Tb * P * ti
    if which == "G":
        return T * G * ti
    if which == "Gb":
        return Tb * Gb * tbi
    if which == "W":
        return Tb * define_W() * ti
    raise ValueError(f"unknown operator {which!r}")


def derived_table() -> dict:
    """Generator-level sugar: W11..W22 and O11..O22 expand into base generators."""
    w = define_W()
    om = define_omega()
    table = {}
    for i, ij in enumerate(_IDX):
        table[f"W{ij}"] = w[i // 2, i % 2]
        table[f"O{ij}"] = om[i // 2, i % 2]
    return table
