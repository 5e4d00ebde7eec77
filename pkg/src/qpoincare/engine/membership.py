"""Ideal membership by linear algebra, independent of any rewriting.

A polynomial lies in the two-sided ideal (up to a degree bound) iff it is
a linear combination of the products ``u * rel * v``.  The search space is
split along every grading under which all relations are homogeneous.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from ..ncpoly import ALPHABET, NCPoly, Word
from ..scalars import Scalar
from .rewrite import MonomialOrder

__all__ = ["CertificateTerm", "MembershipVerdict", "ideal_membership", "verify_certificate",
           "homogeneous_gradings"]

MEMBER = "member"
NOT_MEMBER = "notMemberAtDegree"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CertificateTerm:
    left: Word
    relation: int
    right: Word
    coeff: Scalar

    def to_dict(self):
        return {"left": "*".join(self.left), "relation": self.relation,
                "right": "*".join(self.right), "coeff": str(self.coeff)}


@dataclass
class MembershipVerdict:
    status: str
    degree_used: int
    certificate: list[CertificateTerm] = field(default_factory=list)
    rows: int = 0
    note: str = ""

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def to_dict(self):
        return {"status": self.status, "degreeUsed": self.degree_used, "rows": self.rows,
                "certificate": [t.to_dict() for t in self.certificate], "note": self.note}


def _index_weight(g: str) -> int:
    tail = g[-2:]
    if len(g) >= 3 and tail.isdigit() and tail[0] in "12" and tail[1] in "12" \
            and ALPHABET[g].sector in ("P", "G", "Gb", "T", "Tb", "J", "Jd"):
        return int(tail[0]) - int(tail[1])
    return 0


_SECTORS = ("P", "G", "Gb", "T", "Tb", "J", "Jd", "Pc", "Jc")


def _sector_vec(g: str):
    v = [0] * len(_SECTORS)
    v[_SECTORS.index(ALPHABET[g].sector)] = 1
    return tuple(v)


GRADINGS: dict[str, Callable[[str], tuple]] = {
    "index-weight": lambda g: (_index_weight(g),),
    "sector-degree": _sector_vec,
}


def _grade(word: Word, gradings) -> tuple:
    out = []
    for f in gradings:
        acc = None
        for g in word:
            v = f(g)
            acc = v if acc is None else tuple(a + b for a, b in zip(acc, v))
        if acc is None:
            acc = tuple(0 for _ in f(next(iter(ALPHABET))))
        out.append(acc)
    return tuple(out)


def _sub(a, b):
    return tuple(tuple(x - y for x, y in zip(p, r)) for p, r in zip(a, b))


def _add(a, b):
    return tuple(tuple(x + y for x, y in zip(p, r)) for p, r in zip(a, b))


def homogeneous_gradings(relations: Sequence[NCPoly]) -> list[str]:
    names = []
    for name, f in GRADINGS.items():
        if all(len({_grade(w, [f]) for w in r.terms}) <= 1 for r in relations):
            names.append(name)
    return names


def _split_by_grade(x: NCPoly, gradings) -> dict:
    parts: dict = {}
    for w, c in x.terms.items():
        parts.setdefault(_grade(w, gradings), {})[w] = c
    return {g: NCPoly(t, _clean=True) for g, t in parts.items()}


def ideal_membership(x: NCPoly, relations: Sequence[NCPoly], degree: int,
                     order: MonomialOrder | None = None, max_rows: int = 200_000,
                     alphabet: Sequence[str] | None = None) -> MembershipVerdict:
    """Decide whether ``x`` is a combination of ``u*rel*v`` with total degree <= ``degree``."""
    if x.is_zero():
        return MembershipVerdict(MEMBER, 0)
    if degree < x.degree():
        raise ValueError("degree bound is below the degree of the input")
    order = order or MonomialOrder()
    rels = [r for r in relations]
    gradings = [GRADINGS[n] for n in homogeneous_gradings(rels)]
    letters = sorted(set(alphabet) if alphabet is not None else
                     ({g for r in rels for w in r.terms for g in w} | x.letters()),
                     key=lambda g: order.rank.get(g, 0))
    rel_grade = [_grade(next(iter(r.terms)), gradings) if r.terms else None for r in rels]
    rel_deg = [r.degree() for r in rels]
    max_pad = degree - min((d for d in rel_deg if d >= 0), default=0)

    # words of each length grouped by grade, for the u*v padding
    by_len: list[dict] = [{_grade((), gradings): [()]}]
    for n in range(1, max_pad + 1):
        layer: dict = {}
        for w in itertools.product(letters, repeat=n):
            layer.setdefault(_grade(w, gradings), []).append(w)
        by_len.append(layer)

    certificate: list[CertificateTerm] = []
    total_rows = 0
    for g, part in _split_by_grade(x, gradings).items():
        rows: list[tuple] = []
        for k, r in enumerate(rels):
            if not r.terms or rel_deg[k] > degree:
                continue
            need = _sub(g, rel_grade[k])
            for n in range(0, degree - rel_deg[k] + 1):
                for m in by_len[n].get(need, ()):
                    for cut in range(n + 1):
                        rows.append((m[:cut], k, m[cut:]))
        total_rows += len(rows)
        if total_rows > max_rows:
            return MembershipVerdict(INCONCLUSIVE, degree, rows=total_rows,
                                     note=f"row cap {max_rows} exceeded")
        combo = _solve(part, rows, rels, order)
        if combo is None:
            return MembershipVerdict(NOT_MEMBER, degree, rows=total_rows)
        for rid, c in combo.items():
            u, k, v = rows[rid]
            certificate.append(CertificateTerm(u, k, v, c))
    return MembershipVerdict(MEMBER, degree, certificate, rows=total_rows)


def _solve(target: NCPoly, rows, rels, order: MonomialOrder):
    """Row-echelon elimination with combination tracking."""
    key = order.key
    pivots: dict = {}  # word -> (poly terms, combo)

    def reduce(terms: dict, combo: dict):
        while terms:
            hits = [w for w in terms if w in pivots]
            if not hits:
                return terms, combo
            w = max(hits, key=key)
            c = terms[w]
            pt, pc = pivots[w]
            terms = _axpy(terms, pt, -c)
            combo = _axpy(combo, pc, -c)
        return terms, combo

    for rid, (u, k, v) in enumerate(rows):
        poly = NCPoly.word(u) * rels[k] * NCPoly.word(v)
        terms, combo = reduce(dict(poly.terms), {rid: Scalar.const(1)})
        if not terms:
            continue
        lw = max(terms, key=key)
        inv = terms[lw].inverse()
        terms = {w: c * inv for w, c in terms.items()}
        combo = {r: c * inv for r, c in combo.items()}
        pivots[lw] = (terms, combo)
    rest, combo = reduce(dict(target.terms), {})
    if rest:
        return None
    return {r: -c for r, c in combo.items()}


def _axpy(a: dict, b: dict, c: Scalar) -> dict:
    out = dict(a)
    for w, v in b.items():
        v = v * c
        prev = out.get(w)
        if prev is None:
            out[w] = v
        else:
            s = prev + v
            if s.is_zero():
                del out[w]
            else:
                out[w] = s
    return out


def verify_certificate(x: NCPoly, verdict: MembershipVerdict, relations: Sequence[NCPoly]) -> bool:
    """Re-expand the certificate in the free algebra and compare with ``x``."""
    acc = NCPoly()
    for t in verdict.certificate:
        acc = acc + (NCPoly.word(t.left) * relations[t.relation] * NCPoly.word(t.right)).scale(t.coeff)
    return acc == x
