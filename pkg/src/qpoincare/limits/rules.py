"""Ordered-swap rule sets for the two limits.

A rule set fixes a canonical letter order.  Whenever two adjacent letters
``x y`` are out of order the word is rewritten as ``y x`` plus a correction
that sits ``shift`` orders higher in the series variable.  For the classical
limit the correction is ``i*hbar*{x, y}`` (shift 1 in hbar); for the
canonical limit it is the exact commutator, which has lower degree (shift 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..ncpoly import ALPHABET, NCPoly, Word, register_generator
from ..scalars import I, ONE
from ..tensorcalc import OpMatrix, classical_r_matrix, lift, matrix_of, permutation
from .series import TruncatedSeries

__all__ = [
    "LimitRuleSet",
    "BracketError",
    "commutative_sort",
    "bracket_table",
    "classical_rules",
    "install_classical_w",
    "CLASSICAL_NEEDS",
]

_IDX = ("11", "12", "21", "22")


class BracketError(ValueError):
    pass


def install_classical_w():
    """Letters Wc11..Wc22 for the classical w entries (hermitian as a matrix)."""
    if "Wc11" in ALPHABET:
        return
    base = max(g.precedence for g in ALPHABET.values()) + 1
    for k, ij in enumerate(_IDX):
        register_generator(f"Wc{ij}", "Wc", base + 3 - k,
                           lambda ij=ij: NCPoly.word((f"Wc{ij[::-1]}",)))


install_classical_w()


def commutative_sort(x: NCPoly, rank: Mapping[str, int]) -> NCPoly:
    """Image in the commutative polynomial ring: letters of every word sorted."""
    out = NCPoly()
    for w, c in x.terms.items():
        out = out + NCPoly.word(tuple(sorted(w, key=rank.__getitem__)), c)
    return out


@dataclass
class LimitRuleSet:
    var: str
    rank: dict
    corrections: dict = field(default_factory=dict)  # (x, y) with x > y -> NCPoly
    shift: int = 1
    name: str = ""

    def is_sorted(self, w: Word) -> bool:
        return all(self.rank[a] <= self.rank[b] for a, b in zip(w, w[1:]))

    def correction(self, x: str, y: str) -> NCPoly:
        c = self.corrections.get((x, y))
        if c is None:
            raise BracketError(f"no rule for the pair {x}, {y}")
        return c

    def reorder(self, s: TruncatedSeries) -> TruncatedSeries:
        """Sort every word, pushing swap corrections ``shift`` orders up."""
        order = s.order
        memo: dict = {}
        out = [NCPoly() for _ in range(order + 1)]
        for k, c in enumerate(s.coeffs):
            budget = order - k
            for w, coeff in c.terms.items():
                for off, p in self._word(w, budget, memo).items():
                    out[k + off] = out[k + off] + p.scale(coeff)
        return TruncatedSeries(s.var, order, out)

    def reorder_poly(self, x: NCPoly, budget: int = 0) -> dict:
        memo: dict = {}
        acc: dict = {}
        for w, coeff in x.terms.items():
            for off, p in self._word(w, budget, memo).items():
                acc[off] = acc.get(off, NCPoly()) + p.scale(coeff)
        return {k: v for k, v in acc.items() if not v.is_zero()}

    def _word(self, w: Word, budget: int, memo: dict) -> dict:
        key = (w, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        i = next((i for i in range(len(w) - 1) if self.rank[w[i]] > self.rank[w[i + 1]]), None)
        if i is None:
            res = {0: NCPoly.word(w)}
        else:
            x, y = w[i], w[i + 1]
            res = dict(self._word(w[:i] + (y, x) + w[i + 2:], budget, memo))
            if self.shift <= budget:
                corr = NCPoly.word(w[:i]) * self.correction(x, y) * NCPoly.word(w[i + 2:])
                for u, c in corr.terms.items():
                    for off, p in self._word(u, budget - self.shift, memo).items():
                        k = off + self.shift
                        res[k] = res.get(k, NCPoly()) + p.scale(c)
        memo[key] = res
        return res


# classical brackets -------------------------------------------------------

def _r_and_dagger(mutate_sign: bool = False):
    r = classical_r_matrix()
    if mutate_sign:
        r = r.scale(-ONE)
    return r, r.dagger()


def bracket_table(x_prefix: str, y_prefix: str, formula: OpMatrix, rank) -> dict:
    """Read off ``{x_ij, y_kl}`` from a 4x4 bracket matrix ``{X1, Y2}``.

    Entry ((i,k),(j,l)) of the matrix is ``{x_ij, y_kl}``; the result maps
    ordered letter pairs to commutative polynomials.
    """
    out = {}
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    xa = f"{x_prefix}{i + 1}{j + 1}"
                    yb = f"{y_prefix}{k + 1}{l + 1}"
                    val = commutative_sort(formula[2 * i + k, 2 * j + l], rank)
                    for pair, v in (((xa, yb), val), ((yb, xa), -val)):
                        prev = out.get(pair)
                        if prev is not None and prev != v:
                            raise BracketError(f"bracket {{{pair[0]}, {pair[1]}}} is not antisymmetric")
                        out[pair] = v
    return out


def _bracket_formulas(mutate_sign: bool = False, with_w_extra: bool = True) -> dict:
    """The classical brackets, as 4x4 matrices of (noncommutative) polynomials.

    Keys are (X, Y) prefix pairs meaning {X1, Y2}.  Sector letters: P, G
    (gamma), Gb (gamma bar), Wc (w), T, Tb.
    """
    r, rd = _r_and_dagger(mutate_sign)
    m = {k: matrix_of(k) for k in ("P", "G", "Gb", "Wc", "T", "Tb")}

    def one(k):
        return lift(m[k], 1)

    def two(k):
        return lift(m[k], 2)

    # shape A: r X1 Y2 + X1 Y2 r^+ - Y2 r^+ X1 - X1 r Y2
    def shape_a(x, y):
        return r * one(x) * two(y) + one(x) * two(y) * rd - two(y) * rd * one(x) - one(x) * r * two(y)

    # shape B: r^+ X1 Y2 + X1 Y2 r - Y2 r X1 - X1 r^+ Y2   (gamma-gamma)
    def shape_b(x, y):
        return rd * one(x) * two(y) + one(x) * two(y) * r - two(y) * r * one(x) - one(x) * rd * two(y)

    # shape C: r^+ X1 Y2 + X1 Y2 r - Y2 r^+ X1 - X1 r^+ Y2  (p-gamma, w-gamma)
    def shape_c(x, y):
        return rd * one(x) * two(y) + one(x) * two(y) * r - two(y) * rd * one(x) - one(x) * rd * two(y)

    # shape D: r X1 Y2 + X1 Y2 r - Y2 r X1 - X1 r Y2  (gamma-gammabar)
    def shape_d(x, y):
        return r * one(x) * two(y) + one(x) * two(y) * r - two(y) * r * one(x) - one(x) * r * two(y)

    # shape E: r X1 Y2 + X1 Y2 r - Y2 r^+ X1 - X1 r Y2  (w-gammabar)
    def shape_e(x, y):
        return r * one(x) * two(y) + one(x) * two(y) * r - two(y) * rd * one(x) - one(x) * r * two(y)

    def commutator_with_r(x, y):
        prod = one(x) * two(y)
        return r * prod - prod * r

    ww = shape_a("Wc", "Wc")
    if with_w_extra:
        extra = permutation() * (one("Wc") * two("P") - two("Wc") * one("P"))
        ww = ww - extra.scale(I)
    return {
        ("P", "P"): shape_a("P", "P"),
        ("G", "G"): shape_b("G", "G"),
        ("G", "Gb"): shape_d("G", "Gb"),
        ("P", "G"): shape_c("P", "G"),
        ("Wc", "G"): shape_c("Wc", "G"),
        ("Wc", "Gb"): shape_e("Wc", "Gb"),
        ("Wc", "P"): shape_a("Wc", "P"),
        ("Wc", "Wc"): ww,
        ("T", "T"): commutator_with_r("T", "T"),
        ("T", "Tb"): commutator_with_r("T", "Tb"),
        ("Tb", "Tb"): commutator_with_r("Tb", "Tb"),
    }


# which bracket families each classical check needs
CLASSICAL_NEEDS = {
    "pp": [("P", "P")],
    "gg": [("G", "G")],
    "ggb": [("G", "Gb")],
    "pg": [("P", "G")],
    "wg": [("Wc", "G")],
    "wgb": [("Wc", "Gb")],
    "wp": [("Wc", "P")],
    "ww": [("Wc", "Wc"), ("Wc", "P")],
    "tt": [("T", "T")],
    "ttb": [("T", "Tb")],
    "tbtb": [("Tb", "Tb")],
}


def classical_rules(families, mutate_sign: bool = False, with_w_extra: bool = True,
                    rank: Mapping[str, int] | None = None) -> LimitRuleSet:
    """Swap rules ``x y -> y x + i hbar {x, y}`` built from the listed bracket families."""
    rank = dict(rank or {g.name: g.precedence for g in ALPHABET.values()})
    formulas = _bracket_formulas(mutate_sign, with_w_extra)
    corrections = {}
    for fam in families:
        table = bracket_table(fam[0], fam[1], formulas[fam], rank)
        for (x, y), v in table.items():
            if rank[x] > rank[y]:
                corrections[(x, y)] = v.scale(I)
    # entries of the same sector with no listed family commute classically at O(hbar)
    return LimitRuleSet("hbar", rank, corrections, shift=1, name="+".join("-".join(f) for f in families))

