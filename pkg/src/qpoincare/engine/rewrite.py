"""Orientation of relations and normal forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..ncpoly import ALPHABET, NCPoly, Word
from ..scalars import ONE, Scalar, ScalarError

__all__ = [
    "MonomialOrder",
    "RewriteRule",
    "RewriteSystem",
    "OrientationError",
    "CapExceeded",
    "Caps",
    "orient",
    "interreduce",
    "normal_form",
]


class OrientationError(ValueError):
    pass


class CapExceeded(RuntimeError):
    """A reduction ran past its step or degree cap."""

    def __init__(self, message, partial: NCPoly | None = None, steps: int = 0):
        super().__init__(message)
        self.partial = partial
        self.steps = steps


@dataclass(frozen=True)
class Caps:
    max_degree: int = 10
    max_steps: int = 1_000_000


class MonomialOrder:
    """Degree-graded lexicographic order driven by a generator precedence."""

    def __init__(self, precedence: Mapping[str, int] | Sequence[str] | None = None):
        if precedence is None:
            precedence = {g.name: g.precedence for g in ALPHABET.values()}
        elif not isinstance(precedence, Mapping):
            # a sequence lists generators from smallest to largest
            precedence = {g: k for k, g in enumerate(precedence)}
        self.rank = dict(precedence)
        self._keys: dict = {}

    def key(self, w: Word):
        k = self._keys.get(w)
        if k is None:
            try:
                k = (len(w), tuple(self.rank[g] for g in w))
            except KeyError as e:
                raise OrientationError(f"generator {e.args[0]} has no precedence") from None
            self._keys[w] = k
        return k

    def leading(self, x: NCPoly) -> Word:
        return max(x.terms, key=self.key)

    def sort_desc(self, words: Iterable[Word]) -> list:
        return sorted(words, key=self.key, reverse=True)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly
    source: int = -1

    def as_poly(self) -> NCPoly:
        return NCPoly.word(self.lhs) - self.rhs


def interreduce(relations: Sequence[NCPoly], order: MonomialOrder) -> list[NCPoly]:
    """Reduced row-echelon form of the span of ``relations``.

    Each output polynomial has leading coefficient one and its leading word
    occurs in no other output polynomial.
    """
    pivots: dict[Word, NCPoly] = {}
    for rel in relations:
        r = rel
        while True:
            hits = [w for w in r.terms if w in pivots]
            if not hits:
                break
            w = max(hits, key=order.key)
            r = r - pivots[w].scale(r.terms[w])
        if not r.terms:
            continue
        lw = order.leading(r)
        r = r.scale(r.terms[lw].inverse())
        for k, p in list(pivots.items()):
            c = p.terms.get(lw)
            if c is not None:
                pivots[k] = p - r.scale(c)
        pivots[lw] = r
    return [pivots[w] for w in sorted(pivots, key=order.key)]


class RewriteSystem:
    """Oriented rules plus a memo of word normal forms.

    Reduction normalises the suffix of a word first and then resolves the
    prefix letter against rules anchored at position 0, which is a fixed
    deterministic strategy; confluence is diagnosed separately.
    """

    def __init__(self, rules: Sequence[RewriteRule], order: MonomialOrder, caps: Caps = Caps(),
                 bindings: Mapping | None = None):
        self.rules = list(rules)
        self.order = order
        self.caps = caps
        self.bindings = dict(bindings or {})
        self._by_lhs: dict[Word, RewriteRule] = {}
        self._by_first: dict[str, list[RewriteRule]] = {}
        for r in self.rules:
            if r.lhs in self._by_lhs:
                continue
            self._by_lhs[r.lhs] = r
            self._by_first.setdefault(r.lhs[0], []).append(r)
        self._rhs_terms = {r.lhs: list(r.rhs.terms.items()) for r in self._by_lhs.values()}
        self._memo: dict[Word, dict] = {}
        self._steps = 0
        self._budget = caps.max_steps

    # -----------------------------------------------------------------

    def leading_words(self) -> list[Word]:
        return list(self._by_lhs)

    def is_normal_word(self, w: Word) -> bool:
        for i in range(len(w)):
            for r in self._by_first.get(w[i], ()):
                n = len(r.lhs)
                if w[i:i + n] == r.lhs:
                    return False
        return True

    def _prefix_rule(self, w: Word):
        for r in self._by_first.get(w[0], ()):
            if w[: len(r.lhs)] == r.lhs:
                return r
        return None

    def _nf_word(self, w: Word) -> dict:
        memo = self._memo
        got = memo.get(w)
        if got is not None:
            return got
        if len(w) <= 1:
            r = self._prefix_rule(w) if w else None
            if r is None:
                res = {w: ONE}
            else:
                self._tick()
                res = self._nf_terms(self._rhs_terms[r.lhs], ())
            memo[w] = res
            return res
        tail = self._nf_word(w[1:])
        x = w[:1]
        out: dict = {}
        for m, c in tail.items():
            xm = x + m
            part = memo.get(xm)
            if part is None:
                r = self._prefix_rule(xm)
                if r is None:
                    part = {xm: ONE}
                else:
                    self._tick()
                    part = self._nf_terms(self._rhs_terms[r.lhs], xm[len(r.lhs):])
                memo[xm] = part
            _accumulate(out, part, c)
        memo[w] = out
        return out

    def _nf_terms(self, terms, suffix: Word) -> dict:
        out: dict = {}
        for u, c in terms:
            _accumulate(out, self._nf_word(u + suffix), c)
        return out

    def _tick(self):
        self._steps += 1
        if self._steps > self._budget:
            raise CapExceeded(f"step cap {self.caps.max_steps} exhausted", steps=self._steps)

    def reduce(self, x: NCPoly) -> NCPoly:
        if x.degree() > self.caps.max_degree:
            raise CapExceeded(f"input degree {x.degree()} exceeds cap {self.caps.max_degree}",
                              partial=x)
        self._steps = 0
        out: dict = {}
        try:
            for w, c in x.terms.items():
                _accumulate(out, self._nf_word(w), c)
        except CapExceeded as e:
            e.partial = x
            raise
        return NCPoly(out)

    def with_bindings(self, bindings: Mapping) -> "RewriteSystem":
        """Specialise parameters in every rule (sampled verification)."""
        rules = []
        for r in self.rules:
            try:
                rhs = r.rhs.subs_params(bindings)
            except ScalarError as e:
                raise OrientationError(
                    f"rule {'*'.join(r.lhs)} degenerates under bindings {bindings}: {e}; "
                    "use exact mode or a different sample") from None
            rules.append(RewriteRule(r.lhs, rhs, r.source))
        return RewriteSystem(rules, self.order, self.caps, {**self.bindings, **bindings})

    def memo_size(self) -> int:
        return len(self._memo)


def _accumulate(out: dict, part: dict, c: Scalar):
    if c.is_one():
        for m, v in part.items():
            prev = out.get(m)
            if prev is None:
                out[m] = v
            else:
                s = prev + v
                if s.is_zero():
                    del out[m]
                else:
                    out[m] = s
        return
    for m, v in part.items():
        v = v * c
        prev = out.get(m)
        if prev is None:
            out[m] = v
        else:
            s = prev + v
            if s.is_zero():
                del out[m]
            else:
                out[m] = s


def orient(relations: Sequence[NCPoly], order: MonomialOrder | None = None, caps: Caps = Caps(),
           names: Sequence[str] | None = None) -> RewriteSystem:
    """Turn relations (each read as ``= 0``) into a rewrite system.

    The relations are interreduced first so every rule has a distinct
    left-hand side and leading coefficient one.
    """
    order = order or MonomialOrder()
    for k, rel in enumerate(relations):
        if rel.is_zero():
            continue
        lw = order.leading(rel)
        if rel.terms[lw].is_zero():
            label = names[k] if names else f"#{k}"
            raise OrientationError(f"relation {label} has a vanishing leading coefficient")
    reduced = interreduce([r for r in relations if not r.is_zero()], order)
    rules = []
    for k, rel in enumerate(reduced):
        lw = order.leading(rel)
        if not lw:
            raise OrientationError("relations generate the whole algebra (1 = 0)")
        rhs = NCPoly.word(lw) - rel
        rules.append(RewriteRule(lw, rhs, k))
    return RewriteSystem(rules, order, caps)


def normal_form(x: NCPoly, system: RewriteSystem) -> NCPoly:
    return system.reduce(x)
