"""Diamond-lemma diagnostics: resolve every overlap ambiguity of a system."""

from __future__ import annotations

from dataclasses import dataclass

from ..ncpoly import NCPoly, Word
from .rewrite import CapExceeded, RewriteSystem


@dataclass
class Ambiguity:
    word: Word
    left_rule: Word
    right_rule: Word
    difference: NCPoly | None  # None when a cap was hit
    cap_exhausted: bool = False

    def to_dict(self):
        return {
            "word": "*".join(self.word),
            "leftRule": "*".join(self.left_rule),
            "rightRule": "*".join(self.right_rule),
            "difference": None if self.difference is None else str(self.difference),
            "capExhausted": self.cap_exhausted,
        }


def ambiguities(system: RewriteSystem, max_degree: int):
    """Yield (word, rule1, rule2, k) for overlaps and inclusions up to max_degree."""
    rules = list(system._by_lhs.values())
    for r1 in rules:
        a = r1.lhs
        for r2 in rules:
            b = r2.lhs
            # overlap: suffix of a equals prefix of b
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k] and len(a) + len(b) - k <= max_degree:
                    yield a + b[k:], r1, r2, len(a) - k
            # inclusion: b strictly inside a
            if r1 is not r2 and len(b) < len(a):
                for i in range(len(a) - len(b) + 1):
                    if a[i:i + len(b)] == b:
                        yield a, r1, r2, -1 - i


def overlap_report(system: RewriteSystem, max_degree: int = 3) -> list[Ambiguity]:
    """Ambiguities whose two one-step resolutions have different normal forms."""
    out = []
    for w, r1, r2, pos in ambiguities(system, max_degree):
        if pos >= 0:
            # w = r1.lhs + tail, r2 starts at position pos
            left = r1.rhs * NCPoly.word(w[len(r1.lhs):])
            right = NCPoly.word(w[:pos]) * r2.rhs * NCPoly.word(w[pos + len(r2.lhs):])
        else:
            i = -1 - pos
            left = r1.rhs
            right = NCPoly.word(w[:i]) * r2.rhs * NCPoly.word(w[i + len(r2.lhs):])
        try:
            d = system.reduce(left - right)
        except CapExceeded:
            out.append(Ambiguity(w, r1.lhs, r2.lhs, None, True))
            continue
        if not d.is_zero():
            out.append(Ambiguity(w, r1.lhs, r2.lhs, d))
    return out


def is_confluent(system: RewriteSystem, max_degree: int = 3) -> bool:
    return not overlap_report(system, max_degree)
