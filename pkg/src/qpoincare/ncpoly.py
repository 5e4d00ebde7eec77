"""Free associative *-algebra over the scalar field.

A word is a tuple of generator names; an :class:`NCPoly` is a sparse map
from words to nonzero :class:`~qpoincare.scalars.Scalar` coefficients.
The dagger is conjugate-linear and anti-multiplicative, driven by the
per-generator images registered in :data:`ALPHABET`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .scalars import ONE, ZERO, Scalar, as_scalar, param

Word = tuple

__all__ = [
    "Generator",
    "NCPoly",
    "Word",
    "ALPHABET",
    "gen",
    "generators",
    "commutator",
    "register_generator",
]


@dataclass
class Generator:
    name: str
    sector: str
    precedence: int
    # filled lazily, images may reference other generators
    dagger_image: Callable[[], "NCPoly"] | None = field(default=None, repr=False)


ALPHABET: dict[str, Generator] = {}
_DAGGER_CACHE: dict[str, "NCPoly"] = {}


def register_generator(name: str, sector: str, precedence: int, dagger_image=None) -> Generator:
    g = Generator(name, sector, precedence, dagger_image)
    ALPHABET[name] = g
    _DAGGER_CACHE.pop(name, None)
    return g


def _dagger_gen(name: str) -> "NCPoly":
    img = _DAGGER_CACHE.get(name)
    if img is None:
        g = ALPHABET.get(name)
        if g is None or g.dagger_image is None:
            raise KeyError(f"generator {name!r} has no dagger image")
        img = g.dagger_image()
        _DAGGER_CACHE[name] = img
    return img


class NCPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Scalar] | None = None, *, _clean=False):
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # construction -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "NCPoly":
        c = as_scalar(c)
        return cls({(): c}, _clean=True) if c else cls()

    @classmethod
    def word(cls, w: Iterable[str], c=ONE) -> "NCPoly":
        return cls({tuple(w): as_scalar(c)})

    # basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def coeff(self, w) -> Scalar:
        return self.terms.get(tuple(w), ZERO)

    def support(self) -> set:
        return set(self.terms)

    def letters(self) -> set:
        return {g for w in self.terms for g in w}

    def constant_term(self) -> Scalar:
        return self.terms.get((), ZERO)

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.const(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for w, c in other.terms.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
        return NCPoly(out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NCPoly":
        c = as_scalar(c)
        if c.is_zero():
            return NCPoly()
        if c.is_one():
            return self
        return NCPoly({w: v * c for w, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
        return NCPoly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = NCPoly.const(ONE)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            other = NCPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # maps -------------------------------------------------------------

    def dagger(self, complex_params=()) -> "NCPoly":
        """Hermitian conjugation: conjugate-linear and order-reversing."""
        out = NCPoly()
        for w, c in self.terms.items():
            img = NCPoly.const(c.conj(complex_params))
            for g in reversed(w):
                img = img * _dagger_gen(g)
            out = out + img
        return out

    def substitute(self, table: Mapping[str, "NCPoly"]) -> "NCPoly":
        """Homomorphic image: each listed generator is replaced by its image."""
        out: dict = {}
        cache: dict = {}
        for w, c in self.terms.items():
            img = NCPoly.const(c)
            for g in w:
                rep = table.get(g)
                if rep is None:
                    rep = cache.get(g)
                    if rep is None:
                        rep = cache[g] = NCPoly.word((g,))
                img = img * rep
            for w2, c2 in img.terms.items():
                prev = out.get(w2)
                out[w2] = c2 if prev is None else prev + c2
        return NCPoly(out)

    def subs_params(self, bindings) -> "NCPoly":
        if not bindings:
            return self
        return NCPoly({w: c.subs(bindings) for w, c in self.terms.items()})

    def map_coeffs(self, f: Callable[[Scalar], Scalar]) -> "NCPoly":
        return NCPoly({w: f(c) for w, c in self.terms.items()})

    def project(self, keep: Callable[[Word], bool]) -> "NCPoly":
        return NCPoly({w: c for w, c in self.terms.items() if keep(w)}, _clean=True)

    # display ----------------------------------------------------------

    def sorted_terms(self, key=None):
        key = key or (lambda w: (len(w), w))
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(w)
            cs = str(c)
            if not mono:
                body = cs
            elif c.is_one():
                body = mono
            elif (-c).is_one():
                body = "-" + mono
            else:
                if " " in cs or "/" in cs:
                    cs = f"({cs})"
                body = f"{cs}*{mono}"
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    __repr__ = __str__


def gen(name: str) -> NCPoly:
    if name not in ALPHABET:
        raise KeyError(f"unknown generator {name!r}")
    return NCPoly({(name,): ONE}, _clean=True)


def generators(sector: str) -> list[str]:
    return [g.name for g in ALPHABET.values() if g.sector == sector]


def commutator(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y - y * x


# standard alphabet ----------------------------------------------------

_IDX = ("11", "12", "21", "22")


def _g(prefix, ij):
    return gen(prefix + ij)


def _inv_gb(ij):
    # Gb^{-1} with det_q(Gb) = 1
    q2 = param("q") ** 2
    iq2 = ONE / q2
    return {
        "11": _g("Gb", "22"),
        "12": _g("Gb", "12").scale(-iq2),
        "21": _g("Gb", "21").scale(-iq2),
        "22": (_g("Gb", "11") + _g("Gb", "22").scale(q2 - 1)).scale(iq2),
    }[ij]


def _inv_g(ij):
    # G^{-1} with det_{1/q}(G^T) = 1
    q2 = param("q") ** 2
    return {
        "11": _g("G", "22").scale(q2) - _g("G", "11").scale(q2 - 1),
        "12": _g("G", "12").scale(-q2),
        "21": _g("G", "21").scale(-q2),
        "22": _g("G", "11"),
    }[ij]


def _inv_t(prefix, ij):
    # T^{-1} with det_{1/sqrt q}(T) = 1
    q = param("q")
    return {
        "11": _g(prefix, "22"),
        "12": _g(prefix, "12").scale(-ONE / q),
        "21": _g(prefix, "21").scale(-q),
        "22": _g(prefix, "11"),
    }[ij]


def _t(ij):
    return ij[::-1]


def _install_standard_alphabet():
    base = 0
    # P < G < Gb < T < Tb; within a matrix 22 < 21 < 12 < 11 unless noted
    for k, ij in enumerate(_IDX):
        register_generator(f"P{ij}", "P", base + 3 - k, lambda ij=ij: gen(f"P{_t(ij)}"))
    base += 4
    # Gamma runs the other way round: 11 < 12 < 21 < 22 (confluent choice)
    for k, ij in enumerate(_IDX):
        register_generator(f"G{ij}", "G", base + k, lambda ij=ij: _inv_gb(_t(ij)))
    base += 4
    for k, ij in enumerate(_IDX):
        register_generator(f"Gb{ij}", "Gb", base + 3 - k, lambda ij=ij: _inv_g(_t(ij)))
    base += 4
    for k, ij in enumerate(_IDX):
        register_generator(f"T{ij}", "T", base + 3 - k, lambda ij=ij: _inv_t("Tb", _t(ij)))
    base += 4
    for k, ij in enumerate(_IDX):
        register_generator(f"Tb{ij}", "Tb", base + 3 - k, lambda ij=ij: _inv_t("T", _t(ij)))
    base += 4
    # canonical-limit generators: J and its adjoint Jd = J^dagger
    for k, ij in enumerate(_IDX):
        register_generator(f"J{ij}", "J", base + 3 - k, lambda ij=ij: gen(f"Jd{_t(ij)}"))
    base += 4
    for k, ij in enumerate(_IDX):
        register_generator(f"Jd{ij}", "Jd", base + 3 - k, lambda ij=ij: gen(f"J{_t(ij)}"))
    base += 4
    # Lorentz components: P0..P3 and Jc{mu}{nu} = J_{mu nu} (mu < nu), all hermitian
    for mu in range(4):
        register_generator(f"P{mu}", "Pc", base + mu, lambda mu=mu: gen(f"P{mu}"))
    base += 4
    for k, (mu, nu) in enumerate([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]):
        register_generator(f"Jc{mu}{nu}", "Jc", base + k, lambda mu=mu, nu=nu: gen(f"Jc{mu}{nu}"))


_install_standard_alphabet()
