"""Exact coefficient field for the deformed algebra.

Elements are rational functions in the commuting real parameters q, hbar,
lambda, a, beta with Gaussian-rational coefficients.  Half-integer powers of
q are represented through the auxiliary parameter ``s`` with ``q = s**2``;
internally every polynomial lives in Q[s, hbar, lam, a, beta] and the field
element is stored as ``(re + i*im) / den`` with ``den`` real and monic.

Polynomial arithmetic and GCDs are delegated to FLINT (python-flint).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import flint

__all__ = [
    "GaussRational",
    "Scalar",
    "ScalarError",
    "PARAMS",
    "param",
    "ZERO",
    "ONE",
    "I",
    "as_scalar",
]

# internal variable names; "q" is sugar for s**2, "betac"/"ac" are the
# conjugates used only when a or beta are declared complex
_VARS = ("s", "hbar", "lam", "a", "beta", "ac", "betac")
_CTX = flint.fmpq_mpoly_ctx.get(_VARS, "deglex")
_GENS = dict(zip(_VARS, _CTX.gens()))
_NVARS = len(_VARS)

PARAMS = ("q", "hbar", "lambda", "a", "beta")
_ALIASES = {
    "q": "q",
    "s": "s",
    "hbar": "hbar",
    "ħ": "hbar",
    "lambda": "lam",
    "lam": "lam",
    "λ": "lam",
    "a": "a",
    "beta": "beta",
    "β": "beta",
}
_DISPLAY = {"s": "s", "hbar": "hbar", "lam": "lambda", "a": "a", "beta": "beta",
            "ac": "conj(a)", "betac": "conj(beta)"}

_P0 = _CTX.from_dict({})
_P1 = _CTX.from_dict({(0,) * _NVARS: 1})


class ScalarError(ArithmeticError):
    """Division by zero or an inadmissible parameter binding."""


@dataclass(frozen=True)
class GaussRational:
    """Exact complex rational ``re + i*im``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(Fraction(x))

    def __add__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussRational.coerce(other))

    def __rsub__(self, other):
        return GaussRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussRational.coerce(other)
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussRational.coerce(other)
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return self * GaussRational(o.re / n, -o.im / n)

    def __pow__(self, k: int):
        if k < 0:
            return GaussRational(1) / self ** (-k)
        out, base = GaussRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re} + {self.im}*i)"


def _q(x) -> flint.fmpq:
    x = Fraction(x)
    return flint.fmpq(x.numerator, x.denominator)


def _poly_const(c) -> flint.fmpq_mpoly:
    return _CTX.from_dict({(0,) * _NVARS: _q(c)}) if c else _P0


class Scalar:
    """Element of Q(i)(s, hbar, lambda, a, beta), kept in canonical form.

    Canonical form: ``den`` is monic under the deglex order of the
    underlying polynomial ring and ``gcd(re, im, den) == 1``.  Two scalars
    are equal iff their canonical triples coincide.
    """

    __slots__ = ("re", "im", "den", "_hash")

    def __init__(self, re=_P0, im=_P0, den=_P1, *, _canonical=False):
        if not _canonical:
            re, im, den = _normalize(re, im, den)
        self.re = re
        self.im = im
        self.den = den
        self._hash = None

    # construction -----------------------------------------------------

    @classmethod
    def const(cls, c) -> "Scalar":
        if isinstance(c, Scalar):
            return c
        if isinstance(c, (GaussRational, complex)):
            g = GaussRational.coerce(c)
            return cls(_poly_const(g.re), _poly_const(g.im), _P1, _canonical=True)
        return cls(_poly_const(c), _P0, _P1, _canonical=True)

    @classmethod
    def from_polys(cls, re, im=None, den=None) -> "Scalar":
        return cls(re, _P0 if im is None else im, _P1 if den is None else den)

    # predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_one(self) -> bool:
        return self.re.is_one() and self.im.is_zero() and self.den.is_one()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_constant(self) -> bool:
        return self.re.is_constant() and self.im.is_constant() and self.den.is_constant()

    def __bool__(self):
        return not self.is_zero()

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = as_scalar(other)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        d1, d2 = self.den, o.den
        if d1 == d2:
            if d1.is_one():
                return Scalar(self.re + o.re, self.im + o.im, _P1, _canonical=True)
            return Scalar(self.re + o.re, self.im + o.im, d1)
        g = d1.gcd(d2)
        f1, f2 = d2 / g, d1 / g
        return Scalar(self.re * f1 + o.re * f2, self.im * f1 + o.im * f2, d1 * f1)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        o = as_scalar(other)
        if self.is_zero() or o.is_zero():
            return ZERO
        if o.is_one():
            return self
        if self.is_one():
            return o
        if self.im.is_zero() and o.im.is_zero():
            re, im = self.re * o.re, _P0
        else:
            re = self.re * o.re - self.im * o.im
            im = self.re * o.im + self.im * o.re
        den = self.den * o.den
        if den.is_one():
            return Scalar(re, im, _P1, _canonical=True)
        return Scalar(re, im, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_scalar(other)
        if o.is_zero():
            raise ScalarError("division by the zero scalar")
        return self * o.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ScalarError("division by the zero scalar")
        if self.im.is_zero():
            return Scalar(self.den, _P0, self.re)
        norm = self.re * self.re + self.im * self.im
        return Scalar(self.re * self.den, -self.im * self.den, norm)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("only integer powers of scalars are supported")
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, complex_params=()) -> "Scalar":
        """Complex conjugation; parameters are real unless listed."""
        re, im, den = self.re, -self.im, self.den
        if complex_params:
            re, im, den = (_swap_conj(p, complex_params) for p in (re, im, den))
        return Scalar(re, im, den, _canonical=not complex_params)

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction, Rational, GaussRational, complex)):
                other = Scalar.const(other)
            else:
                return NotImplemented
        return self.den == other.den and self.re == other.re and self.im == other.im

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.re), str(self.im), str(self.den)))
        return self._hash

    # evaluation -------------------------------------------------------

    def subs(self, bindings) -> "Scalar":
        """Bind parameters to Gaussian rationals; unbound ones stay symbolic."""
        b = _normalize_bindings(bindings)
        if not b:
            return self
        nr, ni = _eval_poly(self.re, b)
        mr, mi = _eval_poly(self.im, b)
        dr, di = _eval_poly(self.den, b)
        if dr.is_zero() and di.is_zero():
            raise ScalarError(
                f"denominator {_poly_text(self.den)} vanishes under bindings "
                f"{ {k: str(v) for k, v in bindings.items()} }")
        num = Scalar(nr - mi, ni + mr, _P1)
        return num / Scalar(dr, di, _P1)

    def to_gauss(self) -> GaussRational:
        if not self.is_constant():
            raise ScalarError(f"scalar {self} is not a constant")
        d = Fraction(str(self.den.leading_coefficient()))

        def c(p):
            return Fraction(str(p.leading_coefficient())) if not p.is_zero() else Fraction(0)

        return GaussRational(c(self.re) / d, c(self.im) / d)

    def s_laurent(self) -> dict:
        """Split into ``{n: c_n}`` with ``self = sum c_n s**n`` and c_n free of s.

        Only defined when the denominator is a pure power of s.
        """
        dterms = list(self.den.terms())
        if len(dterms) != 1 or any(e for e in dterms[0][0][1:]):
            raise ScalarError(f"{self} is not a Laurent polynomial in s")
        shift = dterms[0][0][0]
        out: dict = {}
        for part, unit in ((self.re, _P1), (self.im, None)):
            for exps, coeff in part.terms():
                mono = _CTX.from_dict({(0,) + tuple(exps[1:]): coeff})
                c = Scalar(mono, _P0, _P1, _canonical=True) if unit is not None \
                    else Scalar(_P0, mono, _P1, _canonical=True)
                n = int(exps[0]) - int(shift)
                out[n] = out[n] + c if n in out else c
        return {n: c for n, c in out.items() if not c.is_zero()}

    def degree_in(self, name: str) -> int:
        """Degree of the numerator in one parameter (q counts as s/2)."""
        idx = _VARS.index(_ALIASES.get(name, name) if name != "q" else "s")
        degs = [p.degrees()[idx] for p in (self.re, self.im) if not p.is_zero()]
        return max(degs) if degs else 0

    # display ----------------------------------------------------------

    def __str__(self):
        if self.im.is_zero():
            num = _poly_text(self.re)
        elif self.re.is_zero():
            im = _poly_text(self.im)
            num = "i" if im == "1" else "-i" if im == "-1" else _wrap(im) + "*i"
        else:
            num = f"{_wrap(_poly_text(self.re))} + {_wrap(_poly_text(self.im))}*i"
        if self.den.is_one():
            return num
        return f"{_wrap(num)}/{_wrap(_poly_text(self.den))}"

    def __repr__(self):
        return f"Scalar({self})"


def _normalize(re, im, den):
    if den.is_zero():
        raise ScalarError("zero denominator")
    if re.is_zero() and im.is_zero():
        return _P0, _P0, _P1
    if den.is_constant():
        c = den.leading_coefficient()
        if c != 1:
            inv = 1 / c
            re, im = re * inv, im * inv
        return re, im, _P1
    g = den.gcd(re)
    if not im.is_zero() and not g.is_one():
        g = g.gcd(im)
    if not g.is_one():
        re, den = re / g, den / g
        if not im.is_zero():
            im = im / g
    c = den.leading_coefficient()
    if c != 1:
        inv = 1 / c
        re, im, den = re * inv, im * inv, den * inv
    return re, im, den


def _swap_conj(p, complex_params):
    swaps = {"a": "ac", "beta": "betac"}
    images = list(_CTX.gens())
    for name in complex_params:
        n = _ALIASES.get(name, name)
        if n not in swaps:
            raise ValueError(f"parameter {name!r} cannot be declared complex")
        i, j = _VARS.index(n), _VARS.index(swaps[n])
        images[i], images[j] = images[j], images[i]
    return p.compose(*images)


def _normalize_bindings(bindings):
    out = {}
    for k, v in bindings.items():
        name = _ALIASES.get(k, k)
        if name not in _VARS and name != "q":
            raise ValueError(f"unknown parameter {k!r}")
        out[name] = GaussRational.coerce(v)
    return out


def _sqrt_fraction(x: Fraction):
    if x < 0:
        return None
    from math import isqrt

    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def _eval_poly(p, b):
    """Evaluate polynomial ``p`` at bindings, returning (re, im) polynomials."""
    if p.is_zero():
        return _P0, _P0
    qv = b.get("q")
    sv = b.get("s")
    if qv is not None and sv is None and qv.im == 0:
        r = _sqrt_fraction(qv.re)
        if r is not None:
            sv = GaussRational(r)
    if all(v.im == 0 for v in b.values()) and (sv is not None or qv is None):
        # real bindings: let flint substitute (conjugates bind to the same value)
        sub = {n: _q(v.re) for n, v in b.items() if n in _VARS}
        if sv is not None:
            sub["s"] = _q(sv.re)
        for n in ("a", "beta"):
            if n in sub:
                sub[n + "c"] = sub[n]
        return p.subs(sub), _P0
    re_terms, im_terms = {}, {}
    for exps, coeff in p.terms():
        f = GaussRational(Fraction(str(coeff)))
        rest = list(exps)
        for i, name in enumerate(_VARS):
            e = exps[i]
            if not e:
                continue
            if name == "s":
                if sv is not None:
                    f = f * sv ** e
                    rest[i] = 0
                elif qv is not None:
                    if e % 2:
                        raise ScalarError(
                            f"binding q={qv} leaves the half-integer power s^{e}; "
                            "bind s instead or pick a square value of q")
                    f = f * qv ** (e // 2)
                    rest[i] = 0
            elif name in b:
                f = f * b[name] ** e
                rest[i] = 0
            elif name in ("ac", "betac") and name[:-1] in b:
                f = f * b[name[:-1]].conj() ** e
                rest[i] = 0
        key = tuple(rest)
        if f.re:
            re_terms[key] = re_terms.get(key, 0) + f.re
        if f.im:
            im_terms[key] = im_terms.get(key, 0) + f.im
    mk = lambda d: _CTX.from_dict({k: _q(v) for k, v in d.items() if v}) if d else _P0
    return mk(re_terms), mk(im_terms)


def _wrap(text: str) -> str:
    if text.startswith("(") and text.endswith(")") and text.count("(") == 1:
        return text
    body = text[1:] if text.startswith("-") else text
    if " + " in body or " - " in body or "/" in body:
        return f"({text})"
    return text


@lru_cache(maxsize=None)
def _monomial_text(exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if not e:
            continue
        name = _VARS[i]
        if name == "s" and e % 2 == 0:
            name, e = "q", e // 2
        else:
            name = _DISPLAY[name]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _poly_text(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for exps, coeff in p.terms():
        c = Fraction(str(coeff))
        mono = _monomial_text(tuple(exps))
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar.const(x)


def param(name: str) -> Scalar:
    """The parameter ``name`` as a scalar (``q`` is returned as ``s**2``)."""
    key = _ALIASES.get(name)
    if key is None:
        raise ValueError(f"unknown parameter {name!r}")
    if key == "q":
        return Scalar(_GENS["s"] ** 2, _P0, _P1, _canonical=True)
    return Scalar(_GENS[key], _P0, _P1, _canonical=True)


ZERO = Scalar(_P0, _P0, _P1, _canonical=True)
ONE = Scalar(_P1, _P0, _P1, _canonical=True)
I = Scalar(_P0, _P1, _P1, _canonical=True)
