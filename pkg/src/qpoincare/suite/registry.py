"""Check specs, run configuration, per-run context and reports."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

from ..engine import CapExceeded, Caps, MonomialOrder, OrientationError, RewriteSystem, orient
from ..ncpoly import ALPHABET, NCPoly
from ..presentation import RelationSet, build_defining_relations
from ..scalars import ScalarError
from ..tensorcalc import OpMatrix

__all__ = [
    "RelationConfig",
    "CheckSpec",
    "Outcome",
    "CheckReport",
    "RunConfig",
    "Context",
    "UnknownCheck",
    "sample_bindings",
    "order_from_sectors",
    "run_spec",
]


@dataclass(frozen=True)
class RelationConfig:
    with_t: bool = False
    with_unimodularity: bool = True
    dagger_mode: str | None = None

    def to_dict(self):
        return {"withT": self.with_t, "withUnimodularity": self.with_unimodularity,
                "daggerMode": self.dagger_mode or ("entrywise" if self.with_unimodularity else "matrix")}


DEFINING = RelationConfig()
NO_UNIMOD = RelationConfig(with_unimodularity=False)
WITH_T = RelationConfig(with_t=True)


@dataclass
class Outcome:
    """What a check body found.  ``holds`` is whether the claim was confirmed."""

    holds: bool
    witness: object = None
    details: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CheckSpec:
    name: str
    anchor: str  # the claim being checked, in words
    body: Callable[["Context"], Outcome]
    relations: RelationConfig = DEFINING
    modes: tuple = ("exact", "sampled")
    expected: str = "pass"  # or "expected-nonzero-witness"
    caps: Caps = Caps()
    default: bool = True
    group: str = ""

    @property
    def mode(self) -> str:
        return "sampled" if "sampled" in self.modes else "exact"


@dataclass
class CheckReport:
    name: str
    status: str  # pass | fail | inconclusive
    mode: str
    bindings: list
    caps_used: dict
    wall_millis: int
    witness: object = None
    certificate_ref: list | None = None
    details: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "name": self.name,
            "status": self.status,
            "mode": self.mode,
            "bindings": self.bindings,
            "capsUsed": self.caps_used,
        }
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.certificate_ref:
            out["certificateRef"] = self.certificate_ref
        if self.details:
            out["details"] = _jsonable(self.details)
        out["wallMillis"] = self.wall_millis if timing else 0
        return out


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


class UnknownCheck(KeyError):
    pass


def order_from_sectors(perm: str) -> MonomialOrder:
    """Monomial order with the sectors in the given order (smallest first).

    Sectors not listed keep their default relative position after the
    listed ones; inside a sector the default precedence is kept.
    """
    sectors = [s.strip() for s in perm.replace("<", ",").split(",") if s.strip()]
    known = {g.sector for g in ALPHABET.values()}
    for s in sectors:
        if s not in known:
            raise ValueError(f"unknown sector {s!r}")
    rest = sorted(known - set(sectors), key=lambda s: min(g.precedence for g in ALPHABET.values()
                                                            if g.sector == s))
    rank, k = {}, 0
    for s in sectors + rest:
        for g in sorted((g for g in ALPHABET.values() if g.sector == s), key=lambda g: g.precedence):
            rank[g.name] = k
            k += 1
    return MonomialOrder(rank)


@dataclass
class RunConfig:
    mode: str = "exact"
    samples: int = 3
    seed: int = 0
    caps: Caps | None = None
    precedence: str | None = None
    with_t: bool = False
    # optional edit of every relation set before orientation (mutation tests)
    relation_hook: Callable[[RelationSet], RelationSet] | None = None

    def __post_init__(self):
        if self.mode not in ("exact", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.samples < 1:
            raise ValueError("samples must be positive")


def sample_bindings(rng: random.Random) -> dict:
    """Random rational q (a square, so q**(1/2) stays rational), away from 0 and +-1, and a."""
    while True:
        s = Fraction(rng.randint(2, 9), rng.randint(1, 9)) * rng.choice((1, -1))
        if abs(s) != 1:
            break
    a = Fraction(rng.randint(1, 19), rng.randint(1, 9)) * rng.choice((1, -1))
    return {"q": s * s, "a": a}


class Context:
    """Per-check, per-binding access to rewrite systems and parameter specialisation."""

    def __init__(self, spec: CheckSpec, run: RunConfig, bindings: dict | None):
        self.spec = spec
        self.run = run
        self.bindings = bindings or {}
        self.exact = not self.bindings
        self._systems: dict = {}
        self.caps = run.caps or spec.caps

    @property
    def order(self) -> MonomialOrder:
        return order_from_sectors(self.run.precedence) if self.run.precedence else MonomialOrder()

    def relation_set(self, cfg: RelationConfig | None = None) -> RelationSet:
        cfg = cfg or self.spec.relations
        if self.run.with_t and not cfg.with_t:
            cfg = replace(cfg, with_t=True)
        rs = build_defining_relations(with_t=cfg.with_t, with_unimodularity=cfg.with_unimodularity,
                                      dagger_mode=cfg.dagger_mode)
        if self.run.relation_hook is not None:
            rs = self.run.relation_hook(rs)
        return rs

    def system(self, cfg: RelationConfig | None = None) -> RewriteSystem:
        cfg = cfg or self.spec.relations
        s = self._systems.get(cfg)
        if s is None:
            s = orient(self.relation_set(cfg).relations, self.order, self.caps)
            if self.bindings:
                s = s.with_bindings(self.bindings)
            self._systems[cfg] = s
        return s

    def bind(self, x):
        """Specialise parameters in an NCPoly or OpMatrix (identity in exact mode)."""
        if not self.bindings:
            return x
        return x.subs_params(self.bindings)

    def reduce(self, x: NCPoly, cfg: RelationConfig | None = None) -> NCPoly:
        return self.system(cfg).reduce(self.bind(x))

    def nf_matrix(self, m: OpMatrix, cfg: RelationConfig | None = None) -> OpMatrix:
        """Entrywise normal form; congruent to ``m``, and cheaper to multiply out."""
        return m.map(lambda x: self.reduce(x, cfg))

    def is_zero(self, x: NCPoly, cfg: RelationConfig | None = None) -> bool:
        return self.reduce(x, cfg).is_zero()

    def first_nonzero(self, polys, cfg: RelationConfig | None = None, labels=None):
        """First (label, residue) that does not reduce to zero, or None."""
        for k, x in enumerate(polys):
            r = self.reduce(x, cfg)
            if not r.is_zero():
                return (labels[k] if labels else k, r)
        return None

    def matrix_residue(self, m: OpMatrix, label: str, cfg: RelationConfig | None = None):
        n, k = m.shape
        for i in range(n):
            for j in range(k):
                r = self.reduce(m[i, j], cfg)
                if not r.is_zero():
                    return {"relation": label, "entry": f"({i + 1},{j + 1})", "residue": str(r)}
        return None


def _caps_record(caps: Caps, note: str | None = None) -> dict:
    out = {"maxDegree": caps.max_degree, "maxSteps": caps.max_steps}
    if note:
        out["exhausted"] = note
    return out


def run_spec(spec: CheckSpec, run: RunConfig) -> CheckReport:
    """Run one check in the configured mode and fold the outcome into a report."""
    mode = run.mode if run.mode in spec.modes else "exact"
    if mode == "sampled":
        rng = random.Random(f"{run.seed}:{spec.name}")
        binding_list = [sample_bindings(rng) for _ in range(run.samples)]
    else:
        binding_list = [None]
    caps = run.caps or spec.caps
    start = time.perf_counter()
    status, witness, details, certs, note = "pass", None, {}, {}, None
    used = []
    for b in binding_list:
        ctx = Context(spec, run, b)
        try:
            out = spec.body(ctx)
        except CapExceeded as e:
            status, note = "inconclusive", str(e)
            witness = {"cap": str(e), "bindings": _show(b)}
            used.append(_show(b))
            break
        except (OrientationError, ScalarError) as e:
            if b is not None:
                # a degenerate sample: record it and try the next one
                details.setdefault("skippedBindings", []).append({"bindings": _show(b), "reason": str(e)})
                continue
            raise
        used.append(_show(b))
        details.update(out.details)
        certs.update(out.certificates)
        if not out.holds:
            status = "fail"
            witness = out.witness if out.witness is not None else {"note": "claim not confirmed"}
            if b is not None:
                witness = {"bindings": _show(b), "witness": witness}
            break
        if out.witness is not None and witness is None:
            witness = out.witness
    if mode == "sampled" and not [u for u in used if u]:
        status = "inconclusive"
        witness = {"note": "every sampled binding degenerated"}
    elapsed = int((time.perf_counter() - start) * 1000)
    if spec.expected == "pass" and status == "pass":
        witness = None
    return CheckReport(
        name=spec.name,
        status=status,
        mode=mode,
        bindings=[u for u in used if u],
        caps_used=_caps_record(caps, note),
        wall_millis=elapsed,
        witness=witness,
        certificate_ref=sorted(f"{spec.name}/{k}" for k in certs) or None,
        details=details,
        certificates={f"{spec.name}/{k}": v for k, v in certs.items()},
    )


def _show(b):
    if not b:
        return {}
    return {k: str(v) for k, v in sorted(b.items())}
