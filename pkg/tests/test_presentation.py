import json

import pytest

from qpoincare.engine import orient
from qpoincare.limits.rules import commutative_sort
from qpoincare.ncpoly import ALPHABET, NCPoly, gen
from qpoincare.presentation import (P, SectorAbsent, build_defining_relations, dedup,
                                    define_casimirs, define_omega_and_K, define_transformed,
                                    derived_table)
from qpoincare.scalars import param
from qpoincare.tensorcalc import q_bracket, q_trace

q = param("q")


def test_relation_counts():
    assert len(build_defining_relations().relations) == 81
    assert len(build_defining_relations(with_unimodularity=False).relations) == 76
    assert len(build_defining_relations(with_t=True).relations) == 225


def test_unimodularity_relation_present(defining):
    c3 = gen("G11") * gen("G22") - (gen("G21") * gen("G12")).scale(q ** 2) - NCPoly.const(1)
    assert any(dedup([r, c3]) == [r] for r in defining.relations)


def test_no_zero_or_duplicate_relations(defining):
    rels = defining.relations
    assert all(not r.is_zero() for r in rels)
    assert len(dedup(rels)) == len(rels)
    assert dedup(rels + [r.scale(q) for r in rels]) == dedup(rels)


def test_every_relation_reduces_to_zero(defining, system):
    assert all(system.reduce(r).is_zero() for r in defining.relations)


def test_relations_are_commutators_at_q_one(defining):
    rank = {n: i for i, n in enumerate(sorted(ALPHABET))}
    for r in defining.subs_params({"q": 1}).relations:
        if r.constant_term().is_zero():
            assert commutative_sort(r, rank).is_zero()


def test_cross_sector_commutativity():
    s = orient(build_defining_relations(with_t=True).relations)
    assert s.reduce(gen("T12") * gen("P21") - gen("P21") * gen("T12")).is_zero()
    assert s.reduce(gen("Gb11") * gen("Tb22") - gen("Tb22") * gen("Gb11")).is_zero()


def test_derived_operators():
    k = define_omega_and_K()
    assert k["K1"] == gen("P11") + gen("P22").scale(q ** 2)
    assert k["K3"] == gen("P22")
    assert k["K4"] == k["Omega"][0, 0]
    assert define_omega_and_K("P11")["K3"] == gen("P11")
    c = define_casimirs()
    assert c["C1"] == -q_bracket(P, P)
    assert set(derived_table()) == {f"{x}{ij}" for x in "WO" for ij in ("11", "12", "21", "22")}


def test_c2a_equals_trace_form(system):
    c = define_casimirs()
    k = define_omega_and_K()
    alt = q_trace(k["W"] * c["Ptilde"]).scale(param("a"))
    assert system.reduce(c["C2a"] - alt).is_zero()


def test_transformed_needs_t_sector(defining):
    with pytest.raises(SectorAbsent):
        define_transformed("P", defining)


def test_transformed_with_unit_t():
    unit = {f"{t}{ij}": NCPoly.const(1 if ij in ("11", "22") else 0)
            for t in ("T", "Tb") for ij in ("11", "12", "21", "22")}
    assert define_transformed("P").substitute(unit) == P


def test_w_hermitian_modulo_relations(system):
    w = define_omega_and_K()["W"]
    assert (w.dagger() - w).map(system.reduce).is_zero()


def test_json_round_trip(defining):
    doc = json.loads(defining.to_json())
    assert len(doc["relations"]) == len(defining.relations)
    assert defining.to_json() == build_defining_relations().to_json()
