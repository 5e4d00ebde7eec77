import pytest

from qpoincare.ncpoly import NCPoly, commutator, gen
from qpoincare.presentation import define_omega_and_K, derived_table
from qpoincare.scalars import I, ONE, param
from qpoincare.suite import ParseError, parse_expression

q = param("q")


def test_unimodularity_polynomial():
    expect = gen("G11") * gen("G22") - (gen("G21") * gen("G12")).scale(q ** 2) - NCPoly.const(1)
    assert parse_expression("G11*G22 - q^2*G21*G12 - 1") == expect


def test_dagger_postfix():
    assert parse_expression("(P12)†") == gen("P21")
    assert parse_expression("(i*P11*G12)†") == (gen("G12").dagger() * gen("P11")).scale(-I)


def test_commutator_sugar():
    k4 = define_omega_and_K()["K4"]
    assert parse_expression("[K4, P12]") == commutator(k4, gen("P12"))


def test_derived_sugar():
    assert parse_expression("W12") == derived_table()["W12"]
    assert parse_expression("O11") == define_omega_and_K()["Omega"][0, 0]


def test_parameters_and_rationals():
    x = parse_expression("-3/4*λ*P11 + ħ*lambda*beta^2*P22/(q-1)")
    lam, hbar, beta = param("lambda"), param("hbar"), param("beta")
    assert x == (gen("P11").scale(-lam * 3 / 4) + gen("P22").scale(hbar * lam * beta ** 2 / (q - 1)))
    assert parse_expression("q^-2*P11") == gen("P11").scale(ONE / q ** 2)
    assert parse_expression("P11^2") == gen("P11") * gen("P11")


@pytest.mark.parametrize("text,pos", [
    ("P11 +* P12", 5),
    ("Foo1*P11", 0),
    ("P11^-1", 3),
    ("(P11 + P12", 10),
    ("P11 / P12", 4),
    ("[P11 P12]", 5),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse_expression(text)
    assert e.value.position == pos
    assert "^" in str(e.value)
