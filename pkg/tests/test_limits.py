from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qpoincare.limits import (CANONICAL_RELATIONS, CLASSICAL_RELATIONS, TruncatedSeries,
                              canonical_limit_check, classical_limit_check, compare_R_vs_exp,
                              component_form_check, component_map, exp_matrix_truncated,
                              exp_oracle, expand_R_in_hbar, omega_limit_check,
                              pauli_lubanski_limit_check, r_vs_exp_check)
from qpoincare.limits.checks import gamma_series
from qpoincare.ncpoly import NCPoly, gen
from qpoincare.scalars import I, ONE, ZERO, Scalar, param
from qpoincare.tensorcalc import OpMatrix, classical_r_matrix, identity, matrix_of

lam, hbar = param("lambda"), param("hbar")
small = st.integers(-3, 3)


def zero2():
    return OpMatrix([[0, 0], [0, 0]])


@st.composite
def matrix_series(draw, order=4):
    coeffs = [zero2()]
    for _ in range(order):
        rows = [[Scalar.const(draw(small)) + Scalar.const(draw(small)) * lam for _ in range(2)]
                for _ in range(2)]
        coeffs.append(OpMatrix(rows))
    return TruncatedSeries("hbar", order, coeffs)


@settings(max_examples=20, deadline=None)
@given(matrix_series())
def test_exp_matches_oracle(m):
    e = exp_matrix_truncated(m)
    for k in range(m.order + 1):
        assert e[k] == exp_oracle(m, k)


def test_exp_with_noncommuting_entries():
    j = matrix_of("J").scale(I)
    m = TruncatedSeries("lambda", 3, [zero2(), j, matrix_of("Jd")])
    e = exp_matrix_truncated(m)
    assert all(e[k] == exp_oracle(m, k) for k in range(4))
    assert e[1] == j


@settings(max_examples=20, deadline=None)
@given(matrix_series(), matrix_series(), st.integers(1, 4))
def test_product_is_causal(x, y, k):
    # changing coefficients above k leaves coefficients up to k alone
    bumped = TruncatedSeries(x.var, x.order, x.coeffs[: k + 1] + [identity(2)] * (x.order - k))
    assert (x * y).coeffs[: k + 1] == (bumped * y).coeffs[: k + 1]


def test_truncation_order_is_kept():
    a = TruncatedSeries("hbar", 3, [NCPoly.const(1)])
    b = TruncatedSeries("hbar", 2, [NCPoly.const(1)])
    assert (a * b).order == 2 and (a + b).order == 2
    with pytest.raises(ValueError):
        a + TruncatedSeries("lambda", 3, [NCPoly.const(1)])
    with pytest.raises(ValueError):
        exp_matrix_truncated(TruncatedSeries("hbar", 2, [identity(2)]))


def test_r_series_low_orders():
    s = expand_R_in_hbar(3)
    r = classical_r_matrix()
    assert s[0] == identity(4)
    assert s[1] == r.scale(-I)
    assert s[2] == (r * r).scale(-ONE / 2)


def test_r_minus_exponential():
    d = compare_R_vs_exp(3)
    for k in range(3):
        assert d[k].is_zero()
    support = [(i, j) for i in range(4) for j in range(4) if not d[3][i, j].is_zero()]
    assert support == [(2, 1)]
    # by hand: x^3 coefficients 7/12 and 1/4 of the two entries, x = hbar*lambda
    assert d[3][2, 1] == lam ** 3 * Fraction(1, 3)
    assert r_vs_exp_check().passed


@pytest.mark.parametrize("name", sorted(CLASSICAL_RELATIONS))
def test_classical_limit(name):
    assert classical_limit_check(name).passed
    mutated = classical_limit_check(name, mutate_sign=True)
    assert not mutated.passed
    assert mutated.witness()["order"] <= 1


def test_ww_needs_extra_term():
    assert not classical_limit_check("ww", with_w_extra=False).passed


@pytest.mark.parametrize("name,first", [("pp", 1), ("gg", 3), ("ggb", 3), ("pg", 2)])
def test_canonical_limit(name, first):
    res = canonical_limit_check(name)
    assert res.passed
    assert res.orders == CANONICAL_RELATIONS[name][3]
    assert res.details["firstNonzeroOrder"] == first


def test_canonical_limit_fails_with_wrong_commutators():
    assert not canonical_limit_check("pg", hbar_commutators=2 * hbar).passed


def test_component_form():
    assert component_form_check().passed


def test_component_map_round_trip():
    cm = component_map()
    back = cm.reassemble_p()
    for mu in range(4):
        assert cm(back[f"P{mu}"]) == gen(f"P{mu}")


def test_gamma_series():
    g = gamma_series(2)
    assert g[0] == identity(2)
    assert g[1] == matrix_of("J").scale(I)
    # (exp(i lambda J))^dagger = exp(-i lambda J^dagger), order by order
    gd = gamma_series(2, dagger=True, inverse=True)
    assert all(g[k].dagger() == gd[k] for k in range(3))


def test_pauli_lubanski():
    res = pauli_lubanski_limit_check()
    assert res.passed
    assert res.details["betaFirstOrder"] == 3 * hbar
    assert res.details["leadingIsClosedForm"]
    assert not pauli_lubanski_limit_check(ZERO).passed


def test_omega_limit_trace_and_factor():
    res = omega_limit_check()
    assert res.details["traceMatches"]
    # the expansion gives twice the target matrix
    assert res.details["ratioToExpected"] == Scalar.const(2)
    assert not res.details["matrixMatches"]
