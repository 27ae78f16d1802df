from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symfeec.errors import DegreeTooLow, DimensionMismatch, NotAFace, RangeMismatch
from symfeec.forms import (
    Face,
    Form,
    WhitneyForm,
    barycentric,
    constant,
    dlambda,
    equals,
    exterior_derivative as d,
    faces,
    homogenize,
    monomial_form,
    reduce,
    trace,
    wedge,
    whitney,
    whitney_monomial,
)
from symfeec.scalar import I

from conftest import forms
from oracle import evaluate, pointwise_equal


def lam(n, i):
    return barycentric(n, i)


def test_monomial_examples():
    one = monomial_form(2, (0, 0, 0), ())
    assert one.terms == {((0, 0, 0), ()): 1}
    assert monomial_form(2, (1, 0, 0), (1,)).terms == {((1, 0, 0), (1,)): 1}
    assert monomial_form(2, (0, 0, 0), (0, 1), I).terms == {((0, 0, 0), (0, 1)): I}
    with pytest.raises(RangeMismatch):
        monomial_form(2, (0, 0, 0), (3,))
    with pytest.raises(RangeMismatch):
        monomial_form(2, (0, 0), ())


def test_whitney_examples():
    phi = monomial_form(1, (1, 0), (1,)) - monomial_form(1, (0, 1), (0,))
    assert whitney(1, (0, 1)) == phi
    assert whitney(1, (1, 0)) == -phi
    assert not whitney(1, (0, 0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_whitney_matches_alternating_expansion(n):
    from symfeec.combinatorics import enum_alternators

    for k in range(n + 1):
        for rho in enum_alternators(0, k, 0, n):
            expect = Form(n, k)
            for pos, p in enumerate(rho):
                alpha = [0] * (n + 1)
                alpha[p] = 1
                rest = rho[:pos] + rho[pos + 1:]
                expect = expect + monomial_form(n, alpha, rest, (-1) ** pos)
            assert whitney(n, rho) == expect


def test_wedge_examples():
    assert wedge(dlambda(2, 0), dlambda(2, 1)) == dlambda(2, 0, 1)
    assert wedge(dlambda(2, 1), dlambda(2, 0)) == -dlambda(2, 0, 1)
    assert not wedge(dlambda(2, 1), dlambda(2, 1))
    with pytest.raises(DimensionMismatch):
        wedge(dlambda(2, 1), dlambda(3, 1))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.integers(0, n))), st.data())
def test_wedge_graded_commutativity(nkl, data):
    n, k, l = nkl
    a = data.draw(forms(n, k, max_deg=1))
    b = data.draw(forms(n, l, max_deg=1))
    assert equals(wedge(a, b), wedge(b, a).scale((-1) ** (k * l)))


def test_derivative_examples():
    assert d(lam(2, 0)) == dlambda(2, 0)
    # phi_01 = l0 dl1 - l1 dl0, so d phi_01 = dl0 dl1 - dl1 dl0 = 2 dl0 dl1
    assert d(whitney(2, (0, 1))) == dlambda(2, 0, 1).scale(2)
    assert not d(dlambda(2, 0, 1))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.data())
def test_d_squared_is_zero(nk, data):
    n, k = nk
    a = data.draw(forms(n, k, max_deg=3))
    assert reduce(d(d(a))).is_zero()


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.integers(0, n), st.integers(0, n))), st.data())
def test_leibniz_rule(nkl, data):
    n, k, l = nkl
    a = data.draw(forms(n, k))
    b = data.draw(forms(n, l))
    lhs = d(wedge(a, b))
    rhs = wedge(d(a), b) + wedge(a, d(b)).scale((-1) ** k)
    assert equals(lhs, rhs)


def test_reduce_examples():
    n = 3
    s = constant(n, -1)
    for i in range(n + 1):
        s = s + lam(n, i)
    assert reduce(s).is_zero()
    z = Form(n, 1)
    for i in range(n + 1):
        z = z + dlambda(n, i)
    assert reduce(z).is_zero()
    # lambda_0 dlambda_0 = (1 - l1)(-dl1) = -dl1 + l1 dl1
    got = reduce(monomial_form(1, (1, 0), (0,)))
    assert got.coefficients == {((0,), (1,)): -1, ((1,), (1,)): 1}


def test_equals_examples():
    assert equals(lam(1, 0) + lam(1, 1), constant(1))
    assert equals(dlambda(1, 0), -dlambda(1, 1))
    assert not equals(dlambda(2, 0), dlambda(2, 1))
    with pytest.raises(DimensionMismatch):
        equals(dlambda(2, 0), dlambda(3, 0))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.data())
def test_reduce_is_linear(nk, data):
    n, k = nk
    a = data.draw(forms(n, k))
    b = data.draw(forms(n, k))
    c = data.draw(st.fractions(-4, 4, max_denominator=5))
    lhs = reduce(a + b.scale(c))
    ra, rb = reduce(a).coefficients, reduce(b).coefficients
    expect = dict(ra)
    for key, v in rb.items():
        expect[key] = expect.get(key, 0) + v * c
    assert lhs.coefficients == {key: v for key, v in expect.items() if v}


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.data())
def test_equality_agrees_with_pointwise_values(nk, data):
    n, k = nk
    a = data.draw(forms(n, k))
    b = data.draw(forms(n, k))
    assert equals(a, b) == pointwise_equal(a, b)
    assert equals(a, homogenize(a, 3))
    assert pointwise_equal(a, homogenize(a, 3))


def test_homogenize_examples():
    assert homogenize(constant(1), 1) == lam(1, 0) + lam(1, 1)
    assert homogenize(dlambda(1, 1), 1) == monomial_form(1, (1, 0), (1,)) + monomial_form(1, (0, 1), (1,))
    assert homogenize(lam(1, 0), 2) == monomial_form(1, (2, 0), ()) + monomial_form(1, (1, 1), ())
    with pytest.raises(DegreeTooLow):
        homogenize(monomial_form(1, (2, 0), ()), 1)


def test_trace_examples():
    edge = Face(2, (0, 1))
    assert not trace(lam(2, 2), edge)
    assert trace(whitney(2, (0, 1)), edge) == whitney(1, (0, 1))
    assert not trace(dlambda(2, 2), edge)
    with pytest.raises(NotAFace):
        Face(2, (1, 0))
    with pytest.raises(NotAFace):
        trace(lam(2, 0), Face(3, (0, 1)))


def test_trace_of_whitney_representation():
    w = whitney_monomial(2, (1, 1, 0), (0, 1))
    t = trace(w, Face(2, (0, 1)))
    assert isinstance(t, WhitneyForm)
    assert t.to_form() == trace(w.to_form(), Face(2, (0, 1)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trace_commutes_with_d(n):
    from symfeec.combinatorics import enum_alternators, enum_multiindices

    for k in range(n):
        for deg in range(3):
            for alpha in enum_multiindices(deg, n):
                for sigma in enum_alternators(1, k, 0, n):
                    w = monomial_form(n, alpha, sigma)
                    for f in faces(n):
                        assert equals(trace(d(w), f), d(trace(w, f)))


def test_faces_enumeration():
    assert [f.inclusion for f in faces(2, 1)] == [(0, 1), (0, 2), (1, 2)]
    assert len(faces(3)) == 15
    assert Face(3, (0, 2)).issubface(Face(3, (0, 1, 2)))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))), st.data())
def test_json_round_trip(nk, data):
    n, k = nk
    a = data.draw(forms(n, k))
    assert Form.from_json(a.to_json()) == a


def test_pointwise_oracle_sanity():
    # dlambda_0 = -(dx_1 + dx_2) on the triangle
    assert evaluate(dlambda(2, 0), [Fraction(1, 3), Fraction(1, 5)]) == {(0,): -1, (1,): -1}
