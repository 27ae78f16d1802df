from fractions import Fraction

import pytest

from symfeec.combinatorics import generators
from symfeec.errors import UnsupportedDegree, WrongSpace, ZeroDegree
from symfeec.extension import (
    ext_full,
    ext_minus,
    extend,
    geometric_decomposition,
    relocated_face,
)
from symfeec.forms import Face, dlambda, equals, faces, monomial_form, reduce, trace, whitney
from symfeec.recursion import build_A_basis
from symfeec.spaces import SpaceSpec, basis_B, dimension, rank_dim
from symfeec.symmetry import check_invariance, pullback, verify_certificate

CASES = [
    SpaceSpec(fam, True, r, k, m)
    for fam in ("P", "Pminus")
    for m in (1, 2)
    for k in range(m + 1)
    for r in range(1, 4)
]


def test_trimmed_extension_examples():
    e = whitney(1, (0, 1))
    assert equals(ext_minus(Face(2, (0, 1)), e, 1).to_form(), whitney(2, (0, 1)))
    assert equals(ext_minus(Face(2, (1, 2)), e, 1).to_form(), whitney(2, (1, 2)))
    w = whitney(2, (0, 1, 2))
    assert ext_minus(Face(2, (0, 1, 2)), w, 1) is w


def test_full_extension_examples():
    cell = monomial_form(2, (1, 1, 0), (1,))
    assert ext_full(Face(2, (0, 1, 2)), cell, 2) is cell
    got = ext_full(Face(2, (0, 1)), monomial_form(1, (1, 1), (1,)), 2)
    half = Fraction(1, 2)
    expect = monomial_form(2, (1, 1, 0), (1,), half) - monomial_form(2, (1, 1, 0), (0,), half)
    assert equals(got, expect)
    # the extension from edge {0, 1} dies on the other two edges
    assert vanishes(trace(got, Face(2, (1, 2))))
    assert vanishes(trace(got, Face(2, (0, 2))))
    with pytest.raises(ZeroDegree):
        ext_full(Face(2, (0, 1)), dlambda(1, 1), 0)
    with pytest.raises(WrongSpace):
        ext_full(Face(3, (0, 1)), dlambda(2, 1), 1)


def vanishes(form):
    return reduce(form.to_form()).is_zero()


@pytest.mark.parametrize("local", CASES, ids=lambda s: s.label())
@pytest.mark.parametrize("n", [2, 3])
def test_trace_laws(local, n):
    if local.n > n:
        pytest.skip("face larger than simplex")
    spec = local.with_(n=n, ring=False)
    basis = basis_B(local)
    for f in faces(n, local.n):
        for w in basis:
            e = extend(spec, f, w)
            assert equals(trace(e, f), w.to_form())
            for g in faces(n):
                if not f.issubface(g):
                    assert vanishes(trace(e, g))


@pytest.mark.parametrize("local", CASES, ids=lambda s: s.label())
@pytest.mark.parametrize("n", [2, 3])
def test_extension_commutes_with_symmetries(local, n):
    if local.n > n:
        pytest.skip("face larger than simplex")
    spec = local.with_(n=n, ring=False)
    basis = basis_B(local)
    for f in faces(n, local.n):
        for pi in generators(n):
            g, mu = relocated_face(f, pi)
            for w in basis:
                lhs = pullback(extend(spec, g, w), pi).to_form()
                rhs = extend(spec, f, pullback(w, mu)).to_form()
                assert equals(lhs, rhs)


def test_relocated_face():
    pi = (1, 2, 0)
    g, mu = relocated_face(Face(2, (0, 1)), pi)
    assert g == Face(2, (0, 2))
    assert mu == (1, 0)


def test_decomposition_examples():
    plan = geometric_decomposition(SpaceSpec("Pminus", False, 1, 1, 2))
    assert [e[0].dim for e in plan.entries] == [1, 1, 1]
    assert plan.total_rank == 3
    plan = geometric_decomposition(SpaceSpec("P", False, 1, 0, 2))
    assert [e[0].dim for e in plan.entries] == [0, 0, 0]
    assert plan.total_rank == 3
    plan = geometric_decomposition(SpaceSpec("P", False, 2, 1, 2))
    assert {e[0].dim for e in plan.entries} == {1, 2}
    assert plan.total_rank == dimension(SpaceSpec("P", False, 2, 1, 2)) == 12
    assert plan.to_json()["faces"][0] == {"vertices": [0, 1], "count": 3}
    with pytest.raises(UnsupportedDegree):
        geometric_decomposition(SpaceSpec("P", False, 0, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_decomposition_dimension_count(n):
    for fam in ("P", "Pminus"):
        for k in range(n + 1):
            for r in range(1, 5):
                spec = SpaceSpec(fam, False, r, k, n)
                plan = geometric_decomposition(spec)
                local = sum(
                    len(faces(n, m)) * dimension(spec.with_(ring=True, n=m)) for m in range(k, n + 1)
                )
                union = plan.union()
                assert local == len(union) == dimension(spec)
                if len(union):
                    assert rank_dim(union) == (len(union), True)


@pytest.mark.parametrize("spec", [
    SpaceSpec("Pminus", False, 2, 1, 2),
    SpaceSpec("P", False, 1, 1, 3),
    SpaceSpec("Pminus", False, 3, 2, 3),
], ids=lambda s: s.label())
def test_union_of_invariant_face_bases_is_invariant(spec):
    def provider(m):
        return build_A_basis(spec.with_(ring=True, n=m), classify=False).basis

    union = geometric_decomposition(spec, provider).union()
    cert = check_invariance(union, "C")
    assert verify_certificate(union, cert)
