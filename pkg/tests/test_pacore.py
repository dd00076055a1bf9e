import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagpa.cocycles import cyclic_cocycle, trivial_cocycle
from diagpa.evaluator import EvalContext
from diagpa.groups import GenSet, cyclic_group
from diagpa.pacore import (ColorMismatch, InvalidBasisElement, PAVector, basis_enumerate,
                           lambda_coeff, lambda_term, star, unit)
from diagpa.scalars import CycScalar, Phase
from oracles import alt_mod, lam_mod

X, Y = 0, 1
Z2 = GenSet(cyclic_group(2), (0, 1), ("x", "y"))
W2 = cyclic_cocycle(2, 1)


def test_lambda_examples():
    assert lambda_term(Z2, W2, (Y, X), (Y,), 1) == Phase(1, 2)
    assert lambda_coeff(Z2, trivial_cocycle(Z2.group), (Y, X), (Y, Y, X, Y)) == Phase()
    assert lambda_coeff(Z2, W2, (Y, X, X), ()) == Phase()
    # even position whose index maps to the identity
    assert lambda_term(Z2, W2, (Y, X), (Y, X), 2) == Phase()
    # matched non-crossing pairing
    assert lambda_coeff(Z2, W2, (Y,), (Y, X, X, Y)) == Phase()
    with pytest.raises(IndexError):
        lambda_term(Z2, W2, (Y,), (Y,), 2)


def test_vector_arithmetic():
    b = PAVector.basis((X, X))
    v = PAVector(1, {(X, X): 2, (Y, Y): CycScalar.zeta(3)})
    assert v + PAVector.zero(1) == v
    assert (v - v).is_zero()
    z = CycScalar.zeta(3)
    assert (b.scale(z) + b.scale(z * z) + b).is_zero()
    with pytest.raises(ColorMismatch):
        v + PAVector.zero(2)
    with pytest.raises(InvalidBasisElement):
        PAVector(1, {(X,): 1})


def test_star_examples():
    v = PAVector(2, {(X, Y, Y, X): 1, (Y, Y, X, X): CycScalar.zeta(5)})
    assert star(star(v)) == v
    pal = PAVector.basis((X, Y, Y, X))
    assert star(pal) == pal
    w = PAVector.basis((X, X, Y, Y), CycScalar.zeta(4))
    assert star(w) == PAVector.basis((Y, Y, X, X), CycScalar.zeta(4, 3))


def test_unit_examples():
    assert unit(Z2, 0) == PAVector(0, {(): 1})
    assert unit(Z2, 1) == PAVector(1, {(X, X): 1, (Y, Y): 1})
    assert len(unit(3, 2)) == 9


def test_basis_enumerate_examples():
    assert basis_enumerate(Z2, 0) == [()]
    assert sorted(basis_enumerate(Z2, 1)) == [(X, X), (Y, Y)]
    assert len(basis_enumerate(Z2, 2)) == 8


def test_validate_rejects_non_identity_words():
    with pytest.raises(InvalidBasisElement):
        PAVector.basis((X, Y)).validate(Z2)


@pytest.mark.parametrize("m,imgs", [(2, (0, 1)), (3, (0, 1, 2)), (4, (0, 1)), (5, (1, 3))])
def test_basis_enumerate_matches_brute_force(m, imgs):
    gs = GenSet(cyclic_group(m), imgs)
    for n in range(4):
        brute = sorted(w for w in itertools.product(range(len(imgs)), repeat=2 * n)
                       if alt_mod(m, imgs, w) == 0)
        assert sorted(basis_enumerate(gs, n)) == brute


CASES = [(2, 1, (0, 1)), (3, 1, (0, 1, 2)), (4, 1, (0, 1)), (4, 2, (0, 1)), (4, 3, (0, 1)),
         (5, 2, (1, 2)), (6, 5, (1, 4, 3))]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(CASES), st.data())
def test_lambda_matches_definition(case, data):
    m, q, imgs = case
    gs = GenSet(cyclic_group(m), imgs)
    w = cyclic_cocycle(m, q)
    word = st.lists(st.integers(0, len(imgs) - 1), max_size=8).map(tuple)
    j, i = data.draw(word), data.draw(word)
    expect = lam_mod(m, q, imgs, j, i)
    assert lambda_coeff(gs, w, j, i) == Phase(expect.numerator, expect.denominator)
    ctx = EvalContext(gs, w)
    assert ctx.lambda_phase(j, i) == lambda_coeff(gs, w, j, i)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CASES), st.data())
def test_lambda_is_product_of_terms(case, data):
    m, q, imgs = case
    gs = GenSet(cyclic_group(m), imgs)
    w = cyclic_cocycle(m, q)
    word = st.lists(st.integers(0, len(imgs) - 1), min_size=1, max_size=8).map(tuple)
    j, i = data.draw(word), data.draw(word)
    total = Phase()
    for s in range(1, len(i) + 1):
        total = total * lambda_term(gs, w, j, i, s)
    assert total == lambda_coeff(gs, w, j, i)
