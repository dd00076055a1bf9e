import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagpa.corpus import random_tangle, tl_normalize
from diagpa.tangles import (TL, Cap, CapInc, Compose, DiscInc, JonesE, LCondExp, LeftInc, Mult,
                            RCondExp, Rot, TangleColorError, TanglePlanarityError,
                            TangleSyntaxError, adjoint, color_of, expand_derived,
                            identity_tangle, nodes, parse_tangle, to_sexp, unit_tangle,
                            validate)

DERIVED = (JonesE, RCondExp, LCondExp, Rot)


def test_parse_examples():
    assert parse_tangle("(jones 2)") == JonesE(2)
    assert parse_tangle("(compose (rcond 1) 0 (jones 1))") == Compose(RCondExp(1), 0, JonesE(1))
    assert parse_tangle("(tl 2 ((1 2) (3 4)) 0)") == TL(2, ((1, 2), (3, 4)), 0)
    assert parse_tangle("(tl 2 ((3 4) (2 1)))") == TL(2, ((1, 2), (3, 4)), 0)
    assert parse_tangle("(incl 2)") == CapInc(2, 2)
    assert parse_tangle("; a comment\n(discinc 3 1 2)") == DiscInc(3, 1, 2)


def test_color_examples():
    assert color_of(Mult(3)) == (3, [3, 3])
    assert color_of(Compose(RCondExp(2), 0, JonesE(2))) == (2, [])
    assert color_of(Compose(Mult(2), 1, Cap(3, 2))) == (2, [2, 3])
    assert color_of(LeftInc(1, 2)) == (3, [1])
    assert color_of(DiscInc(3, 1, 2)) == (3, [3, 2])


def test_crossing_pairing_is_rejected():
    rep = validate(TL(2, ((1, 3), (2, 4)), 0))
    assert not rep.ok and "crossing" in rep.errors[0]
    with pytest.raises(TanglePlanarityError):
        parse_tangle("(tl 2 ((1 3) (2 4)))")


@pytest.mark.parametrize("text", [
    "(jones)", "(jones 1", "(frob 2)", "(jones 1) x", "(cap 2 4)", "(leftinc 1 3)",
    "(discinc 1 1 1)", "(tl 2 ((1 2)))", "(jones a)", "(jones 1) )",
])
def test_syntax_errors(text):
    with pytest.raises(TangleSyntaxError):
        parse_tangle(text)


def test_color_errors_carry_position():
    with pytest.raises(TangleColorError) as exc:
        parse_tangle("(compose (mult 2)\n  0 (jones 2))")
    assert exc.value.position == (1, 1)
    with pytest.raises(TangleColorError):
        parse_tangle("(compose (rot 2) 1 (jones 1))")


def test_syntax_error_position():
    with pytest.raises(TangleSyntaxError) as exc:
        parse_tangle("(compose (jones 1)\n   0 (bogus 1))")
    assert exc.value.position == (2, 7)


def test_expand_derived_examples():
    assert expand_derived(RCondExp(2)) == Cap(3, 3)
    e = expand_derived(JonesE(2))
    assert e == TL(3, ((1, 6), (2, 3), (4, 5)), 0)
    r = expand_derived(Rot(2))
    assert not any(isinstance(x, DERIVED) for x in nodes(r))
    assert color_of(r) == (2, [2])


def test_unit_and_identity_tangles():
    assert unit_tangle(2) == TL(2, ((1, 4), (2, 3)), 0)
    assert color_of(identity_tangle(3)) == (3, [3])


def _random(seed, closed=False):
    rng = random.Random(seed)
    return random_tangle(rng, rng.randint(0, 3), depth=3, plug=0.6, max_color=3, closed=closed)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_print_parse_roundtrip(seed):
    t = _random(seed)
    assert parse_tangle(to_sexp(t)) == t
    assert validate(t).ok


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_expand_derived_is_idempotent_and_color_preserving(seed):
    t = _random(seed)
    e = expand_derived(t)
    assert expand_derived(e) == e
    assert color_of(e) == color_of(t)
    assert not any(isinstance(x, DERIVED) for x in nodes(e))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_adjoint_preserves_colors(seed):
    t = _random(seed)
    assert color_of(adjoint(t)) == color_of(t)
    assert validate(adjoint(t)).ok


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_tl_normal_form_of_closed_tangles(seed):
    t = _random(seed, closed=True)
    n = tl_normalize(t)
    assert isinstance(n, TL)
    assert color_of(n) == color_of(t)
    assert validate(n).ok
