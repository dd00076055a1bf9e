import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagpa.groups import (FiniteGroup, FreeGroup, GenSet, alt, ball, check_group,
                           cyclic_group, dihedral_group, reduce_word, symmetric_group,
                           word_invert, word_multiply)
from oracles import alt_generic, alt_mod, free_inv, free_mul, perm_inv, perm_mul


@pytest.fixture
def z2_family():
    return GenSet(cyclic_group(2), (0, 1), ("x", "y"))


def test_alt_examples(z2_family):
    assert alt(z2_family, ()) == 0
    for i in range(2):
        assert alt(z2_family, (i, i)) == 0
    x, y = 0, 1
    # -0 + 1 - 1 + 0 mod 2
    assert alt(z2_family, (x, y, y, x)) == 0
    assert alt(z2_family, (x, y)) == 1


def test_check_group_examples():
    z3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    assert check_group(z3).ok
    broken = [z3[1], z3[0], z3[2]]
    rep = check_group(broken, identity=0)
    assert not rep.ok and rep.violation.startswith("identity")
    assert check_group([list(r) for r in symmetric_group(3).table]).ok


def test_check_group_rejects_nonassociative():
    # a Latin square with identity 0 that is not associative (order 5 loop)
    t = [[0, 1, 2, 3, 4],
         [1, 0, 3, 4, 2],
         [2, 4, 0, 1, 3],
         [3, 2, 4, 0, 1],
         [4, 3, 1, 2, 0]]
    rep = check_group(t)
    assert not rep.ok and rep.violation.startswith("associativity")
    with pytest.raises(ValueError):
        FiniteGroup(t)


def test_symmetric_group_matches_permutation_composition():
    s3 = symmetric_group(3)
    perms = list(itertools.permutations(range(3)))
    for a, p in enumerate(perms):
        for b, q in enumerate(perms):
            assert perms[s3.mul(a, b)] == perm_mul(p, q)
        assert perms[s3.inv(a)] == perm_inv(p)
    assert s3.name(s3.parse("120")) == "120"


def test_dihedral_group_is_a_group():
    d4 = dihedral_group(4)
    assert d4.order == 8
    assert check_group([list(r) for r in d4.table]).ok
    assert any(d4.mul(a, b) != d4.mul(b, a) for a in d4.elements for b in d4.elements)


def test_ball_examples(z2_family):
    assert ball(z2_family, 0) == {0}
    assert ball(z2_family, 1) == {0, 1}
    z3 = GenSet(cyclic_group(3), (1,), ("a",))
    assert ball(z3, 1) == {2}
    # only word is (a, a): -1 + 1
    assert ball(z3, 2) == {0}


def test_identity_generator_keeps_balls_trivial():
    gs = GenSet(cyclic_group(3), (0,), ("x",))
    assert all(ball(gs, n) == {0} for n in range(5))


def test_free_words():
    assert reduce_word((1, -1)) == ()
    assert word_multiply((1, 2), (-2, 3)) == (1, 3)
    assert word_invert((1, 2)) == (-2, -1)
    f2 = FreeGroup(2)
    w = f2.parse("a^-1.b")
    assert w == (-1, 2)
    assert f2.name(w) == "a^-1.b"
    assert f2.parse("e") == ()
    with pytest.raises(ValueError):
        f2.parse("c")


def test_genset_validation():
    with pytest.raises(ValueError):
        GenSet(cyclic_group(2), ())
    with pytest.raises(ValueError):
        GenSet(cyclic_group(2), (0, 5))
    with pytest.raises(ValueError):
        GenSet(cyclic_group(2), (0, 1), ("x", "x"))
    assert GenSet(cyclic_group(4), (1,)).generates()
    assert not GenSet(cyclic_group(4), (2,)).generates()


words = st.lists(st.integers(0, 2), max_size=10).map(tuple)


@given(st.integers(2, 7), st.lists(st.integers(0, 6), min_size=3, max_size=3), words, words)
def test_alt_matches_modular_sum(m, imgs, u, v):
    imgs = [g % m for g in imgs]
    gs = GenSet(cyclic_group(m), tuple(imgs))
    assert alt(gs, u) == alt_mod(m, imgs, u)
    # concatenation splits when the first part has even length
    if len(u) % 2 == 0:
        assert alt(gs, u + v) == (alt(gs, u) + alt(gs, v)) % m


@given(words, words)
def test_alt_split_in_s3(u, v):
    s3 = symmetric_group(3)
    gs = GenSet(s3, (s3.parse("021"), s3.parse("120"), s3.parse("201")))
    perms = list(itertools.permutations(range(3)))
    images = [perms[g] for g in gs.images]
    assert perms[alt(gs, u)] == alt_generic(perm_mul, perm_inv, (0, 1, 2), images, u)
    if len(u) % 2 == 0:
        assert alt(gs, u + v) == s3.mul(alt(gs, u), alt(gs, v))


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(tuple),
       st.lists(st.sampled_from([1, -1, 2, -2]), max_size=12).map(tuple))
def test_free_group_laws(u, v):
    f2 = FreeGroup(2)
    a, b = reduce_word(u), reduce_word(v)
    assert f2.mul(a, b) == free_mul(a, b)
    assert f2.mul(a, f2.inv(a)) == ()
    assert f2.inv(a) == free_inv(a)
    assert f2.parse(f2.name(a)) == a
