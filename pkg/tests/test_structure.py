import itertools

import pytest

from diagpa.groups import FreeGroup, GenSet, cyclic_group, symmetric_group
from diagpa.structure import (InsufficientDepth, dim_pn, export_dot, graph_to_json, loop_count,
                              principal_graph)
from oracles import (alt_generic, count_alt_trivial, free_inv, free_mul, perm_inv, perm_mul)

Z2 = GenSet(cyclic_group(2), (0, 1), ("x", "y"))


def test_z2_principal_graph():
    g = principal_graph(Z2, 2)
    assert g.layers == [[0], [0, 1], [1]]
    assert g.edges == {((0, 0), (1, 0)): 1, ((0, 0), (1, 1)): 1,
                       ((1, 0), (2, 1)): 1, ((1, 1), (2, 1)): 1}
    doc = graph_to_json(g)
    assert doc["layers"] == [["0"], ["0", "1"], ["1"]]
    assert {(e["from"], e["to"], e["mult"]) for e in doc["edges"]} == {
        ("0@0", "0@1", 1), ("0@0", "1@1", 1), ("0@1", "1@2", 1), ("1@1", "1@2", 1)}


def test_identity_generator_gives_single_edge():
    gs = GenSet(cyclic_group(3), (0,), ("x",))
    g = principal_graph(gs, 3)
    assert g.layers[:2] == [[0], [0]]
    assert g.layers[2] == [] and g.layers[3] == []
    assert g.edges == {((0, 0), (1, 0)): 1}


def test_free_group_layers():
    f2 = FreeGroup(2)
    gs = GenSet(f2, ((1,), (2,)), ("a", "b"))
    g = principal_graph(gs, 3)
    images = [(1,), (2,)]
    balls = [{alt_generic(free_mul, free_inv, (), images, w)
              for w in itertools.product(range(2), repeat=n)} for n in range(4)]
    want = [len(balls[0])] + [len(balls[n] - (balls[n - 2] if n >= 2 else set()))
                              for n in range(1, 4)]
    assert [len(layer) for layer in g.layers] == want
    assert want[:2] == [1, 2]


def test_dims_examples():
    assert dim_pn(Z2, 0) == 1
    assert dim_pn(Z2, 1) == 2
    assert dim_pn(Z2, 2) == 8


@pytest.mark.parametrize("m,imgs", [(2, (0, 1)), (3, (1,)), (4, (0, 1)), (5, (1, 2, 4))])
def test_dims_match_brute_force_cyclic(m, imgs):
    gs = GenSet(cyclic_group(m), imgs)
    add = lambda a, b: (a + b) % m  # noqa: E731
    neg = lambda a: (-a) % m  # noqa: E731
    for n in range(4):
        assert dim_pn(gs, n) == count_alt_trivial(add, neg, 0, list(imgs), n)


def test_dims_match_brute_force_s3_and_free():
    s3 = symmetric_group(3)
    gs = GenSet(s3, (s3.parse("021"), s3.parse("120")))
    perms = [(0, 2, 1), (1, 2, 0)]
    for n in range(4):
        assert dim_pn(gs, n) == count_alt_trivial(perm_mul, perm_inv, (0, 1, 2), perms, n)
    f2 = GenSet(FreeGroup(2), ((1,), (2,)))
    for n in range(4):
        assert dim_pn(f2, n) == count_alt_trivial(free_mul, free_inv, (), [(1,), (2,)], n)


def test_loop_count_examples():
    g = principal_graph(Z2, 2)
    assert loop_count(g, 0) == 1
    assert loop_count(g, 1) == 2
    assert loop_count(g, 2) == 8
    with pytest.raises(InsufficientDepth):
        loop_count(g, 3)


@pytest.mark.parametrize("gs", [
    GenSet(cyclic_group(3), (1,)),
    GenSet(cyclic_group(4), (0, 1)),
    GenSet(symmetric_group(3), (1, 2)),
    GenSet(symmetric_group(3), (1, 1, 3)),
])
def test_loops_equal_dimension(gs):
    g = principal_graph(gs, 4)
    for n in range(5):
        assert loop_count(g, n) == dim_pn(gs, n)


def test_literal_parity_breaks_loop_count():
    gs = GenSet(cyclic_group(3), (1,))
    lit = principal_graph(gs, 4, convention="literal")
    assert any(loop_count(lit, n) != dim_pn(gs, n) for n in range(5))


def test_dot_export():
    text = export_dot(principal_graph(Z2, 2))
    assert text.startswith("graph principal {")
    assert text.count("rank=same") == 3
    assert text.count(" -- ") == 4
    assert '[label="1"]' in text
    single = export_dot(principal_graph(Z2, 0))
    assert single.count("[label=") == 1 and " -- " not in single


def test_bad_arguments():
    with pytest.raises(ValueError):
        principal_graph(Z2, -1)
    with pytest.raises(ValueError):
        principal_graph(Z2, 2, convention="other")
    with pytest.raises(ValueError):
        dim_pn(Z2, -1)
