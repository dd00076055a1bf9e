import json
import random

import pytest

from diagpa.cocycles import Cocycle3, cyclic_cocycle, trivial_cocycle
from diagpa.contexts import bundled_context, load_context, sign_cocycle_s3
from diagpa.formats import (FormatError, cocycle_from_json, cocycle_to_json, genset_from_json,
                            genset_to_json, group_from_json, group_to_json, load_json,
                            scalar_from_json, scalar_to_json, vector_from_json, vector_to_json)
from diagpa.groups import FreeGroup, cyclic_group, symmetric_group
from diagpa.scalars import CycScalar
from diagpa.suites import random_vector


def test_group_roundtrip():
    for g in (cyclic_group(4), symmetric_group(3), FreeGroup(2, ["u", "v"])):
        back = group_from_json(json.loads(json.dumps(group_to_json(g))))
        if isinstance(g, FreeGroup):
            assert back == g
        else:
            assert back.table == g.table and back.names == g.names


def test_group_errors():
    with pytest.raises(FormatError):
        group_from_json({"elements": ["0", "1"], "identity": "0"})
    with pytest.raises(FormatError):
        group_from_json({"elements": ["0", "1"], "identity": "0", "table": [["0", "1"], ["1", "1"]]})
    with pytest.raises(FormatError):
        group_from_json({"elements": ["0", "0"], "identity": "0", "table": [["0", "0"], ["0", "0"]]})


def test_genset_roundtrip():
    ctx = bundled_context("s3")
    doc = genset_to_json(ctx.genset)
    assert doc == {"indices": ["s", "t"], "images": ["021", "120"]}
    assert genset_from_json(doc, ctx.genset.group) == ctx.genset
    with pytest.raises(FormatError):
        genset_from_json({"indices": ["a"], "images": ["9"]}, cyclic_group(2))


def test_cocycle_roundtrip():
    w = cyclic_cocycle(4, 3)
    assert cocycle_to_json(w) == {"rule": "cyclic", "m": 4, "q": 3}
    assert cocycle_from_json(cocycle_to_json(w), w.group) == w
    s = sign_cocycle_s3()
    doc = cocycle_to_json(s)
    assert cocycle_from_json(doc, s.group) == s
    table = Cocycle3(w.group, table=w.table())
    assert cocycle_from_json(cocycle_to_json(table), w.group) == w
    assert cocycle_from_json({"rule": "trivial"}, w.group) == trivial_cocycle(w.group)
    with pytest.raises(FormatError):
        cocycle_from_json({"rule": "cyclic", "m": 3, "q": 1}, w.group)
    with pytest.raises(FormatError):
        cocycle_from_json({"entries": [{"g1": "0", "g2": "1", "phase": "1/2"}]}, w.group)


def test_scalar_roundtrip():
    from fractions import Fraction
    c = CycScalar.zeta(12, 5) * Fraction(3, 7) - 2
    assert scalar_from_json(scalar_to_json(c)) == c
    with pytest.raises(FormatError):
        scalar_from_json([{"phase": "1/2", "mult": 1.5}])


@pytest.mark.parametrize("name", ["z3", "s3", "f2"])
def test_vector_roundtrip(name):
    ctx = bundled_context(name)
    rng = random.Random(5)
    for n in range(3):
        x = random_vector(ctx, n, rng)
        doc = json.loads(json.dumps(vector_to_json(x, ctx.genset)))
        assert vector_from_json(doc, ctx.genset) == x


def test_vector_errors():
    gs = bundled_context("z2").genset
    with pytest.raises(FormatError):
        vector_from_json({"color": 1, "terms": [{"index": ["x", "y"]}]}, gs)
    with pytest.raises(FormatError):
        vector_from_json({"color": 1, "terms": [{"index": ["x", "q"]}]}, gs)
    with pytest.raises(FormatError):
        vector_from_json({"terms": []}, gs)


def test_context_file(tmp_path):
    (tmp_path / "g.json").write_text(json.dumps(group_to_json(cyclic_group(3))))
    ctx_doc = {"group": "g.json", "genset": {"indices": ["a"], "images": ["1"]},
               "cocycle": {"rule": "cyclic", "m": 3, "q": 2}}
    path = tmp_path / "ctx.json"
    path.write_text(json.dumps(ctx_doc))
    ctx = load_context(str(path))
    assert ctx.size == 1 and ctx.omega == cyclic_cocycle(3, 2)
    with pytest.raises(FormatError):
        load_context(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(FormatError):
        load_json(bad)
