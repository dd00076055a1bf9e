"""JSON encodings of groups, generating families, cocycles, vectors and scalars.

All names in files are element names or index labels; runtime objects use dense
indices.  Every ``*_to_json`` has a ``*_from_json`` inverse.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .cocycles import Cocycle3, cyclic_cocycle, trivial_cocycle
from .groups import FiniteGroup, FreeGroup, GenSet, Group
from .pacore import PAVector
from .scalars import CycScalar, Phase

__all__ = [
    "FormatError",
    "load_json",
    "dump_json",
    "group_to_json", "group_from_json",
    "genset_to_json", "genset_from_json",
    "cocycle_to_json", "cocycle_from_json",
    "scalar_to_json", "scalar_from_json",
    "vector_to_json", "vector_from_json",
]


class FormatError(ValueError):
    pass


def load_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON ({exc})") from None


def dump_json(obj: Any, path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def _need(d: dict, key: str, what: str):
    if not isinstance(d, dict) or key not in d:
        raise FormatError(f"{what}: missing field {key!r}")
    return d[key]


# groups -------------------------------------------------------------------------------

def group_to_json(g: Group) -> dict:
    if isinstance(g, FreeGroup):
        return {"free": g.rank, "letters": list(g.letters)}
    return {
        "elements": list(g.names),
        "identity": g.name(g.identity),
        "table": [[g.name(g.mul(a, b)) for b in g.elements] for a in g.elements],
    }


def group_from_json(d: dict) -> Group:
    if isinstance(d, dict) and "free" in d:
        return FreeGroup(int(d["free"]), d.get("letters"))
    names = [str(x) for x in _need(d, "elements", "group")]
    index = {n: k for k, n in enumerate(names)}
    if len(index) != len(names):
        raise FormatError("group: element names are not distinct")
    try:
        table = [[index[str(x)] for x in row] for row in _need(d, "table", "group")]
        identity = index[str(_need(d, "identity", "group"))]
    except KeyError as exc:
        raise FormatError(f"group: unknown element {exc.args[0]!r}") from None
    try:
        return FiniteGroup(table, names, identity)
    except ValueError as exc:
        raise FormatError(f"group: {exc}") from None


# generating families ------------------------------------------------------------------

def genset_to_json(gs: GenSet) -> dict:
    return {"indices": list(gs.labels), "images": [gs.group.name(g) for g in gs.images]}


def genset_from_json(d: dict, group: Group) -> GenSet:
    labels = [str(x) for x in _need(d, "indices", "genset")]
    images = _need(d, "images", "genset")
    if len(labels) != len(images):
        raise FormatError("genset: indices and images differ in length")
    try:
        return GenSet(group, tuple(group.parse(str(x)) for x in images), tuple(labels))
    except ValueError as exc:
        raise FormatError(f"genset: {exc}") from None


# cocycles -----------------------------------------------------------------------------

def cocycle_to_json(omega: Cocycle3, group_ref: str = "group.json") -> dict:
    if omega.rule is not None and omega.rule[0] == "cyclic":
        return {"rule": "cyclic", "m": omega.rule[1], "q": omega.rule[2]}
    if omega.rule is not None and omega.rule[0] == "trivial":
        return {"rule": "trivial"}
    g = omega.group
    entries = [
        {"g1": g.name(a), "g2": g.name(b), "g3": g.name(c), "phase": str(v)}
        for (a, b, c), v in sorted(omega.table().items())
    ]
    return {"group": group_ref, "entries": entries}


def cocycle_from_json(d: dict, group: Group) -> Cocycle3:
    rule = d.get("rule") if isinstance(d, dict) else None
    if rule == "trivial":
        return trivial_cocycle(group)
    if rule == "cyclic":
        m, q = int(_need(d, "m", "cocycle")), int(_need(d, "q", "cocycle"))
        if not isinstance(group, FiniteGroup) or group.order != m:
            raise FormatError(f"cocycle: cyclic rule for Z_{m} does not match the group")
        return cyclic_cocycle(m, q, group)
    if rule is not None:
        raise FormatError(f"cocycle: unknown rule {rule!r}")
    table = {}
    for k, e in enumerate(_need(d, "entries", "cocycle")):
        try:
            key = tuple(group.parse(str(e[f"g{j}"])) for j in (1, 2, 3))
            table[key] = Phase.parse(str(e["phase"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"cocycle entry {k}: {exc}") from None
    if isinstance(group, FreeGroup):
        if any(not v.is_one for v in table.values()):
            raise FormatError("cocycle: free groups only carry the trivial cocycle")
        return trivial_cocycle(group)
    return Cocycle3(group, table=table)


# scalars and vectors ------------------------------------------------------------------

def _num_to_json(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return int(c)


def _num_from_json(x):
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return Fraction(x)
    raise FormatError(f"multiplicity {x!r} is neither an integer nor a 'p/q' string")


def scalar_to_json(c: CycScalar) -> list[dict]:
    return [{"phase": str(p), "mult": _num_to_json(m)} for p, m in c.terms()]


def scalar_from_json(items: list) -> CycScalar:
    try:
        return CycScalar.from_terms(
            (Phase.parse(str(t["phase"])), _num_from_json(t.get("mult", 1))) for t in items)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"coefficient: {exc}") from None


def vector_to_json(x: PAVector, gs: GenSet) -> dict:
    return {
        "color": x.color,
        "terms": [
            {"index": [gs.labels[i] for i in key], "coeff": scalar_to_json(c)}
            for key, c in x.terms.items()
        ],
    }


def vector_from_json(d: dict, gs: GenSet) -> PAVector:
    color = int(_need(d, "color", "vector"))
    terms: dict = {}
    for k, t in enumerate(_need(d, "terms", "vector")):
        try:
            key = tuple(gs.index_of(str(x)) for x in t["index"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"vector term {k}: {exc}") from None
        c = scalar_from_json(t.get("coeff", [{"phase": "0/1", "mult": 1}]))
        terms[key] = terms[key] + c if key in terms else c
    try:
        x = PAVector(color, terms)
        x.validate(gs)
    except ValueError as exc:
        raise FormatError(f"vector: {exc}") from None
    return x
