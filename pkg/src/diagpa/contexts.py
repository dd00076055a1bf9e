"""Bundled example contexts and loading of context files.

A context file is JSON with keys ``group``, ``genset`` and optionally
``cocycle``; each value is either an inline object in the documented schema or
a path (relative to the context file) to a file holding one.
"""
from __future__ import annotations

import itertools
import warnings
from pathlib import Path

from .cocycles import cyclic_cocycle, pullback, trivial_cocycle
from .evaluator import EvalContext
from .formats import (FormatError, cocycle_from_json, genset_from_json, group_from_json,
                      load_json)
from .groups import FreeGroup, GenSet, cyclic_group, symmetric_group

__all__ = ["BUNDLED", "bundled_context", "load_context", "sign_cocycle_s3", "context_names"]


def sign_cocycle_s3():
    """The cocycle on S_3 pulled back from Z_2 along the sign character."""
    s3 = symmetric_group(3)
    perms = list(itertools.permutations(range(3)))
    sign = [sum(1 for a, b in itertools.combinations(p, 2) if a > b) % 2 for p in perms]
    return pullback(cyclic_cocycle(2, 1), s3, sign)


def _z2(cocycle: bool):
    z2 = cyclic_group(2)
    gs = GenSet(z2, (0, 1), ("x", "y"))
    return gs, cyclic_cocycle(2, 1) if cocycle else trivial_cocycle(z2)


def _z3(q: int, one: bool = False):
    z3 = cyclic_group(3)
    gs = GenSet(z3, (1,), ("a",)) if one else GenSet(z3, (0, 1, 2), ("x", "y", "z"))
    return gs, cyclic_cocycle(3, q)


def _z4(q: int):
    z4 = cyclic_group(4)
    return GenSet(z4, (0, 1), ("x", "y")), cyclic_cocycle(4, q)


def _s3(twisted: bool):
    s3 = symmetric_group(3)
    gs = GenSet(s3, (s3.parse("021"), s3.parse("120")), ("s", "t"))
    return gs, sign_cocycle_s3() if twisted else trivial_cocycle(s3)


def _f2():
    f2 = FreeGroup(2)
    return GenSet(f2, ((1,), (2,)), ("a", "b")), trivial_cocycle(f2)


BUNDLED = {
    "z2": lambda: _z2(True),
    "z2-trivial": lambda: _z2(False),
    "z3": lambda: _z3(1),
    "z3-trivial": lambda: _z3(0),
    "z3-one": lambda: _z3(1, one=True),
    "z4-q1": lambda: _z4(1),
    "z4-q2": lambda: _z4(2),
    "z4-q3": lambda: _z4(3),
    "s3": lambda: _s3(True),
    "s3-trivial": lambda: _s3(False),
    "f2": _f2,
}


def context_names() -> list[str]:
    return list(BUNDLED)


def bundled_context(name: str, **kw) -> EvalContext:
    try:
        gs, omega = BUNDLED[name]()
    except KeyError:
        raise KeyError(f"unknown bundled context {name!r}; known: {', '.join(BUNDLED)}") from None
    return EvalContext(gs, omega, **kw)


def _part(value, base: Path, what: str):
    if isinstance(value, str):
        return load_json(base / value)
    if isinstance(value, dict):
        return value
    raise FormatError(f"context: {what} must be an object or a file name")


def load_context(spec: str, **kw) -> EvalContext:
    """A bundled context name or the path of a context file."""
    if spec in BUNDLED:
        return bundled_context(spec, **kw)
    path = Path(spec)
    if not path.exists():
        raise FormatError(f"{spec!r} is neither a bundled context nor a file")
    d = load_json(path)
    base = path.parent
    group = group_from_json(_part(d.get("group"), base, "group"))
    gs = genset_from_json(_part(d.get("genset"), base, "genset"), group)
    omega = None
    if d.get("cocycle") is not None:
        omega = cocycle_from_json(_part(d["cocycle"], base, "cocycle"), group)
    with warnings.catch_warnings():
        warnings.simplefilter("default")
        return EvalContext(gs, omega, **kw)
