"""Random tangles, equivalence-preserving rewrites and a Temperley-Lieb normaliser.

The rewrites encode moves under which the action must be invariant: zigzags,
full rotations, conjugation by a rotation, splitting left inclusions, sliding
caps and inclusions past a disc, associativity and unit laws.  A tangle with no
input slots is also reduced to a single TL diagram by following strings, which
gives an oracle independent of the cocycle phases.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .tangles import (TL, Cap, CapInc, Compose, DiscInc, JonesE, LCondExp, LeftInc, Mult,
                      RCondExp, Rot, TangleExpr, color_of, compose_chain, expand_derived,
                      identity_tangle, nodes, unit_tangle)

__all__ = [
    "CorpusEntry",
    "random_primitive",
    "random_tangle",
    "rewrite",
    "tl_normalize",
    "make_corpus",
    "rot_power",
    "MAX_COLOR",
]

MAX_COLOR = 4


def rot_power(n: int, k: int) -> list[TangleExpr]:
    """Chain of ``k mod n`` rotations on color n (empty for the identity)."""
    return [Rot(n)] * (k % n if n else 0)


def _conj_by_rot(n_out: int, body: TangleExpr, n_in: int) -> TangleExpr:
    """``Rot(n_out)^-1 o body o Rot(n_in)`` through slot 0."""
    inv = rot_power(n_out, -1)
    return compose_chain(*inv, Compose(body, 0, Rot(n_in)) if n_in else body)


# rewrites -----------------------------------------------------------------------------

def _primitive_rewrites(t: TangleExpr, rng: random.Random) -> list[TangleExpr]:
    """Tangles equal to the primitive ``t`` with the same slot order."""
    out: list[TangleExpr] = []
    n, _slots = color_of(t)
    if isinstance(t, (JonesE, RCondExp, Rot, LCondExp)):
        out.append(expand_derived(t))
    if isinstance(t, LeftInc) and t.w >= 4:
        out.append(Compose(LeftInc(t.n + 2, t.w - 2), 0, LeftInc(t.n, 2)))
        out.append(Compose(LeftInc(t.n + t.w - 2, 2), 0, LeftInc(t.n, t.w - 2)))
    if isinstance(t, Cap) and t.m >= 3:
        out.append(_conj_by_rot(t.n - 1, Cap(t.n, t.m - 2), t.n))
    if isinstance(t, CapInc) and t.s >= 2:
        out.append(_conj_by_rot(t.n + 1, CapInc(t.n, t.s - 2), t.n))
    if isinstance(t, DiscInc) and t.r >= 1:
        body = Compose(DiscInc(t.n1, t.r - 1, t.n2), 0, Rot(t.n1))
        out.append(compose_chain(*rot_power(t.n1, -1), body))
    if 1 <= n <= 3:
        s = rng.randrange(1, 2 * n + 1)
        out.append(compose_chain(Cap(n + 1, s), CapInc(n, s), t))
        s2 = rng.randrange(2 * n)
        out.append(compose_chain(Cap(n + 1, s2 + 2), CapInc(n, s2), t))
        out.append(compose_chain(*[Rot(n)] * n, t))
        out.append(Compose(identity_tangle(n), 0, t))
        out.append(Compose(Compose(Mult(n), 1, unit_tangle(n)), 0, t))
    return out


def _pattern_rewrites(t: Compose) -> list[TangleExpr]:
    """Rewrites of a two-node pattern ``outer o_0 inner``."""
    o, i = t.outer, t.inner
    out: list[TangleExpr] = []
    if t.slot == 0 and isinstance(o, Mult) and isinstance(i, Mult) and o.n == i.n:
        out.append(Compose(Mult(o.n), 1, Mult(o.n)))
    if t.slot == 1 and isinstance(o, Mult) and isinstance(i, Mult) and o.n == i.n:
        out.append(Compose(Mult(o.n), 0, Mult(o.n)))
    if t.slot == 0 and isinstance(i, DiscInc):
        n1, r, n2 = i.n1, i.r, i.n2
        if isinstance(o, LeftInc):
            out.append(Compose(DiscInc(n1 + o.w, r + o.w // 2, n2), 0, LeftInc(n1, o.w)))
        if isinstance(o, Rot) and r >= 1:
            out.append(Compose(DiscInc(n1, r - 1, n2), 0, Rot(n1)))
        if isinstance(o, CapInc):
            if o.s <= 2 * r:
                out.append(Compose(DiscInc(n1 + 1, r + 1, n2), 0, CapInc(n1, o.s)))
            elif o.s >= 2 * r + n2:
                out.append(Compose(DiscInc(n1 + 1, r, n2), 0, CapInc(n1, o.s)))
        if isinstance(o, Cap):
            if o.m + 1 <= 2 * r:
                out.append(Compose(DiscInc(n1 - 1, r - 1, n2), 0, Cap(n1, o.m)))
            elif o.m >= 2 * r + n2 + 1:
                out.append(Compose(DiscInc(n1 - 1, r, n2), 0, Cap(n1, o.m)))
    return out


def rewrite(t: TangleExpr, rng: random.Random, rate: float = 0.5) -> TangleExpr:
    """Apply randomly chosen local rewrites throughout ``t``."""
    if isinstance(t, Compose):
        options = _pattern_rewrites(t)
        if options and rng.random() < rate:
            return rewrite(rng.choice(options), rng, rate / 2)
        return Compose(rewrite(t.outer, rng, rate), t.slot, rewrite(t.inner, rng, rate))
    options = _primitive_rewrites(t, rng)
    if options and rng.random() < rate:
        return rng.choice(options)
    return t


# random generation --------------------------------------------------------------------

def _random_tl(rng: random.Random, n: int) -> TL:
    """A uniformly built random non-crossing pairing of 2n points."""
    pairs: list[tuple[int, int]] = []

    def fill(lo: int, hi: int) -> None:  # points lo..hi inclusive, even count
        if lo > hi:
            return
        partner = rng.randrange(lo + 1, hi + 1, 2)
        pairs.append((lo, partner))
        fill(lo + 1, partner - 1)
        fill(partner + 1, hi)

    fill(1, 2 * n)
    return TL(n, tuple(pairs), rng.choice((0, 0, 1)))


def random_primitive(rng: random.Random, out: int, max_color: int = MAX_COLOR,
                     closed_ok: bool = True) -> TangleExpr:
    """A random primitive or two-node pattern with output color ``out``."""
    c: list[TangleExpr] = []
    if out >= 1:
        c += [Rot(out), LCondExp(out), Mult(out), CapInc(out - 1, rng.randrange(2 * out - 1))]
        c += [DiscInc(out, r, n2) for r in range(out + 1) for n2 in range(2 * out - 2 * r + 1)
              if n2 <= max_color][:6]
    if out + 1 <= max_color:
        c += [Cap(out + 1, rng.randrange(1, 2 * out + 2)), RCondExp(out)]
    if out >= 2:
        c += [LeftInc(out - 2, 2)]
    if out >= 4:
        c += [LeftInc(out - 4, 4)]
    if closed_ok:
        c += [_random_tl(rng, out)]
        if out >= 2:
            c += [JonesE(out - 1)]
    t = rng.choice(c)
    if isinstance(t, DiscInc) and rng.random() < 0.5:
        n1, r, n2 = t.n1, t.r, t.n2
        pick = rng.randrange(4)
        if pick == 0 and n1 + 2 <= max_color:
            t = Compose(LeftInc(n1, 2), 0, t)
        elif pick == 1 and r >= 1:
            t = Compose(Rot(n1), 0, t)
        elif pick == 2 and n1 + 1 <= max_color:
            s = rng.choice([s for s in range(2 * n1 + 1) if s <= 2 * r or s >= 2 * r + n2])
            t = Compose(CapInc(n1, s), 0, t)
        elif pick == 3 and n1 >= 1:
            ms = [m for m in range(1, 2 * n1) if m + 1 <= 2 * r or m >= 2 * r + n2 + 1]
            if ms:
                t = Compose(Cap(n1, rng.choice(ms)), 0, t)
        if color_of(t)[0] != out:
            t = DiscInc(n1, r, n2) if n1 == out else rng.choice([Rot(out), Mult(out)])
    elif isinstance(t, Mult) and rng.random() < 0.3:
        t = Compose(Mult(out), rng.randrange(2), Mult(out))
    return t


def random_tangle(rng: random.Random, out: int, depth: int = 2, plug: float = 0.5,
                  max_color: int = MAX_COLOR, closed: bool = False) -> TangleExpr:
    """A random composite with output color ``out``.

    With ``closed`` every slot is filled, so the result has no inputs.
    """
    t = random_primitive(rng, out, max_color, closed_ok=depth == 0 or closed or rng.random() < .3)
    slots = color_of(t)[1]
    for k in reversed(range(len(slots))):
        if closed and depth <= 0:
            sub = _random_tl(rng, slots[k])
        elif closed or (depth > 0 and rng.random() < plug):
            sub = random_tangle(rng, slots[k], depth - 1, plug, max_color, closed)
        else:
            continue
        t = Compose(t, k, sub)
    return t


# Temperley-Lieb normal form -------------------------------------------------------------

class _UF:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        self.parent[self.find(a)] = self.find(b)


def _wiring(t: TangleExpr) -> tuple[list, list[tuple]]:
    """Boundary points of a primitive and its internal identifications.

    Returns ``(outs, joins)``: ``outs[p]`` is the node attached to output point
    p+1, either ``("in", slot, q)`` or ``("f", k)``; ``joins`` are node pairs
    connected inside the tangle.
    """
    def inp(k, q):
        return ("in", k, q)

    if isinstance(t, Cap):
        m = t.m
        outs = [inp(0, q) for q in range(1, 2 * t.n + 1) if q not in (m, m + 1)]
        return outs, [(inp(0, m), inp(0, m + 1))]
    if isinstance(t, CapInc):
        s = t.s
        outs = [inp(0, q) for q in range(1, s + 1)] + [("f", 0), ("f", 1)]
        outs += [inp(0, q) for q in range(s + 1, 2 * t.n + 1)]
        return outs, [(("f", 0), ("f", 1))]
    if isinstance(t, LeftInc):
        w = t.w
        outs = [("f", k) for k in range(w)] + [inp(0, q) for q in range(1, 2 * t.n + 1)]
        outs += [("f", k) for k in reversed(range(w))]
        return outs, []
    if isinstance(t, DiscInc):
        r2, n2 = 2 * t.r, t.n2
        outs = [inp(0, q) for q in range(1, r2 + 1)] + [inp(1, q) for q in range(1, n2 + 1)]
        outs += [inp(0, q) for q in range(r2 + n2 + 1, 2 * t.n1 + 1)]
        joins = [(inp(0, r2 + s), inp(1, 2 * n2 - s + 1)) for s in range(1, n2 + 1)]
        return outs, joins
    if isinstance(t, Mult):
        n = t.n
        outs = [inp(0, q) for q in range(1, n + 1)] + [inp(1, q) for q in range(n + 1, 2 * n + 1)]
        return outs, [(inp(0, 2 * n + 1 - q), inp(1, q)) for q in range(1, n + 1)]
    if isinstance(t, Rot):
        n2 = 2 * t.n
        return [inp(0, (q + 2) % n2 + 1) for q in range(n2)], []
    if isinstance(t, LCondExp):
        n2 = 2 * t.n
        outs = [("f", 0)] + [inp(0, q) for q in range(2, n2)] + [("f", 0)]
        return outs, [(inp(0, 1), inp(0, n2))]
    raise TypeError(f"no wiring for {t!r}")


def _wire(t: TangleExpr, tag: tuple) -> tuple[list, list, int, list]:
    """Wiring of any tangle: (output nodes, joins, closed loops, nodes of each slot)."""
    if isinstance(t, Compose):
        outs, joins, loops, slots = _wire(t.outer, tag + (0,))
        iouts, ijoins, iloops, islots = _wire(t.inner, tag + (1,))
        joins = joins + ijoins + list(zip(slots[t.slot], iouts))
        return outs, joins, loops + iloops, slots[: t.slot] + islots + slots[t.slot + 1:]
    if isinstance(t, TL):
        outs = [tag + ("p", q) for q in range(1, 2 * t.n + 1)]
        return outs, [(outs[a - 1], outs[b - 1]) for a, b in t.pairs], t.loops, []
    if isinstance(t, (JonesE, RCondExp)):
        return _wire(expand_derived(t), tag)
    raw_outs, raw_joins = _wiring(t)
    outs = [tag + x for x in raw_outs]
    joins = [(tag + a, tag + b) for a, b in raw_joins]
    slots = [[tag + ("in", k, q) for q in range(1, 2 * c + 1)]
             for k, c in enumerate(color_of(t)[1])]
    return outs, joins, 0, slots


def tl_normalize(t: TangleExpr) -> TL:
    """The TL diagram equal to a tangle without input slots."""
    outs, joins, loops, slots = _wire(t, ())
    if slots:
        raise ValueError("tangle has open slots")
    uf = _UF()
    for a, b in joins:
        uf.union(a, b)
    groups: dict = {}
    for p, node in enumerate(outs, 1):
        groups.setdefault(uf.find(node), []).append(p)
    pairs = []
    for pts in groups.values():
        if len(pts) != 2:
            raise AssertionError(f"string with {len(pts)} endpoints")
        pairs.append(tuple(pts))
    comps = {uf.find(x) for x in list(uf.parent)}
    loops += len(comps - set(groups))
    return TL(len(outs) // 2, tuple(pairs), loops)


# corpus -------------------------------------------------------------------------------

@dataclass
class CorpusEntry:
    tangle: TangleExpr
    decompositions: list[TangleExpr]


def make_corpus(rng: random.Random, size: int = 60, max_color: int = 3) -> list[CorpusEntry]:
    """Random composites, each with at least two equivalent decompositions."""
    out: list[CorpusEntry] = []
    while len(out) < size:
        closed = len(out) % 4 == 3
        color = rng.randrange(0 if closed else 1, max_color + 1)
        t = random_tangle(rng, color, depth=3, plug=0.6, closed=closed, max_color=max_color + 1)
        if sum(1 for _ in nodes(t)) < 3:
            continue
        decs: list[TangleExpr] = []
        if closed:
            decs.append(tl_normalize(t))
        for _ in range(8):
            d = rewrite(t, rng, rate=0.6)
            if d != t and d not in decs:
                decs.append(d)
            if len(decs) >= 3:
                break
        e = expand_derived(t)
        if e != t and e not in decs:
            decs.append(e)
        if len(decs) >= 2:
            out.append(CorpusEntry(t, decs[:4]))
    return out
