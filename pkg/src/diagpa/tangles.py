"""Planar tangles as composition trees over a small set of primitive tangles.

Boundary points of an n-box are numbered ``1..2n`` clockwise starting just
after the marked point ``*``.  In the rectangular picture with ``*`` on the
left, points ``1..n`` run left to right along the top and ``n+1..2n`` run
right to left along the bottom.

Primitive tangles and their slot/output colors:

=====================  ==============  ======
node                   slots           output
=====================  ==============  ======
``TL(n, pairs, L)``    none            n
``Cap(n, m)``          n               n-1
``CapInc(n, s)``       n               n+1
``LeftInc(n, w)``      n               n+w
``DiscInc(n1, r, n2)`` n1, n2          n1
``Mult(n)``            n, n            n
``JonesE(n)``          none            n+1
``RCondExp(n)``        n+1             n
``LCondExp(n)``        n               n
``Rot(n)``             n               n
=====================  ==============  ======

``Compose(outer, slot, inner)`` plugs ``inner`` into input ``slot`` of
``outer``; the slots of the result are the outer slots before ``slot``, then
the inner slots, then the remaining outer slots.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

__all__ = [
    "TL", "Cap", "CapInc", "LeftInc", "DiscInc", "Mult", "JonesE", "RCondExp",
    "LCondExp", "Rot", "Compose", "TangleExpr",
    "TangleError", "TangleSyntaxError", "TangleColorError", "TanglePlanarityError",
    "ValidationReport",
    "color_of", "validate", "parse_tangle", "to_sexp", "expand_derived", "adjoint",
    "compose_chain", "identity_tangle", "unit_tangle", "is_noncrossing", "nodes",
    "rot_expansion", "lcond_expansion", "jones_pairs",
]


class TangleError(ValueError):
    def __init__(self, message: str, position: tuple[int, int] | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (line {position[0]}, column {position[1]})"
        super().__init__(message)


class TangleSyntaxError(TangleError):
    pass


class TangleColorError(TangleError):
    pass


class TanglePlanarityError(TangleError):
    pass


@dataclass(frozen=True)
class TL:
    n: int
    pairs: tuple[tuple[int, int], ...]
    loops: int = 0

    def __post_init__(self):
        norm = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", norm)


@dataclass(frozen=True)
class Cap:
    n: int
    m: int


@dataclass(frozen=True)
class CapInc:
    n: int
    s: int


@dataclass(frozen=True)
class LeftInc:
    n: int
    w: int


@dataclass(frozen=True)
class DiscInc:
    n1: int
    r: int
    n2: int


@dataclass(frozen=True)
class Mult:
    n: int


@dataclass(frozen=True)
class JonesE:
    n: int


@dataclass(frozen=True)
class RCondExp:
    n: int


@dataclass(frozen=True)
class LCondExp:
    n: int


@dataclass(frozen=True)
class Rot:
    n: int


@dataclass(frozen=True)
class Compose:
    outer: "TangleExpr"
    slot: int
    inner: "TangleExpr"
    # source position of the node in parsed text; not part of equality
    pos: tuple[int, int] | None = field(default=None, compare=False, repr=False)


TangleExpr = Union[TL, Cap, CapInc, LeftInc, DiscInc, Mult, JonesE, RCondExp, LCondExp, Rot,
                   Compose]

_PRIMITIVES = (TL, Cap, CapInc, LeftInc, DiscInc, Mult, JonesE, RCondExp, LCondExp, Rot)


def is_noncrossing(pairs) -> bool:
    for a, b in pairs:
        for c, d in pairs:
            if a < c < b < d:
                return False
    return True


def _primitive_signature(t) -> tuple[int, list[int]]:
    if isinstance(t, TL):
        return t.n, []
    if isinstance(t, Cap):
        return t.n - 1, [t.n]
    if isinstance(t, CapInc):
        return t.n + 1, [t.n]
    if isinstance(t, LeftInc):
        return t.n + t.w, [t.n]
    if isinstance(t, DiscInc):
        return t.n1, [t.n1, t.n2]
    if isinstance(t, Mult):
        return t.n, [t.n, t.n]
    if isinstance(t, JonesE):
        return t.n + 1, []
    if isinstance(t, RCondExp):
        return t.n, [t.n + 1]
    if isinstance(t, (LCondExp, Rot)):
        return t.n, [t.n]
    raise TypeError(f"not a tangle: {t!r}")


def _primitive_problems(t) -> list[str]:
    """Structural constraints of a single primitive node."""
    probs = []
    if isinstance(t, TL):
        pts = [p for pair in t.pairs for p in pair]
        if t.n < 0 or t.loops < 0:
            probs.append(f"TL needs n >= 0 and loops >= 0, got {t}")
        elif sorted(pts) != list(range(1, 2 * t.n + 1)):
            probs.append(f"TL pairing {t.pairs} is not a perfect matching of 1..{2 * t.n}")
        elif not is_noncrossing(t.pairs):
            probs.append(f"TL pairing {t.pairs} is crossing")
    elif isinstance(t, Cap):
        if t.n < 1 or not 1 <= t.m <= 2 * t.n - 1:
            probs.append(f"cap position {t.m} out of range 1..{2 * t.n - 1} for color {t.n}")
    elif isinstance(t, CapInc):
        if t.n < 0 or not 0 <= t.s <= 2 * t.n:
            probs.append(f"cap-inclusion offset {t.s} out of range 0..{2 * t.n}")
    elif isinstance(t, LeftInc):
        if t.n < 0 or t.w < 0 or t.w % 2:
            probs.append(f"left inclusion needs n >= 0 and an even number of strings, got {t}")
    elif isinstance(t, DiscInc):
        if min(t.n1, t.r, t.n2) < 0 or 2 * t.r + t.n2 > 2 * t.n1:
            probs.append(f"disc inclusion needs 2r + n2 <= 2 n1, got {t}")
    elif isinstance(t, Mult):
        if t.n < 0:
            probs.append("negative color")
    elif isinstance(t, (JonesE, LCondExp, Rot)):
        if t.n < 1:
            probs.append(f"{type(t).__name__} needs n >= 1")
    elif isinstance(t, RCondExp):
        if t.n < 0:
            probs.append("negative color")
    return probs


def color_of(t: TangleExpr) -> tuple[int, list[int]]:
    """(output color, slot colors), raising :class:`TangleColorError` on mismatch."""
    if isinstance(t, Compose):
        out, slots = color_of(t.outer)
        iout, islots = color_of(t.inner)
        if not 0 <= t.slot < len(slots):
            raise TangleColorError(f"slot {t.slot} out of range for {len(slots)} slots", t.pos)
        if slots[t.slot] != iout:
            raise TangleColorError(
                f"slot {t.slot} has color {slots[t.slot]} but inner tangle outputs {iout}", t.pos)
        return out, slots[: t.slot] + islots + slots[t.slot + 1:]
    return _primitive_signature(t)


@dataclass
class ValidationReport:
    ok: bool
    errors: list[str]

    def __bool__(self):
        return self.ok


def validate(t: TangleExpr) -> ValidationReport:
    errors: list[str] = []
    for node in nodes(t):
        if not isinstance(node, Compose):
            errors.extend(_primitive_problems(node))
    if not errors:
        try:
            color_of(t)
        except TangleColorError as exc:
            errors.append(str(exc))
    return ValidationReport(not errors, errors)


def nodes(t: TangleExpr) -> Iterator[TangleExpr]:
    yield t
    if isinstance(t, Compose):
        yield from nodes(t.outer)
        yield from nodes(t.inner)


# DSL ----------------------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<comment>;[^\n]*)|(?P<open>\()|(?P<close>\))"
    r"|(?P<int>-?\d+)|(?P<sym>[A-Za-z_][\w-]*)|(?P<bad>.)"
)

_ARITY = {
    "cap": (Cap, 2), "capinc": (CapInc, 2), "leftinc": (LeftInc, 2), "discinc": (DiscInc, 3),
    "mult": (Mult, 1), "jones": (JonesE, 1), "rcond": (RCondExp, 1), "lcond": (LCondExp, 1),
    "rot": (Rot, 1),
}

_KINDS = {"open": "(", "close": ")", "int": "int", "sym": "sym"}


def _where(text: str, offset: int) -> tuple[int, int]:
    return text.count("\n", 0, offset) + 1, offset - (text.rfind("\n", 0, offset) + 1) + 1


def _tokenize(text: str):
    out = []
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        if kind in ("ws", "comment"):
            continue
        if kind == "bad":
            raise TangleSyntaxError(f"unexpected character {m.group()!r}", _where(text, m.start()))
        out.append((_KINDS[kind], m.group(), _where(text, m.start())))
    out.append(("eof", "", _where(text, len(text))))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = {"(": "'('", ")": "')'", "int": "an integer", "sym": "a name"}.get(kind, kind)
            got = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise TangleSyntaxError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def integer(self) -> int:
        return int(self.take("int")[1])

    def expr(self) -> TangleExpr:
        open_tok = self.take("(")
        head = self.take("sym")
        name = head[1].lower()
        where = open_tok[2]
        if name == "compose":
            outer = self.expr()
            slot = self.integer()
            inner = self.expr()
            self.take(")")
            node = Compose(outer, slot, inner, pos=where)
            color_of(node)
            return node
        if name == "tl":
            n = self.integer()
            self.take("(")
            pairs = []
            while self.peek()[0] == "(":
                self.take("(")
                pairs.append((self.integer(), self.integer()))
                self.take(")")
            self.take(")")
            loops = self.integer() if self.peek()[0] == "int" else 0
            self.take(")")
            node = TL(n, tuple(pairs), loops)
        elif name == "incl":
            n = self.integer()
            self.take(")")
            node = CapInc(n, n)
        elif name in _ARITY:
            cls, k = _ARITY[name]
            args = [self.integer() for _ in range(k)]
            self.take(")")
            node = cls(*args)
        else:
            raise TangleSyntaxError(f"unknown tangle {head[1]!r}", head[2])
        for prob in _primitive_problems(node):
            if isinstance(node, TL) and "crossing" in prob:
                raise TanglePlanarityError(prob, where)
            raise TangleSyntaxError(prob, where)
        return node


def parse_tangle(text: str) -> TangleExpr:
    """Parse one tangle s-expression; errors carry (line, column)."""
    p = _Parser(text)
    node = p.expr()
    tok = p.peek()
    if tok[0] != "eof":
        raise TangleSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return node


def to_sexp(t: TangleExpr) -> str:
    if isinstance(t, Compose):
        return f"(compose {to_sexp(t.outer)} {t.slot} {to_sexp(t.inner)})"
    if isinstance(t, TL):
        pairs = " ".join(f"({a} {b})" for a, b in t.pairs)
        return f"(tl {t.n} ({pairs}) {t.loops})"
    if isinstance(t, Cap):
        return f"(cap {t.n} {t.m})"
    if isinstance(t, CapInc):
        return f"(capinc {t.n} {t.s})"
    if isinstance(t, LeftInc):
        return f"(leftinc {t.n} {t.w})"
    if isinstance(t, DiscInc):
        return f"(discinc {t.n1} {t.r} {t.n2})"
    name = {Mult: "mult", JonesE: "jones", RCondExp: "rcond", LCondExp: "lcond", Rot: "rot"}
    return f"({name[type(t)]} {t.n})"


# derived tangles ----------------------------------------------------------------------

def compose_chain(*ts: TangleExpr) -> TangleExpr:
    """``ts[0] o ts[1] o ...`` through slot 0 (the last one is applied first)."""
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Compose(t, 0, out)
    return out


def unit_tangle(n: int) -> TL:
    return TL(n, tuple((k, 2 * n + 1 - k) for k in range(1, n + 1)), 0)


def jones_pairs(n: int) -> tuple[tuple[int, int], ...]:
    m = n + 1
    through = [(k, 2 * m + 1 - k) for k in range(1, n)]
    return tuple(through + [(n, n + 1), (n + 2, n + 3)])


def rot_expansion(n: int) -> TangleExpr:
    return compose_chain(Cap(n + 1, 1), Cap(n + 2, 2), LeftInc(n, 2))


def lcond_expansion(n: int) -> TangleExpr:
    return compose_chain(Cap(n + 1, 2 * n), Cap(n + 2, 2), LeftInc(n, 2))


def expand_derived(t: TangleExpr) -> TangleExpr:
    """Rewrite derived nodes into TL/Cap/CapInc/LeftInc/DiscInc/Mult primitives."""
    if isinstance(t, Compose):
        return Compose(expand_derived(t.outer), t.slot, expand_derived(t.inner))
    if isinstance(t, JonesE):
        return TL(t.n + 1, jones_pairs(t.n), 0)
    if isinstance(t, RCondExp):
        return Cap(t.n + 1, t.n + 1)
    if isinstance(t, Rot):
        return rot_expansion(t.n)
    if isinstance(t, LCondExp):
        return lcond_expansion(t.n)
    return t


def identity_tangle(n: int) -> TangleExpr:
    """A one-slot tangle acting as the identity on ``P_n``."""
    return Compose(Mult(n), 0, unit_tangle(n))


def _incl_chain(lo: int, hi: int) -> list[TangleExpr]:
    """CapInc nodes taking color lo to hi, outermost first (empty if lo == hi)."""
    return [CapInc(c, c) for c in range(hi - 1, lo - 1, -1)]


def _mirror_discinc0(n1: int, c: int) -> TangleExpr:
    # mirror image of DiscInc(n1, 0, c): the small disc hangs off the last c points
    if c <= n1:
        if c == n1:
            return Mult(n1)
        return Compose(Mult(n1), 1, compose_chain(*_incl_chain(c, n1)))
    incl = compose_chain(*_incl_chain(n1, c))
    body = Compose(Mult(c), 0, incl)
    caps = [Cap(c - t + 1, n1 - t + 1) for t in range(1, c - n1 + 1)]
    return compose_chain(*reversed(caps), body)


def adjoint(t: TangleExpr) -> TangleExpr:
    """The mirror-image tangle, whose action intertwines the star map."""
    if isinstance(t, Compose):
        return Compose(adjoint(t.outer), t.slot, adjoint(t.inner))
    if isinstance(t, TL):
        m = 2 * t.n + 1
        return TL(t.n, tuple((m - b, m - a) for a, b in t.pairs), t.loops)
    if isinstance(t, Cap):
        return Cap(t.n, 2 * t.n - t.m)
    if isinstance(t, CapInc):
        return CapInc(t.n, 2 * t.n - t.s)
    if isinstance(t, (LeftInc, JonesE, RCondExp, LCondExp)):
        return t
    if isinstance(t, Mult):
        return DiscInc(t.n, 0, t.n)
    if isinstance(t, DiscInc):
        c = t.n2 + 2 * t.r
        base = _mirror_discinc0(t.n1, c)
        if t.r == 0:
            return base
        return Compose(base, 1, LeftInc(t.n2, 2 * t.r))
    if isinstance(t, Rot):
        if t.n == 1:
            return t
        return compose_chain(*[Rot(t.n)] * (t.n - 1))
    raise TypeError(f"not a tangle: {t!r}")
