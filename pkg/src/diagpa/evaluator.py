"""Action of tangles on the planar algebra attached to (G, {g_i}, omega).

Every primitive tangle has a closed-form action on basis words; composite
tangles are evaluated bottom-up along the composition tree.  Coefficients are
carried internally as exponent maps ``{k: c}`` meaning ``sum c zeta_W**k`` over
one working conductor ``W`` per evaluation, reduced modulo ``Phi_W`` after every
node so that cancellations are detected exactly.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .cocycles import Cocycle3, NotACocycle, check_cocycle, is_normalized, normalize, \
    trivial_cocycle
from .groups import FiniteGroup, GenSet
from .pacore import ColorMismatch, PAVector, star
from .scalars import CycScalar, Phase, _reduce
from .tangles import (TL, Cap, CapInc, Compose, DiscInc, JonesE, LCondExp, LeftInc, Mult,
                      RCondExp, Rot, TangleExpr, TangleError, adjoint, color_of, jones_pairs,
                      validate)

__all__ = [
    "EvalContext",
    "SizeGuardExceeded",
    "CheckReport",
    "evaluate",
    "differential_check",
    "star_compat_check",
    "trace_right",
    "trace_left",
    "DEFAULT_TERM_CAP",
]

DEFAULT_TERM_CAP = 10**6

Key = tuple[int, ...]
Coeff = dict[int, int]
IVec = dict[Key, Coeff]


class SizeGuardExceeded(RuntimeError):
    pass


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class EvalContext:
    """A group with an indexed generating family and a normalised 3-cocycle.

    A cocycle that is not normalised is replaced by its normalisation (with a
    warning); one that fails the cocycle identity is rejected.
    """

    def __init__(self, genset: GenSet, omega: Cocycle3 | None = None, *,
                 term_cap: int = DEFAULT_TERM_CAP, verify: bool = True):
        group = genset.group
        if omega is None:
            omega = trivial_cocycle(group)
        if omega.group != group:
            raise ValueError("cocycle and generating family live on different groups")
        if isinstance(group, FiniteGroup):
            if verify:
                report = check_cocycle(omega)
                if not report:
                    raise NotACocycle(report.describe())
            if not is_normalized(omega):
                warnings.warn("cocycle is not normalized; using a cohomologous normalized one",
                              stacklevel=2)
                omega = normalize(omega)
        elif not omega.is_trivial_rule():
            raise ValueError("free groups only carry the trivial cocycle")
        self.genset = genset
        self.omega = omega
        self.term_cap = term_cap
        self.size = genset.size
        self.conductor = omega.conductor
        self._lam_cache: dict = {}
        self._trivial = self.conductor == 1
        if isinstance(group, FiniteGroup):
            self._table = group.table
            self._e = group.identity
            self._gen = genset.images
            self._geninv = tuple(group.inverse[g] for g in genset.images)
            self._w = omega.exponent_table(self.conductor) if not self._trivial else None
        else:
            self._table = None
            self._e = group.identity

    # group helpers ---------------------------------------------------------------------
    def alt(self, key: Sequence[int], start=None, offset: int = 0):
        """alt of ``key`` right-multiplied onto ``start``; ``offset`` shifts the parity."""
        if self._table is None:
            x = self._e if start is None else start
            for pos, i in enumerate(key, 1 + offset):
                x = self.genset.step(x, i, pos)
            return x
        t, gen, ginv = self._table, self._gen, self._geninv
        x = self._e if start is None else start
        odd = (offset % 2) == 0
        for i in key:
            x = t[x][ginv[i] if odd else gen[i]]
            odd = not odd
        return x

    def lam(self, h, key: Key) -> int:
        """Exponent k with ``lambda_j(key) = zeta_conductor**k`` where ``alt(j) = h``."""
        if self._trivial or h == self._e:
            return 0
        ck = (h, key)
        got = self._lam_cache.get(ck)
        if got is not None:
            return got
        t, gen, ginv, w = self._table, self._gen, self._geninv, self._w
        wh = w[h]
        x = self._e
        total = 0
        odd = True
        for i in key:
            g = gen[i]
            if odd:
                x = t[x][ginv[i]]
                total -= wh[x][g]
            else:
                total += wh[x][g]
                x = t[x][g]
            odd = not odd
        total %= self.conductor
        if len(self._lam_cache) < 2_000_000:
            self._lam_cache[ck] = total
        return total

    def lambda_phase(self, j: Sequence[int], i: Sequence[int]) -> Phase:
        return Phase(self.lam(self.alt(j), tuple(i)), self.conductor)

    @lru_cache(maxsize=64)
    def words_by_alt(self, w: int) -> dict:
        """Words of length w grouped by their alternating product."""
        out: dict = {}
        for j in itertools.product(range(self.size), repeat=w):
            out.setdefault(self.alt(j), []).append(j)
        return out

    def unit(self, n: int) -> PAVector:
        from .pacore import unit
        return unit(self.size, n)

    def __repr__(self):
        return (f"EvalContext(group={self.genset.group!r}, |I|={self.size}, "
                f"conductor={self.conductor})")


# internal linear algebra -----------------------------------------------------------------

class _Acc:
    """Accumulator for an internal vector at working conductor W."""

    __slots__ = ("W", "data")

    def __init__(self, W: int):
        self.W = W
        self.data: IVec = {}

    def add(self, key: Key, coeff: Coeff, shift: int = 0) -> None:
        slot = self.data.get(key)
        if slot is None:
            slot = self.data[key] = {}
        W = self.W
        for k, c in coeff.items():
            kk = (k + shift) % W
            slot[kk] = slot.get(kk, 0) + c

    def result(self) -> IVec:
        out = {}
        for key, coeff in self.data.items():
            red = _reduce(self.W, coeff) if self.W > 1 else ({0: s} if (
                s := sum(coeff.values())) else {})
            if red:
                out[key] = red
        return out


def _coeff_mul(a: Coeff, b: Coeff, W: int) -> Coeff:
    if len(a) == 1 and len(b) == 1:
        ((k1, c1),), ((k2, c2),) = a.items(), b.items()
        return {(k1 + k2) % W: c1 * c2}
    out: Coeff = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = (k1 + k2) % W
            out[k] = out.get(k, 0) + c1 * c2
    return out


class _Run:
    """State of one evaluation: context, working conductor and term guard."""

    def __init__(self, ctx: EvalContext, W: int):
        self.ctx = ctx
        self.W = W
        self.scale = W // ctx.conductor
        self.cap = ctx.term_cap

    def guard(self, n: int, what: str) -> None:
        if n > self.cap:
            raise SizeGuardExceeded(f"{what} would produce {n} terms (cap {self.cap})")

    def ev(self, t: TangleExpr, ins: list[IVec]) -> IVec:
        if isinstance(t, Compose):
            k = _slot_count(t.inner)
            inner = self.ev(t.inner, ins[t.slot: t.slot + k])
            return self.ev(t.outer, ins[: t.slot] + [inner] + ins[t.slot + k:])
        method = getattr(self, "_" + type(t).__name__)
        return method(t, *ins)

    # primitives ------------------------------------------------------------------------
    def _TL(self, t: TL, *_) -> IVec:
        k = self.ctx.size
        self.guard(k ** t.n, "Temperley-Lieb diagram")
        partner = {}
        for a, b in t.pairs:
            partner[a - 1] = b - 1
        firsts = sorted(partner)
        mult = {0: k ** t.loops} if k ** t.loops else {}
        acc = {}
        length = 2 * t.n
        for labels in itertools.product(range(k), repeat=t.n):
            word = [0] * length
            for a, lab in zip(firsts, labels):
                word[a] = lab
                word[partner[a]] = lab
            acc[tuple(word)] = dict(mult)
        return {key: c for key, c in acc.items() if c}

    def _JonesE(self, t: JonesE, *_) -> IVec:
        return self._TL(TL(t.n + 1, jones_pairs(t.n), 0))

    def _Cap(self, t: Cap, x: IVec) -> IVec:
        m = t.m - 1
        out = _Acc(self.W)
        for key, c in x.items():
            if key[m] == key[m + 1]:
                out.add(key[:m] + key[m + 2:], c)
        return out.result()

    def _RCondExp(self, t: RCondExp, x: IVec) -> IVec:
        return self._Cap(Cap(t.n + 1, t.n + 1), x)

    def _CapInc(self, t: CapInc, x: IVec) -> IVec:
        k = self.ctx.size
        self.guard(len(x) * k, "cap inclusion")
        s = t.s
        out: IVec = {}
        for key, c in x.items():
            head, tail = key[:s], key[s:]
            for a in range(k):
                out[head + (a, a) + tail] = c
        return out

    def _LeftInc(self, t: LeftInc, x: IVec) -> IVec:
        ctx = self.ctx
        self.guard(len(x) * ctx.size ** t.w, "left inclusion")
        groups = ctx.words_by_alt(t.w)
        out = _Acc(self.W)
        sc = self.scale
        for key, c in x.items():
            for h, words in groups.items():
                e = ctx.lam(h, key) * sc
                for j in words:
                    out.add(j + key + j[::-1], c, e)
        return out.result()

    def _DiscInc(self, t: DiscInc, big: IVec, small: IVec) -> IVec:
        ctx = self.ctx
        r2, n2 = 2 * t.r, t.n2
        # the small disc's second half, read backwards, must match big[2r : 2r+n2]
        index: dict[Key, list] = {}
        for key, c in small.items():
            index.setdefault(key[n2:][::-1], []).append((key, c))
        out = _Acc(self.W)
        sc, W = self.scale, self.W
        count = 0
        for bkey, bc in big.items():
            matches = index.get(bkey[r2: r2 + n2])
            if not matches:
                continue
            count += len(matches)
            self.guard(count, "disc inclusion")
            h = ctx.alt(bkey[:r2])
            for skey, scoef in matches:
                e = ctx.lam(h, skey) * sc
                out.add(bkey[:r2] + skey[:n2] + bkey[r2 + n2:], _coeff_mul(bc, scoef, W), e)
        return out.result()

    def _Mult(self, t: Mult, x: IVec, y: IVec) -> IVec:
        n = t.n
        index: dict[Key, list] = {}
        for key, c in y.items():
            index.setdefault(key[:n], []).append((key, c))
        out = _Acc(self.W)
        W = self.W
        count = 0
        for xkey, xc in x.items():
            matches = index.get(xkey[n:][::-1])
            if not matches:
                continue
            count += len(matches)
            self.guard(count, "multiplication")
            for ykey, yc in matches:
                out.add(xkey[:n] + ykey[n:], _coeff_mul(xc, yc, W))
        return out.result()

    def _LCondExp(self, t: LCondExp, x: IVec) -> IVec:
        ctx = self.ctx
        self.guard(len(x) * ctx.size, "left conditional expectation")
        out = _Acc(self.W)
        sc = self.scale
        for key, c in x.items():
            k = key[0]
            if key[-1] != k:
                continue
            mid = key[1:-1]
            for a in range(ctx.size):
                e = ctx.lam(ctx.alt((a, k)), key) * sc
                out.add((a,) + mid + (a,), c, e)
        return out.result()

    def _Rot(self, t: Rot, x: IVec) -> IVec:
        ctx = self.ctx
        out = _Acc(self.W)
        sc = self.scale
        for key, c in x.items():
            e = ctx.lam(ctx.alt((key[1], key[0])), key) * sc
            out.add(key[2:] + key[:2], c, e)
        return out.result()


@lru_cache(maxsize=4096)
def _slot_count(t: TangleExpr) -> int:
    return len(color_of(t)[1])


def _to_internal(x: PAVector, W: int) -> IVec:
    return {key: c.rebase(W) for key, c in x.terms.items()}


def _to_vector(color: int, v: IVec, W: int) -> PAVector:
    return PAVector(color, {key: CycScalar(W, c) for key, c in v.items()})


def evaluate(ctx: EvalContext, t: TangleExpr, inputs: Sequence[PAVector] = (),
             *, check_inputs: bool = True) -> PAVector:
    """``Z_t(inputs)``: multilinear in the inputs, natural under composition."""
    report = validate(t)
    if not report:
        raise TangleError("; ".join(report.errors))
    out_color, slots = color_of(t)
    inputs = list(inputs)
    if len(inputs) != len(slots):
        raise ColorMismatch(f"tangle has {len(slots)} input slots, got {len(inputs)} inputs")
    W = ctx.conductor
    for k, (x, c) in enumerate(zip(inputs, slots)):
        if x.color != c:
            raise ColorMismatch(f"slot {k} has color {c}, input has color {x.color}")
        if check_inputs:
            x.validate(ctx.genset)
        for coeff in x.terms.values():
            W = _lcm(W, coeff.conductor)
    run = _Run(ctx, W)
    result = run.ev(t, [_to_internal(x, W) for x in inputs])
    return _to_vector(out_color, result, W)


# checks ----------------------------------------------------------------------------------

@dataclass
class CheckReport:
    ok: bool
    name: str = ""
    detail: str = ""
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def differential_check(ctx: EvalContext, t: TangleExpr, decompositions: Sequence[TangleExpr],
                       inputs: Sequence[PAVector]) -> CheckReport:
    """Evaluate ``t`` and each alternative decomposition; all results must agree."""
    sig = color_of(t)
    failures = []
    for k, d in enumerate(decompositions):
        if color_of(d) != sig:
            failures.append((k, f"color signature {color_of(d)} differs from {sig}"))
    if failures:
        return CheckReport(False, "differential", "signature mismatch", failures)
    ref = evaluate(ctx, t, inputs)
    for k, d in enumerate(decompositions):
        got = evaluate(ctx, d, inputs)
        if got != ref:
            diff = ref - got
            failures.append((k, f"{len(diff)} basis coefficients differ"))
    return CheckReport(not failures, "differential",
                       f"{len(decompositions)} decompositions", failures)


def star_compat_check(ctx: EvalContext, t: TangleExpr, inputs: Sequence[PAVector]) -> CheckReport:
    """``star(Z_t(xs)) == Z_{adjoint t}(star(x) for x in xs)``."""
    lhs = star(evaluate(ctx, t, inputs))
    rhs = evaluate(ctx, adjoint(t), [star(x) for x in inputs])
    ok = lhs == rhs
    return CheckReport(ok, "star", "" if ok else f"{len(lhs - rhs)} coefficients differ")


def trace_right(ctx: EvalContext, x: PAVector) -> CycScalar:
    """Normalised trace closing strands on the right: ``tr(1) = 1``."""
    n = x.color
    v = x
    for m in range(n, 0, -1):
        v = evaluate(ctx, Cap(m, m), [v], check_inputs=False)
    return v.coefficient(()) / Fraction(ctx.size) ** n


def trace_left(ctx: EvalContext, x: PAVector) -> CycScalar:
    """Normalised trace closing strands around the left (through the marked point)."""
    n = x.color
    v = x
    while v.color >= 2:
        m = v.color
        v = evaluate(ctx, Rot(m), [v], check_inputs=False)
        v = evaluate(ctx, Cap(m, 2 * m - 2), [v], check_inputs=False)
        v = evaluate(ctx, Cap(m - 1, 2 * m - 3), [v], check_inputs=False)
    if v.color == 1:
        v = evaluate(ctx, Cap(1, 1), [v], check_inputs=False)
    return v.coefficient(()) / Fraction(ctx.size) ** n
