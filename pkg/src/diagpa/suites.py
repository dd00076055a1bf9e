"""Seeded self-check suites over one evaluation context.

Each suite returns a :class:`SuiteReport`; ``run_suites`` runs a named suite or
all of them.  Randomised suites draw from ``random.Random(seed)`` and the seed
is part of every report line.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .cocycles import (Cochain, Cocycle3, check_cocycle, coboundary, is_normalized, normalize,
                       normalization_cochain, trivial_cocycle)
from .corpus import make_corpus
from .evaluator import (EvalContext, differential_check, evaluate, star_compat_check,
                        trace_left, trace_right)
from .groups import FreeGroup, alt
from .pacore import PAVector, basis_enumerate, lambda_coeff, lambda_term, star, unit
from .scalars import CycScalar, Phase
from .structure import dim_pn, loop_count, principal_graph
from .tangles import (TL, Cap, CapInc, DiscInc, JonesE, LCondExp, LeftInc, Mult, RCondExp, Rot,
                      color_of, compose_chain, lcond_expansion, rot_expansion, to_sexp)

__all__ = ["SuiteReport", "SUITES", "run_suites", "primitives_up_to", "random_vector"]

MAX_FAILURES = 10


@dataclass
class SuiteReport:
    name: str
    seed: int | None
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(msg)
        elif len(self.failures) == MAX_FAILURES:
            self.failures.append("further failures suppressed")

    def expect(self, ok: bool, msg: Callable[[], str] | str) -> None:
        self.checked += 1
        if not ok:
            self.fail(msg() if callable(msg) else msg)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = f" ({self.note})" if self.note else ""
        return (f"{verdict} {self.name}: {self.checked} checks, seed={self.seed}, "
                f"{self.seconds:.2f}s{extra}")

    def to_json(self) -> dict:
        return {"suite": self.name, "seed": self.seed, "passed": self.passed,
                "checked": self.checked, "failures": self.failures,
                "seconds": round(self.seconds, 3), "note": self.note}


def random_vector(ctx: EvalContext, n: int, rng: random.Random, terms: int = 3) -> PAVector:
    basis = _basis(ctx, n)
    root = 2 * ctx.conductor
    v = PAVector(n)
    for _ in range(rng.randint(1, terms)):
        c = CycScalar.zeta(root, rng.randrange(root)) * rng.choice((1, 1, 2, -1))
        v = v + PAVector.basis(rng.choice(basis), c)
    return v


def _basis(ctx: EvalContext, n: int) -> list:
    cache = ctx.__dict__.setdefault("_basis_cache", {})
    if n not in cache:
        cache[n] = basis_enumerate(ctx.genset, n)
    return cache[n]


def _words(ctx, rng, length):
    return tuple(rng.randrange(ctx.size) for _ in range(length))


def _show(w):
    return "(" + ",".join(map(str, w)) + ")"


# lambda identities ---------------------------------------------------------------------

def _pairing_word(ctx, rng, pairs: int) -> tuple:
    """Labels of a random non-crossing matched pairing on 2*pairs points."""
    word = [None] * (2 * pairs)

    def fill(lo, hi):
        if lo > hi:
            return
        partner = rng.randrange(lo + 1, hi + 1, 2)
        word[lo] = word[partner] = rng.randrange(ctx.size)
        fill(lo + 1, partner - 1)
        fill(partner + 1, hi)

    fill(0, 2 * pairs - 1)
    return tuple(word)


def suite_pair1(ctx: EvalContext, rng: random.Random, count: int = 1000) -> SuiteReport:
    """Inserting a repeated index leaves lambda unchanged; matched pairings give 1;
    reversal conjugates; lambda depends on j only through alt(j)."""
    rep = SuiteReport("pair1", None)
    gs, om = ctx.genset, ctx.omega
    one = Phase()
    for _ in range(count):
        j = _words(ctx, rng, rng.randint(0, 8))
        i = _words(ctx, rng, rng.randint(0, 6))
        s = rng.randint(0, len(i))
        a = rng.randrange(ctx.size)
        longer = i[:s] + (a, a) + i[s:]
        rep.expect(lambda_coeff(gs, om, j, i) == lambda_coeff(gs, om, j, longer),
                   lambda: f"pair1 j={_show(j)} i={_show(i)} s={s} a={a}")
        p = _pairing_word(ctx, rng, rng.randint(0, 4))
        rep.expect(lambda_coeff(gs, om, j, p) == one,
                   lambda: f"pair2 j={_show(j)} i={_show(p)}")
        b = rng.choice(_basis(ctx, rng.randint(0, 4)))
        rep.expect(lambda_coeff(gs, om, j, b[::-1]) == lambda_coeff(gs, om, j, b).conj(),
                   lambda: f"lambda* j={_show(j)} i={_show(b)}")
        j2 = _words(ctx, rng, rng.randint(0, 8))
        if alt(gs, j2) == alt(gs, j):
            rep.expect(lambda_coeff(gs, om, j, i) == lambda_coeff(gs, om, j2, i),
                       lambda: f"alt-dependence j={_show(j)} j'={_show(j2)} i={_show(i)}")
    return rep


def suite_leftinc1(ctx: EvalContext, rng: random.Random, count: int = 1000) -> SuiteReport:
    """lambda_(k,j)(i) = lambda_k(j,i,~j) lambda_j(i) and its factorwise refinement."""
    rep = SuiteReport("leftinc1", None)
    gs, om = ctx.genset, ctx.omega
    for _ in range(count):
        i = rng.choice(_basis(ctx, rng.randint(0, 4)))
        j = _words(ctx, rng, 2 * rng.randint(0, 4))
        k = _words(ctx, rng, 2 * rng.randint(0, 4))
        wrapped = j + i + j[::-1]
        lhs = lambda_coeff(gs, om, k + j, i)
        rhs = lambda_coeff(gs, om, k, wrapped) * lambda_coeff(gs, om, j, i)
        rep.expect(lhs == rhs, lambda: f"leftinc1 k={_show(k)} j={_show(j)} i={_show(i)}")
        tail = Phase()
        for s in range(len(j) + 1, len(j) + len(i) + 1):
            tail = tail * lambda_term(gs, om, k, wrapped, s)
        rep.expect(lambda_coeff(gs, om, k, wrapped) == tail,
                   lambda: f"leftinc2 k={_show(k)} j={_show(j)} i={_show(i)}")
    return rep


# algebra ------------------------------------------------------------------------------

def primitives_up_to(n_max: int) -> list:
    """Every primitive whose slots and output have color at most n_max (DiscInc inner
    color capped at n_max as well)."""
    out = []
    for n in range(0, n_max + 1):
        out += [Cap(n, m) for m in range(1, 2 * n)]
        out += [CapInc(n, s) for s in range(0, 2 * n + 1) if n + 1 <= n_max]
        out += [LeftInc(n, 2)] if n + 2 <= n_max else []
        out += [Mult(n)]
        out += [DiscInc(n, r, c) for r in range(n + 1) for c in range(0, n_max + 1)
                if 2 * r + c <= 2 * n]
        if n >= 1:
            out += [LCondExp(n), Rot(n)]
            if n + 1 <= n_max:
                out += [JonesE(n)]
        if n + 1 <= n_max:
            out += [RCondExp(n)]
        for pairing in _all_tl(n):
            out.append(TL(n, pairing, 0))
    return out


def _all_tl(n: int) -> list:
    def rec(points):
        if not points:
            yield ()
            return
        a = points[0]
        for k in range(1, len(points), 2):
            for left in rec(points[1:k]):
                for right in rec(points[k + 1:]):
                    yield ((a, points[k]),) + left + right
    return list(rec(tuple(range(1, 2 * n + 1))))


def _inputs_for(ctx, slots, rng, full_limit):
    """Full basis tuples when small enough, otherwise a random sample."""
    bases = [[PAVector.basis(b) for b in _basis(ctx, c)] for c in slots]
    total = 1
    for b in bases:
        total *= len(b)
    if total <= full_limit:
        return list(itertools.product(*bases)), True
    return [tuple(rng.choice(b) for b in bases) for _ in range(full_limit)], False


def suite_star(ctx: EvalContext, rng: random.Random, n_max: int = 3,
               full_limit: int = 3000) -> SuiteReport:
    """Multiplication laws, the star map, and star compatibility of every primitive."""
    rep = SuiteReport("star", None)
    sampled = []
    for n in range(n_max + 1):
        basis = [PAVector.basis(b) for b in _basis(ctx, n)]
        one = unit(ctx.size, n)
        product: dict = {}
        for x in basis:
            rep.expect(evaluate(ctx, Mult(n), [one, x]) == x, lambda: f"left unit {x}")
            rep.expect(evaluate(ctx, Mult(n), [x, one]) == x, lambda: f"right unit {x}")
            for y in basis:
                xy = evaluate(ctx, Mult(n), [x, y], check_inputs=False)
                if not xy.is_zero():
                    product[(_key(x), _key(y))] = xy
                rep.expect(star(xy) == evaluate(ctx, Mult(n), [star(y), star(x)],
                                                check_inputs=False),
                           lambda: f"anti-multiplicative {x} {y}")
        _check_assoc(rep, basis, product)
        for _ in range(20):
            x, y = random_vector(ctx, n, rng), random_vector(ctx, n, rng)
            a = CycScalar.zeta(12, rng.randrange(12)) + rng.randrange(3)
            rep.expect(star(star(x)) == x, lambda: f"involution {x}")
            rep.expect(star(x.scale(a) + y) == star(x).scale(a.conj()) + star(y),
                       lambda: f"conjugate-linear {x} {y}")
    for t in primitives_up_to(n_max):
        _, slots = color_of(t)
        tuples, full = _inputs_for(ctx, slots, rng, full_limit)
        if not full:
            sampled.append(to_sexp(t))
        for xs in tuples:
            rep.expect(bool(star_compat_check(ctx, t, list(xs))),
                       lambda: f"star compatibility {to_sexp(t)} on {list(xs)}")
    if sampled:
        rep.note = f"{len(sampled)} two-slot primitives checked on {full_limit} sampled pairs"
    return rep


def _key(x: PAVector):
    (k,) = x.terms
    return k


def _check_assoc(rep: SuiteReport, basis, product) -> None:
    """(xy)z = x(yz) on every basis triple, from the table of basis products."""
    keys = [_key(b) for b in basis]
    by_left: dict = {}
    for (a, b), v in product.items():
        by_left.setdefault(a, []).append((b, v))

    def times(v: PAVector, z, side):
        out = None
        for w, c in v.terms.items():
            p = product.get((w, z) if side == "r" else (z, w))
            if p is not None:
                out = p.scale(c) if out is None else out + p.scale(c)
        return out

    lhs: dict = {}
    for (x, y), xy in product.items():
        for z in keys:
            v = times(xy, z, "r")
            if v is not None and not v.is_zero():
                lhs[(x, y, z)] = v
    rhs: dict = {}
    for (y, z), yz in product.items():
        for x in keys:
            v = times(yz, x, "l")
            if v is not None and not v.is_zero():
                rhs[(x, y, z)] = v
    rep.expect(set(lhs) == set(rhs), "associativity: nonzero triples differ")
    for t, v in lhs.items():
        rep.expect(t in rhs and rhs[t] == v, lambda: f"associativity at {t}")


# Temperley-Lieb -------------------------------------------------------------------------

def suite_tl(ctx: EvalContext, rng: random.Random, n_max: int = 3) -> SuiteReport:
    rep = SuiteReport("tl", None)
    k = ctx.size
    jones = {n: evaluate(ctx, JonesE(n)) for n in range(1, n_max + 2)}
    for n in range(1, n_max + 1):
        e = jones[n]
        rep.expect(evaluate(ctx, Mult(n + 1), [e, e]) == e.scale(k), f"E_{n}^2 = |I| E_{n}")
        rep.expect(evaluate(ctx, RCondExp(n), [e]) == unit(k, n), f"E(E_{n}) = 1")
        up = evaluate(ctx, CapInc(n + 1, n + 1), [e])
        big = jones[n + 1]
        m = lambda a, b: evaluate(ctx, Mult(n + 2), [a, b])  # noqa: E731
        rep.expect(m(m(up, big), up) == up, f"E_{n} E_{n + 1} E_{n} = E_{n}")
        rep.expect(m(m(big, up), big) == big, f"E_{n + 1} E_{n} E_{n + 1} = E_{n + 1}")
        t = TL(n, rng.choice(_all_tl(n)), 1)
        rep.expect(evaluate(ctx, t) == evaluate(ctx, TL(n, t.pairs, 0)).scale(k),
                   f"closed loop on color {n}")
    return rep


# naturality -----------------------------------------------------------------------------

def suite_naturality(ctx: EvalContext, rng: random.Random, size: int = 60,
                     n_max: int = 3) -> SuiteReport:
    rep = SuiteReport("naturality", None)
    for entry in make_corpus(rng, size):
        ins = [random_vector(ctx, c, rng) for c in color_of(entry.tangle)[1]]
        r = differential_check(ctx, entry.tangle, entry.decompositions, ins)
        rep.expect(r.ok, lambda: f"corpus {to_sexp(entry.tangle)}: {r.failures}")
    for n in range(1, n_max + 1):
        pairs = [(RCondExp(n - 1), Cap(n, n)), (LCondExp(n), lcond_expansion(n)),
                 (Rot(n), rot_expansion(n))]
        for b in _basis(ctx, n):
            x = PAVector.basis(b)
            for t, d in pairs:
                r = differential_check(ctx, t, [d], [x])
                rep.expect(r.ok, lambda: f"{to_sexp(t)} vs {to_sexp(d)} on {_show(b)}")
    return rep


def suite_rotation(ctx: EvalContext, rng: random.Random, n_max: int = 3) -> SuiteReport:
    rep = SuiteReport("rotation", None)
    for n in range(1, n_max + 1):
        full = compose_chain(*[Rot(n)] * n)
        for b in _basis(ctx, n):
            x = PAVector.basis(b)
            rep.expect(evaluate(ctx, full, [x]) == x, lambda: f"Rot({n})^{n} on {_show(b)}")
    return rep


def suite_sphere(ctx: EvalContext, rng: random.Random, n_max: int = 3) -> SuiteReport:
    rep = SuiteReport("sphere", None)
    for n in range(n_max + 1):
        for b in _basis(ctx, n):
            x = PAVector.basis(b)
            rep.expect(trace_left(ctx, x) == trace_right(ctx, x),
                       lambda: f"left and right traces differ on {_show(b)}")
        rep.expect(trace_right(ctx, unit(ctx.size, n)) == 1, f"tr(1) = 1 on color {n}")
    return rep


def suite_loops(ctx: EvalContext, rng: random.Random, n_max: int | None = None) -> SuiteReport:
    rep = SuiteReport("loops", None)
    if n_max is None:
        n_max = 3 if isinstance(ctx.genset.group, FreeGroup) else 4
    graph = principal_graph(ctx, n_max)
    for n in range(n_max + 1):
        d = dim_pn(ctx, n)
        rep.expect(loop_count(graph, n) == d, f"loop count vs dimension at n={n}")
        if ctx.size ** (2 * n) <= 10**6:
            rep.expect(len(_basis(ctx, n)) == d, f"enumeration vs dimension at n={n}")
    return rep


def suite_cocycle(ctx: EvalContext, rng: random.Random) -> SuiteReport:
    rep = SuiteReport("cocycle", None)
    group = ctx.genset.group
    if isinstance(group, FreeGroup):
        rep.expect(ctx.omega.is_trivial_rule(), "free group carries the trivial cocycle")
        rep.note = "free group: only the trivial cocycle is admitted"
        return rep
    report = check_cocycle(ctx.omega)
    rep.expect(report.ok, report.describe)
    rep.expect(is_normalized(ctx.omega), "cocycle is normalized")
    rep.expect(coboundary(ctx.omega).is_trivial(), "coboundary of the cocycle is trivial")
    # twist by a random coboundary, then normalize again
    phi = Cochain(group, 2, table={(a, b): Phase(rng.randrange(6), 6)
                                   for a in group.elements for b in group.elements})
    d = coboundary(phi)
    twisted = Cocycle3(group, fn=lambda a, b, c: ctx.omega(a, b, c) * d(a, b, c))
    rep.expect(check_cocycle(twisted).ok, "twisted cocycle passes the cocycle check")
    normed = normalize(twisted)
    rep.expect(is_normalized(normed), "normalize gives a normalized cocycle")
    psi = coboundary(normalization_cochain(twisted))
    rep.expect(all(normed(*x) == twisted(*x) * psi(*x) for x in normed.points()),
               "normalize differs by the stated coboundary")
    return rep


def suite_skeleton(ctx: EvalContext, rng: random.Random, size: int = 60) -> SuiteReport:
    """Supports of tangle actions and the principal graph do not see the cocycle."""
    rep = SuiteReport("skeleton", None)
    plain = EvalContext(ctx.genset, trivial_cocycle(ctx.genset.group))
    for entry in make_corpus(rng, size):
        ins = [PAVector.basis(rng.choice(_basis(ctx, c))) for c in color_of(entry.tangle)[1]]
        a = evaluate(ctx, entry.tangle, ins).support()
        b = evaluate(plain, entry.tangle, ins).support()
        rep.expect(a == b, lambda: f"support differs for {to_sexp(entry.tangle)}")
    depth = 3 if isinstance(ctx.genset.group, FreeGroup) else 4
    rep.expect(principal_graph(ctx, depth) == principal_graph(plain, depth),
               "principal graph depends on the cocycle")
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "cocycle": suite_cocycle,
    "pair1": suite_pair1,
    "leftinc1": suite_leftinc1,
    "star": suite_star,
    "tl": suite_tl,
    "naturality": suite_naturality,
    "rotation": suite_rotation,
    "sphere": suite_sphere,
    "loops": suite_loops,
    "skeleton": suite_skeleton,
}


def run_suites(ctx: EvalContext, name: str = "all", seed: int = 0) -> list[SuiteReport]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for k, nm in enumerate(names):
        if nm not in SUITES:
            raise KeyError(f"unknown suite {nm!r}")
        rng = random.Random(f"{seed}:{nm}")
        t0 = time.perf_counter()
        rep = SUITES[nm](ctx, rng)
        rep.seed = seed
        rep.seconds = time.perf_counter() - t0
        out.append(rep)
    return out
