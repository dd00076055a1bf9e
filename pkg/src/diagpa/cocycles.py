"""Circle-valued cochains on a group, coboundaries and 3-cocycles."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

from .groups import FiniteGroup, FreeGroup, Group, cyclic_group
from .scalars import Phase

__all__ = [
    "Cochain",
    "Cocycle3",
    "CocycleReport",
    "NotACocycle",
    "check_cocycle",
    "coboundary",
    "normalize",
    "is_normalized",
    "cyclic_cocycle",
    "trivial_cocycle",
    "cocycle_product",
    "cocycle_conj",
    "pullback",
    "DENSE_LIMIT",
]

DENSE_LIMIT = 64
_ONE = Phase()


class NotACocycle(ValueError):
    pass


def _require_finite(group: Group, what: str) -> FiniteGroup:
    if not isinstance(group, FiniteGroup):
        raise ValueError(f"{what} needs a finite group, got {group!r}")
    return group


class Cochain:
    """A function ``G**arity -> T``, given by a callable or an explicit table.

    A table is a mapping from argument tuples to :class:`Phase`; missing entries
    are 1.
    """

    def __init__(self, group: Group, arity: int, fn: Callable[..., Phase] | None = None,
                 table: dict[tuple, Phase] | None = None):
        if arity < 0:
            raise ValueError("arity must be nonnegative")
        if (fn is None) == (table is None):
            raise ValueError("give exactly one of fn or table")
        self.group = group
        self.arity = arity
        if table is not None:
            table = {tuple(k): v for k, v in table.items() if not v.is_one}
            self._fn = lambda *g: table.get(g, _ONE)
        else:
            self._fn = fn

    def __call__(self, *g) -> Phase:
        if len(g) != self.arity:
            raise TypeError(f"expected {self.arity} arguments, got {len(g)}")
        return self._fn(*g)

    def points(self):
        g = _require_finite(self.group, "enumerating a cochain")
        return itertools.product(g.elements, repeat=self.arity)

    def table(self) -> dict[tuple, Phase]:
        """All non-trivial values."""
        return {x: v for x in self.points() if not (v := self(*x)).is_one}

    def is_trivial(self) -> bool:
        return all(self(*x).is_one for x in self.points())

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if self.group != other.group or self.arity != other.arity:
            return False
        if isinstance(self.group, FreeGroup):
            return self.is_trivial_rule() and other.is_trivial_rule()
        return all(self(*x) == other(*x) for x in self.points())

    __hash__ = None

    def is_trivial_rule(self) -> bool:
        return False

    def __repr__(self):
        return f"{type(self).__name__}(group={self.group!r}, arity={self.arity})"


class Cocycle3(Cochain):
    """A circle-valued function of three group arguments.

    ``rule`` records a closed form (``("trivial",)`` or ``("cyclic", m, q)``) for
    serialisation; table-backed instances have ``rule = None``.  Finite groups up
    to :data:`DENSE_LIMIT` elements get a dense lookup table.
    """

    def __init__(self, group: Group, fn: Callable[..., Phase] | None = None,
                 table: dict[tuple, Phase] | None = None, rule: tuple | None = None):
        super().__init__(group, 3, fn=fn, table=table)
        self.rule = rule
        self._dense = None
        if isinstance(group, FiniteGroup) and group.order <= DENSE_LIMIT:
            els = group.elements
            raw = self._fn
            self._dense = tuple(
                tuple(tuple(raw(a, b, c) for c in els) for b in els) for a in els
            )
            dense = self._dense
            self._fn = lambda a, b, c: dense[a][b][c]
        if isinstance(group, FreeGroup) and rule != ("trivial",):
            raise ValueError("free groups only carry the trivial cocycle")

    def is_trivial_rule(self) -> bool:
        return self.rule == ("trivial",)

    @property
    def conductor(self) -> int:
        """Least N such that every value is an N-th root of unity."""
        if self.rule is not None:
            if self.rule[0] == "trivial":
                return 1
            if self.rule[0] == "cyclic":
                m, q = self.rule[1], self.rule[2]
                return m // gcd(m, q) if q else 1
        n = 1
        for x in self.points():
            d = self(*x).den
            n = n // gcd(n, d) * d
        return n

    def exponent_table(self, conductor: int) -> list[list[list[int]]]:
        """Nested list ``t[a][b][c]`` with ``omega(a,b,c) = zeta_conductor**t[a][b][c]``."""
        g = _require_finite(self.group, "an exponent table")
        els = g.elements
        return [[[self(a, b, c).exponent(conductor) for c in els] for b in els] for a in els]

    def is_normalized(self) -> bool:
        return is_normalized(self)


@dataclass
class CocycleReport:
    ok: bool
    violation: tuple | None = None
    checked: int = 0

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"cocycle identity holds on all {self.checked} quadruples"
        return f"cocycle identity fails at {self.violation}"


def check_cocycle(omega: Cochain) -> CocycleReport:
    """Exhaustive check of the 3-cocycle identity over all quadruples."""
    if omega.arity != 3:
        raise ValueError("check_cocycle expects a 3-cochain")
    g = _require_finite(omega.group, "check_cocycle")
    mul = g.mul
    count = 0
    for a, b, c, d in itertools.product(g.elements, repeat=4):
        count += 1
        lhs = omega(a, b, c) * omega(a, mul(b, c), d) * omega(b, c, d)
        rhs = omega(mul(a, b), c, d) * omega(a, b, mul(c, d))
        if lhs != rhs:
            return CocycleReport(False, (a, b, c, d), count)
    return CocycleReport(True, None, count)


def coboundary(phi: Cochain) -> Cochain:
    """The coboundary of an n-cochain, an (n+1)-cochain (n in 1, 2, 3)."""
    n = phi.arity
    if n not in (1, 2, 3):
        raise ValueError(f"unsupported arity {n}")
    g = _require_finite(phi.group, "coboundary")
    mul = g.mul

    def d(*x):
        val = phi(*x[1:])
        for i in range(1, n + 1):
            merged = x[: i - 1] + (mul(x[i - 1], x[i]),) + x[i + 1:]
            term = phi(*merged)
            val = val * (term if i % 2 == 0 else term.conj())
        last = phi(*x[:n])
        return val * (last if (n + 1) % 2 == 0 else last.conj())

    table = {x: v for x in itertools.product(g.elements, repeat=n + 1)
             if not (v := d(*x)).is_one}
    if n + 1 == 3:
        return Cocycle3(g, table=table)
    return Cochain(g, n + 1, table=table)


def is_normalized(omega: Cochain) -> bool:
    if isinstance(omega.group, FreeGroup):
        return omega.is_trivial_rule()
    g = _require_finite(omega.group, "is_normalized")
    e = g.identity
    for a, b in itertools.product(g.elements, repeat=2):
        if not (omega(e, a, b).is_one and omega(a, e, b).is_one and omega(a, b, e).is_one):
            return False
    return True


def normalization_cochain(omega: Cochain) -> Cochain:
    """The 2-cochain ``phi(a, b) = omega(a,e,e) * conj(omega(e,e,b))``."""
    g = _require_finite(omega.group, "normalize")
    e = g.identity
    return Cochain(g, 2, table={
        (a, b): omega(a, e, e) * omega(e, e, b).conj() for a in g.elements for b in g.elements
    })


def normalize(omega: Cocycle3) -> Cocycle3:
    """A normalised cocycle cohomologous to ``omega`` (``omega * d(phi)``)."""
    if isinstance(omega.group, FreeGroup):
        return omega
    report = check_cocycle(omega)
    if not report:
        raise NotACocycle(report.describe())
    if is_normalized(omega):
        return omega
    dphi = coboundary(normalization_cochain(omega))
    g = omega.group
    return Cocycle3(g, table={
        x: omega(*x) * dphi(*x) for x in itertools.product(g.elements, repeat=3)
    })


def cyclic_cocycle(m: int, q: int, group: FiniteGroup | None = None) -> Cocycle3:
    """``omega(a,b,c) = exp(2 pi i q a floor((b+c)/m) / m)`` on ``Z_m``."""
    if m < 1 or not (0 <= q < m):
        raise ValueError("need m >= 1 and 0 <= q < m")
    group = group or cyclic_group(m)
    if group.order != m:
        raise ValueError("group order does not match m")

    def fn(a, b, c):
        return Phase(q * a * ((b + c) // m), m)

    return Cocycle3(group, fn=fn, rule=("cyclic", m, q))


def trivial_cocycle(group: Group) -> Cocycle3:
    return Cocycle3(group, fn=lambda a, b, c: _ONE, rule=("trivial",))


def _same_group(a: Cochain, b: Cochain) -> Group:
    if a.group != b.group:
        raise ValueError("cocycles live on different groups")
    return a.group


def cocycle_product(w1: Cocycle3, w2: Cocycle3) -> Cocycle3:
    g = _same_group(w1, w2)
    if isinstance(g, FreeGroup):
        return trivial_cocycle(g)
    return Cocycle3(g, fn=lambda a, b, c: w1(a, b, c) * w2(a, b, c))


def cocycle_conj(w: Cocycle3) -> Cocycle3:
    if isinstance(w.group, FreeGroup):
        return w
    return Cocycle3(w.group, fn=lambda a, b, c: w(a, b, c).conj())


def pullback(omega: Cocycle3, group: FiniteGroup, hom: Sequence[int]) -> Cocycle3:
    """``omega`` composed with a homomorphism ``group -> omega.group`` given as a list."""
    _require_finite(omega.group, "pullback")
    for a in group.elements:
        for b in group.elements:
            if hom[group.mul(a, b)] != omega.group.mul(hom[a], hom[b]):
                raise ValueError("map is not a homomorphism")
    return Cocycle3(group, fn=lambda a, b, c: omega(hom[a], hom[b], hom[c]))
