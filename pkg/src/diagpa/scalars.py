"""Exact arithmetic on roots of unity and their integer combinations.

A :class:`Phase` is a point of the circle group stored as a reduced fraction
of a full turn.  A :class:`CycScalar` is an element of ``Q(zeta_N)`` written in
the power basis of ``zeta_N = exp(2 pi i / N)`` and reduced modulo the N-th
cyclotomic polynomial, so equality is decided exactly.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "Phase",
    "CycScalar",
    "ConductorOverflow",
    "phase_mul",
    "phase_conj",
    "cyc_add",
    "cyc_mul",
    "cyc_conj",
    "cyc_is_zero",
    "cyclotomic_poly",
    "get_conductor_bound",
    "set_conductor_bound",
]

_CONDUCTOR_BOUND = 10**6


class ConductorOverflow(ValueError):
    """Raised when an operation would need a conductor above the configured bound."""


def get_conductor_bound() -> int:
    return _CONDUCTOR_BOUND


def set_conductor_bound(bound: int) -> None:
    global _CONDUCTOR_BOUND
    if bound < 1:
        raise ValueError("conductor bound must be positive")
    _CONDUCTOR_BOUND = bound


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _check_conductor(n: int) -> int:
    if n > _CONDUCTOR_BOUND:
        raise ConductorOverflow(f"conductor {n} exceeds bound {_CONDUCTOR_BOUND}")
    return n


class Phase:
    """The root of unity ``exp(2 pi i num/den)`` in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: int = 0, den: int = 1):
        if den <= 0:
            raise ValueError(f"phase denominator must be positive, got {den}")
        num %= den
        if num == 0:
            den = 1
        else:
            g = gcd(num, den)
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Phase is immutable")

    @classmethod
    def parse(cls, text: str) -> Phase:
        """Parse ``"num/den"`` (a bare integer means ``num/1``)."""
        text = text.strip()
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text), 1)

    @property
    def is_one(self) -> bool:
        return self.num == 0

    def exponent(self, conductor: int) -> int:
        """The k with ``self == zeta_conductor**k``; conductor must be a multiple of den."""
        if conductor % self.den:
            raise ValueError(f"phase {self} is not a {conductor}-th root of unity")
        return self.num * (conductor // self.den)

    def __mul__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self.num * other.den + other.num * self.den, self.den * other.den)

    def __truediv__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return self * other.conj()

    def __pow__(self, k: int) -> Phase:
        return Phase(self.num * k, self.den)

    def conj(self) -> Phase:
        return Phase(-self.num, self.den)

    def __eq__(self, other):
        if not isinstance(other, Phase):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"Phase({self.num}, {self.den})"

    def __complex__(self):
        return cmath.exp(2j * cmath.pi * self.num / self.den)


def phase_mul(a: Phase, b: Phase) -> Phase:
    return a * b


def phase_conj(a: Phase) -> Phase:
    return a.conj()


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Obtained by dividing ``x**n - 1`` by every ``Phi_d`` with ``d | n, d < n``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            q[k - dd] = c
            for t, dc in enumerate(den):
                num[k - dd + t] -= c * dc
    assert not any(num[:dd]), "non-exact cyclotomic division"
    return q


def _reduce(conductor: int, coeffs: Mapping[int, int | Fraction]) -> dict[int, int | Fraction]:
    """Reduce a polynomial in zeta_N to degree < phi(N); drop zero coefficients."""
    if conductor == 1:
        total = sum(coeffs.values())
        return {0: total} if total else {}
    phi = cyclotomic_poly(conductor)
    deg = len(phi) - 1
    arr = [0] * conductor
    for k, c in coeffs.items():
        arr[k % conductor] += c
    for k in range(conductor - 1, deg - 1, -1):
        c = arr[k]
        if c:
            base = k - deg
            for t in range(deg):
                pt = phi[t]
                if pt:
                    arr[base + t] -= c * pt
            arr[k] = 0
    return {k: c for k, c in enumerate(arr[:deg]) if c}


def _normalize_number(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class CycScalar:
    """An element ``sum_k c_k zeta_N**k`` of a cyclotomic field, kept reduced mod Phi_N.

    Coefficients are integers in normal use; division by an integer (used for
    normalised traces) produces rational coefficients.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int = 1, coeffs: Mapping[int, int | Fraction] | None = None):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        _check_conductor(conductor)
        reduced = _reduce(conductor, coeffs or {})
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(
            self, "coeffs", {k: _normalize_number(c) for k, c in sorted(reduced.items())}
        )

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    # construction -----------------------------------------------------------------
    @classmethod
    def zero(cls) -> CycScalar:
        return cls(1, {})

    @classmethod
    def one(cls) -> CycScalar:
        return cls(1, {0: 1})

    @classmethod
    def from_int(cls, n: int | Fraction) -> CycScalar:
        return cls(1, {0: n})

    @classmethod
    def from_phase(cls, p: Phase, mult: int | Fraction = 1) -> CycScalar:
        return cls(p.den, {p.num: mult})

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> CycScalar:
        return cls(n, {k % n: 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Phase, int | Fraction]]) -> CycScalar:
        """Sum of ``mult * phase`` over the given pairs."""
        terms = list(terms)
        n = 1
        for p, _ in terms:
            n = _lcm(n, p.den)
        _check_conductor(n)
        acc: dict[int, int | Fraction] = {}
        for p, m in terms:
            k = p.exponent(n)
            acc[k] = acc.get(k, 0) + m
        return cls(n, acc)

    @classmethod
    def coerce(cls, x) -> CycScalar:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, Phase):
            return cls.from_phase(x)
        if isinstance(x, (int, Fraction)):
            return cls.from_int(x)
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic scalar")

    # conversions ------------------------------------------------------------------
    def rebase(self, conductor: int) -> dict[int, int | Fraction]:
        """Unreduced coefficient map of the same number over a multiple of the conductor."""
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        f = conductor // self.conductor
        return {k * f: c for k, c in self.coeffs.items()}

    def terms(self) -> list[tuple[Phase, int | Fraction]]:
        """(phase, multiplicity) pairs; this is the serialised form."""
        return [(Phase(k, self.conductor), c) for k, c in self.coeffs.items()]

    def as_phase(self) -> Phase | None:
        """The phase this scalar equals, if it is a single root of unity."""
        if len(self.coeffs) == 1:
            ((k, c),) = self.coeffs.items()
            if c == 1:
                return Phase(k, self.conductor)
        # a root of unity may have a multi-term reduced form (e.g. zeta_3**2 = -1 - zeta_3)
        for k in range(self.conductor):
            cand = CycScalar(self.conductor, {k: 1})
            if cand == self:
                return Phase(k, self.conductor)
        return None

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return complex(sum(float(c) * z**k for k, c in self.coeffs.items()))

    # ring operations --------------------------------------------------------------
    def _common(self, other: CycScalar) -> tuple[int, dict, dict]:
        n = _check_conductor(_lcm(self.conductor, other.conductor))
        return n, self.rebase(n), other.rebase(n)

    def __add__(self, other) -> CycScalar:
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        n, a, b = self._common(other)
        for k, c in b.items():
            a[k] = a.get(k, 0) + c
        return CycScalar(n, a)

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.conductor, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other) -> CycScalar:
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycScalar:
        return CycScalar.coerce(other) - self

    def __mul__(self, other) -> CycScalar:
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.conductor, {k: c * other for k, c in self.coeffs.items()})
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        n, a, b = self._common(other)
        acc: dict[int, int | Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % n
                acc[k] = acc.get(k, 0) + c1 * c2
        return CycScalar(n, acc)

    __rmul__ = __mul__

    def __truediv__(self, other: int | Fraction) -> CycScalar:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of a cyclotomic scalar by zero")
        return CycScalar(self.conductor, {k: Fraction(c) / other for k, c in self.coeffs.items()})

    def conj(self) -> CycScalar:
        n = self.conductor
        return CycScalar(n, {(-k) % n: c for k, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        try:
            other = CycScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # equality is semantic; no canonical hash across conductors

    def __repr__(self):
        if not self.coeffs:
            return "CycScalar(0)"
        parts = [f"{c}*z{self.conductor}^{k}" for k, c in self.coeffs.items()]
        return "CycScalar(" + " + ".join(parts) + ")"


def cyc_add(a: CycScalar, b: CycScalar) -> CycScalar:
    return a + b


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


def cyc_conj(a: CycScalar) -> CycScalar:
    return a.conj()


def cyc_is_zero(a: CycScalar) -> bool:
    return a.is_zero()
