"""The graded vector spaces P_n, their word basis, the lambda phases and the star map.

A basis element of ``P_n`` is a tuple of ``2n`` generator indices whose
alternating product is the identity; ``P_0`` is spanned by the empty tuple.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .cocycles import Cocycle3
from .groups import GenSet, alt
from .scalars import CycScalar, Phase

__all__ = [
    "PAVector",
    "ColorMismatch",
    "InvalidBasisElement",
    "lambda_term",
    "lambda_coeff",
    "vec_add",
    "vec_scale",
    "vec_equal",
    "star",
    "unit",
    "basis_enumerate",
    "BASIS_CAP",
]

BASIS_CAP = 10**7

Key = tuple[int, ...]


class ColorMismatch(ValueError):
    pass


class InvalidBasisElement(ValueError):
    pass


def lambda_term(genset: GenSet, omega: Cocycle3, j: Sequence[int], i: Sequence[int],
                s: int) -> Phase:
    """The s-th factor (1-based) of ``lambda_j(i)``; depends on j only through alt(j)."""
    if not 1 <= s <= len(i):
        raise IndexError(f"position {s} out of range 1..{len(i)}")
    h = alt(genset, j)
    g = genset.images[i[s - 1]]
    if s % 2:
        return omega(h, alt(genset, i[:s]), g).conj()
    return omega(h, alt(genset, i[: s - 1]), g)


def lambda_coeff(genset: GenSet, omega: Cocycle3, j: Sequence[int], i: Sequence[int]) -> Phase:
    """``lambda_j(i)``, the product of all :func:`lambda_term` factors (1 for empty i)."""
    h = alt(genset, j)
    if h == genset.group.identity:
        return Phase()
    total = Phase()
    prefix = genset.group.identity
    for s, idx in enumerate(i, 1):
        g = genset.images[idx]
        if s % 2:
            prefix = genset.step(prefix, idx, s)
            total = total * omega(h, prefix, g).conj()
        else:
            total = total * omega(h, prefix, g)
            prefix = genset.step(prefix, idx, s)
    return total


class PAVector:
    """A sparse combination of basis words of ``P_color`` with cyclotomic coefficients."""

    __slots__ = ("color", "terms")

    def __init__(self, color: int, terms: Mapping[Sequence[int], object] | None = None):
        if color < 0:
            raise ValueError("color must be nonnegative")
        clean: dict[Key, CycScalar] = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != 2 * color:
                raise InvalidBasisElement(
                    f"word {key} has length {len(key)}, expected {2 * color}")
            c = CycScalar.coerce(c)
            if key in clean:
                c = clean[key] + c
            if c.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = c
        self.color = color
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def zero(cls, color: int) -> PAVector:
        return cls(color)

    @classmethod
    def basis(cls, key: Sequence[int], coeff=1) -> PAVector:
        key = tuple(key)
        if len(key) % 2:
            raise InvalidBasisElement(f"word {key} has odd length")
        return cls(len(key) // 2, {key: coeff})

    def validate(self, genset: GenSet) -> None:
        e = genset.group.identity
        for key in self.terms:
            if alt(genset, key) != e:
                raise InvalidBasisElement(f"word {key} does not alternate to the identity")

    def support(self) -> frozenset[Key]:
        return frozenset(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Key, CycScalar]]:
        return iter(self.terms.items())

    def coefficient(self, key: Sequence[int]) -> CycScalar:
        return self.terms.get(tuple(key), CycScalar.zero())

    def _check(self, other: PAVector) -> None:
        if not isinstance(other, PAVector):
            raise TypeError(f"expected PAVector, got {type(other).__name__}")
        if other.color != self.color:
            raise ColorMismatch(f"colors {self.color} and {other.color} differ")

    def __add__(self, other: PAVector) -> PAVector:
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return PAVector(self.color, terms)

    def __neg__(self) -> PAVector:
        return PAVector(self.color, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: PAVector) -> PAVector:
        return self + (-other)

    def scale(self, a) -> PAVector:
        a = CycScalar.coerce(a)
        if a.is_zero():
            return PAVector(self.color)
        return PAVector(self.color, {k: a * c for k, c in self.terms.items()})

    def __rmul__(self, a) -> PAVector:
        return self.scale(a)

    def __eq__(self, other):
        if not isinstance(other, PAVector):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    __hash__ = None

    def star(self) -> PAVector:
        return PAVector(self.color, {k[::-1]: c.conj() for k, c in self.terms.items()})

    def __repr__(self):
        body = ", ".join(f"{k}: {c!r}" for k, c in list(self.terms.items())[:6])
        more = ", ..." if len(self.terms) > 6 else ""
        return f"PAVector({self.color}, {{{body}{more}}})"


def vec_add(a: PAVector, b: PAVector) -> PAVector:
    return a + b


def vec_scale(a: PAVector, c) -> PAVector:
    return a.scale(c)


def vec_equal(a: PAVector, b: PAVector) -> bool:
    return a == b


def star(x: PAVector) -> PAVector:
    """Reverse every word and conjugate every coefficient."""
    return x.star()


def unit(genset: GenSet | int, n: int) -> PAVector:
    """The identity of ``P_n``: the sum of all palindromes ``(i, reversed(i))``."""
    k = genset if isinstance(genset, int) else genset.size
    if n < 0:
        raise ValueError("n must be nonnegative")
    return PAVector(n, {w + w[::-1]: 1 for w in itertools.product(range(k), repeat=n)})


def _suffix_targets(genset: GenSet, length: int) -> list[set]:
    """``targets[r]``: prefix values that some length-r tail (ending at an even
    position) sends to the identity."""
    group = genset.group
    targets = [{group.identity}]
    for r in range(1, length + 1):
        pos = length - r + 1
        step_inv = [group.inv(genset.step(group.identity, i, pos)) for i in range(genset.size)]
        targets.append({group.mul(t, s) for t in targets[r - 1] for s in step_inv})
    return targets


def basis_enumerate(genset: GenSet, n: int, cap: int = BASIS_CAP) -> list[Key]:
    """All words of length 2n with trivial alternating product, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    length = 2 * n
    if genset.size ** length > cap:
        raise OverflowError(f"|I|^{length} = {genset.size ** length} exceeds the cap {cap}")
    targets = _suffix_targets(genset, length)
    out: list[Key] = []
    word: list[int] = []

    def rec(pos: int, x) -> None:
        if pos > length:
            out.append(tuple(word))
            return
        need = targets[length - pos]
        for i in range(genset.size):
            y = genset.step(x, i, pos)
            if y in need:
                word.append(i)
                rec(pos + 1, y)
                word.pop()

    if genset.group.identity in targets[length]:
        rec(1, genset.group.identity)
    return out


def iter_words(size: int, length: int) -> Iterable[Key]:
    return itertools.product(range(size), repeat=length)
