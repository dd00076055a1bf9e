"""Group backends, generating families and the alternating-word map.

Finite groups are given by a Cayley table over dense integer indices.  Free
groups use freely reduced words, encoded as tuples of nonzero integers where
``k`` stands for the k-th generator (1-based) and ``-k`` for its inverse.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Sequence

__all__ = [
    "Group",
    "FiniteGroup",
    "FreeGroup",
    "GenSet",
    "GroupReport",
    "check_group",
    "cyclic_group",
    "symmetric_group",
    "dihedral_group",
    "alt",
    "ball",
    "reduce_word",
    "word_multiply",
    "word_invert",
]

Element = Hashable


class Group:
    """Common interface of the group backends."""

    identity: Element
    is_finite: bool = True

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def name(self, a) -> str:
        raise NotImplementedError

    def parse(self, name: str):
        raise NotImplementedError


@dataclass
class GroupReport:
    ok: bool
    violation: str | None = None

    def __bool__(self):
        return self.ok


def check_group(table: Sequence[Sequence[int]], identity: int | None = None) -> GroupReport:
    """Brute-force check of the group axioms for a square Cayley table.

    If ``identity`` is None the identity is searched for.  Returns the first
    violated axiom (closure, identity, inverse, associativity, in that order).
    """
    m = len(table)
    if m == 0:
        return GroupReport(False, "empty table")
    for a, row in enumerate(table):
        if len(row) != m:
            return GroupReport(False, f"row {a} has length {len(row)}, expected {m}")
        for b, c in enumerate(row):
            if not (isinstance(c, int) and 0 <= c < m):
                return GroupReport(False, f"closure: {a}*{b} = {c!r} is not an element")
    candidates = [identity] if identity is not None else range(m)
    e = None
    for cand in candidates:
        if all(table[cand][a] == a and table[a][cand] == a for a in range(m)):
            e = cand
            break
    if e is None:
        if identity is not None:
            bad = next(a for a in range(m) if table[identity][a] != a or table[a][identity] != a)
            return GroupReport(False, f"identity: {identity} is not a two-sided identity at {bad}")
        return GroupReport(False, "identity: no two-sided identity element")
    for a in range(m):
        if not any(table[a][b] == e and table[b][a] == e for b in range(m)):
            return GroupReport(False, f"inverse: {a} has no two-sided inverse")
    for a, b, c in itertools.product(range(m), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            return GroupReport(False, f"associativity: ({a}*{b})*{c} != {a}*({b}*{c})")
    return GroupReport(True)


class FiniteGroup(Group):
    """A finite group from its Cayley table; elements are ``0..order-1``."""

    is_finite = True

    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                 identity: int | None = None, *, check: bool = True):
        table = [list(row) for row in table]
        if check:
            report = check_group(table, identity)
            if not report:
                raise ValueError(f"not a group: {report.violation}")
        m = len(table)
        if identity is None:
            identity = next(
                c for c in range(m) if all(table[c][a] == a for a in range(m))
            )
        self.order = m
        self.identity = identity
        self.table = tuple(tuple(row) for row in table)
        self.inverse = tuple(
            next(b for b in range(m) if table[a][b] == identity) for a in range(m)
        )
        self.names = tuple(names) if names is not None else tuple(str(a) for a in range(m))
        if len(set(self.names)) != m:
            raise ValueError("element names must be distinct")
        self._index = {n: a for a, n in enumerate(self.names)}

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def name(self, a: int) -> str:
        return self.names[a]

    def parse(self, name: str) -> int:
        try:
            return self._index[str(name)]
        except KeyError:
            raise ValueError(f"unknown group element {name!r}") from None

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self.table == other.table
                and self.identity == other.identity)

    def __hash__(self):
        return hash((self.table, self.identity))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteGroup([[(a + b) % m for b in range(m)] for a in range(m)], identity=0,
                       check=False)


def symmetric_group(n: int = 3) -> FiniteGroup:
    """S_n on permutations of ``0..n-1`` in lexicographic order; ``a*b`` means a after b."""
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    names = ["".join(str(x) for x in p) for p in perms]
    return FiniteGroup(table, names, identity=0, check=False)


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element ``(s, k)`` is ``r**k s**s``, indexed ``s*n + k``."""
    elems = [(s, k) for s in (0, 1) for k in range(n)]

    def mul(x, y):
        s1, k1 = x
        s2, k2 = y
        return ((s1 + s2) % 2, (k1 + (k2 if s1 == 0 else -k2)) % n)

    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(x, y)] for y in elems] for x in elems]
    names = [("s" if s else "") + f"r{k}" for s, k in elems]
    return FiniteGroup(table, names, identity=0, check=False)


# free groups ------------------------------------------------------------------------

def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a free-group letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_multiply(u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return reduce_word(tuple(u) + tuple(v))


def word_invert(u: Sequence[int]) -> tuple[int, ...]:
    return tuple(-x for x in reversed(u))


class FreeGroup(Group):
    """Free group on ``rank`` generators with reduced-word elements."""

    is_finite = False

    def __init__(self, rank: int, letters: Sequence[str] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        self.letters = tuple(letters) if letters else tuple("abcdefghijklmnopqrstuvwxyz"[:rank])
        if len(self.letters) != rank:
            raise ValueError("need one letter per generator")
        self.identity = ()

    def generator(self, k: int) -> tuple[int, ...]:
        return (k + 1,)

    def mul(self, a, b):
        return word_multiply(a, b)

    def inv(self, a):
        return word_invert(a)

    def name(self, a) -> str:
        if not a:
            return "e"
        return ".".join(self.letters[abs(x) - 1] + ("^-1" if x < 0 else "") for x in a)

    def parse(self, name: str):
        name = name.strip()
        if name in ("e", ""):
            return ()
        word = []
        for tok in name.split("."):
            inv = tok.endswith("^-1")
            letter = tok[:-3] if inv else tok
            if letter not in self.letters:
                raise ValueError(f"unknown free-group letter {letter!r}")
            k = self.letters.index(letter) + 1
            word.append(-k if inv else k)
        return reduce_word(word)

    def __eq__(self, other):
        return isinstance(other, FreeGroup) and (self.rank, self.letters) == (
            other.rank, other.letters)

    def __hash__(self):
        return hash(("free", self.rank, self.letters))

    def __repr__(self):
        return f"FreeGroup(rank={self.rank})"


# generating families ----------------------------------------------------------------

@dataclass(frozen=True)
class GenSet:
    """An indexed family ``i -> g_i`` in ``group``; indices are ``0..k-1``.

    Duplicates and the identity are allowed.
    """

    group: Group
    images: tuple
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        images = tuple(self.images)
        if not images:
            raise ValueError("a generating family needs at least one index")
        if isinstance(self.group, FiniteGroup):
            for g in images:
                if not (isinstance(g, int) and 0 <= g < self.group.order):
                    raise ValueError(f"{g!r} is not an element of the group")
        else:
            images = tuple(reduce_word(g) for g in images)
        labels = tuple(self.labels) if self.labels else tuple(f"x{i}" for i in range(len(images)))
        if len(labels) != len(images):
            raise ValueError("need one label per index")
        if len(set(labels)) != len(labels):
            raise ValueError("index labels must be distinct")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_inverses", tuple(self.group.inv(g) for g in images))

    @property
    def size(self) -> int:
        return len(self.images)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown index label {label!r}") from None

    def step(self, x, i: int, position: int):
        """Right-multiply ``x`` by ``g_i**(-1)**position`` (positions are 1-based)."""
        g = self._inverses[i] if position % 2 else self.images[i]
        return self.group.mul(x, g)

    def generates(self) -> bool:
        """Whether the family generates the (finite) group."""
        if not isinstance(self.group, FiniteGroup):
            return set(abs(x) for g in self.images for x in g) >= set(
                range(1, self.group.rank + 1))
        seen = {self.group.identity}
        frontier = [self.group.identity]
        gens = list(self.images) + list(self._inverses)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.group.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return len(seen) == self.group.order


def alt(genset: GenSet, multi_index: Sequence[int]):
    """The alternating product ``g_{i1}^-1 g_{i2} g_{i3}^-1 ...``; empty gives e."""
    x = genset.group.identity
    k = genset.size
    for pos, i in enumerate(multi_index, 1):
        if not (0 <= i < k):
            raise IndexError(f"index {i} out of range for a family of size {k}")
        x = genset.step(x, i, pos)
    return x


def ball(genset: GenSet, n: int, max_size: int = 10**6) -> set:
    """``G_n = {alt(i) : i in I^n}`` by layered closure; ``G_0 = {e}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    layer = {genset.group.identity}
    for pos in range(1, n + 1):
        layer = {genset.step(x, i, pos) for x in layer for i in range(genset.size)}
        if len(layer) > max_size:
            raise OverflowError(f"G_{pos} has more than {max_size} elements")
    return layer
