"""Exact arithmetic on products of simple root systems.

Simple roots are addressed by ``SimpleRootId(component, bourbaki)``, both
1-based, with the Bourbaki numbering inside each component.  Only Cartan
pairings between simple roots and coroot evaluations on weights are
provided; no root enumeration or Weyl group machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .errors import InvalidRootId, InvalidRootSystem, InvalidWeight

KINDS = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_ALLOWED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class SimpleComponent:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS or len(self.kind) != 1:
            raise InvalidRootSystem(f"unknown Dynkin kind {self.kind!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise InvalidRootSystem(f"rank must be an integer, got {self.rank!r}")
        if self.kind in _ALLOWED_RANKS:
            if self.rank not in _ALLOWED_RANKS[self.kind]:
                raise InvalidRootSystem(f"{self.kind}{self.rank} is not a Dynkin type")
        elif self.rank < _MIN_RANK[self.kind]:
            raise InvalidRootSystem(
                f"{self.kind}{self.rank}: rank must be at least {_MIN_RANK[self.kind]}"
            )

    def __str__(self):
        return f"{self.kind}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleComponent":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidRootSystem(f"cannot parse component {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return _cartan_matrix(self.kind, self.rank)


def _dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if kind == "E":
        chain = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)]
        return [(2, 4)] + [(i, j) for i, j in chain if j <= n]
    return [(i, i + 1) for i in range(1, n)]


def _squared_lengths(kind: str, n: int) -> list[int]:
    # normalised so that short roots of doubly laced types have length 1 (B, F)
    # or long roots have length 4 (C); only ratios matter
    if kind == "B":
        return [2] * (n - 1) + [1]
    if kind == "C":
        return [2] * (n - 1) + [4]
    if kind == "F":
        return [2, 2, 1, 1]
    if kind == "G":
        return [2, 6]
    return [2] * n


@lru_cache(maxsize=None)
def _cartan_matrix(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    lengths = _squared_lengths(kind, n)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Fraction(lengths[i])
    for i, j in _dynkin_edges(kind, n):
        ip = -Fraction(max(lengths[i - 1], lengths[j - 1]), 2)
        gram[i - 1][j - 1] = gram[j - 1][i - 1] = ip
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            a = 2 * gram[i][j] / gram[i][i]
            assert a.denominator == 1
            row.append(int(a))
        rows.append(tuple(row))
    return tuple(rows)


class SimpleRootId(NamedTuple):
    component: int
    bourbaki: int

    def __str__(self):
        return f"{self.component}.{self.bourbaki}"

    @classmethod
    def parse(cls, text: str) -> "SimpleRootId":
        parts = text.strip().split(".")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InvalidRootId(f"root id must look like 'c.i', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))


def root(component: int, bourbaki: int) -> SimpleRootId:
    return SimpleRootId(component, bourbaki)


@dataclass(frozen=True)
class RootSystem:
    components: tuple[SimpleComponent, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise InvalidRootSystem("a root system needs at least one component")
        for c in comps:
            if not isinstance(c, SimpleComponent):
                raise InvalidRootSystem(f"not a SimpleComponent: {c!r}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *specs: str | SimpleComponent) -> "RootSystem":
        """``RootSystem.of("A1", "C3")``."""
        return cls(tuple(s if isinstance(s, SimpleComponent) else SimpleComponent.parse(s)
                         for s in specs))

    def __str__(self):
        return "x".join(str(c) for c in self.components)

    def roots(self) -> list[SimpleRootId]:
        return [SimpleRootId(c, i)
                for c, comp in enumerate(self.components, 1)
                for i in range(1, comp.rank + 1)]

    def component_roots(self, c: int) -> list[SimpleRootId]:
        return [SimpleRootId(c, i) for i in range(1, self.components[c - 1].rank + 1)]

    def __contains__(self, rid) -> bool:
        return (isinstance(rid, tuple) and len(rid) == 2
                and 1 <= rid[0] <= len(self.components)
                and 1 <= rid[1] <= self.components[rid[0] - 1].rank)

    def check(self, rid: SimpleRootId) -> SimpleRootId:
        if rid not in self:
            raise InvalidRootId(f"root {rid} is not a simple root of {self}")
        return SimpleRootId(*rid)


def cartan_pairing(rs: RootSystem, i: SimpleRootId, j: SimpleRootId) -> int:
    """Return ``<alpha_i^vee, alpha_j>``."""
    rs.check(i)
    rs.check(j)
    if i[0] != j[0]:
        return 0
    return rs.components[i[0] - 1].cartan_matrix()[i[1] - 1][j[1] - 1]


def orthogonal(rs: RootSystem, i: SimpleRootId, j: SimpleRootId) -> bool:
    return i != j and cartan_pairing(rs, i, j) == 0


class Weight:
    """A rational combination of simple roots with denominators 1 or 2.

    Immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, coefficients: Mapping[SimpleRootId, object] | Iterable = ()):
        if isinstance(coefficients, Mapping):
            coefficients = coefficients.items()
        acc: dict[SimpleRootId, Fraction] = {}
        for rid, c in coefficients:
            if not (isinstance(rid, tuple) and len(rid) == 2
                    and all(isinstance(x, int) and x >= 1 for x in rid)):
                raise InvalidWeight(f"bad root id {rid!r}")
            rid = SimpleRootId(*rid)
            acc[rid] = acc.get(rid, Fraction(0)) + Fraction(c)
        items = []
        for rid in sorted(acc):
            c = acc[rid]
            if c == 0:
                continue
            if c.denominator not in (1, 2):
                raise InvalidWeight(f"coefficient {c} of {rid} has denominator above 2")
            items.append((rid, c))
        self._items = tuple(items)
        self._hash = hash(self._items)

    @classmethod
    def simple(cls, rid: SimpleRootId) -> "Weight":
        return cls({rid: 1})

    def items(self) -> tuple[tuple[SimpleRootId, Fraction], ...]:
        return self._items

    def coeff(self, rid: SimpleRootId) -> Fraction:
        for r, c in self._items:
            if r == rid:
                return c
        return Fraction(0)

    def __bool__(self):
        return bool(self._items)

    def __eq__(self, other):
        return isinstance(other, Weight) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self._items + other._items)

    def __neg__(self):
        return Weight((r, -c) for r, c in self._items)

    def __sub__(self, other: "Weight") -> "Weight":
        return self + (-other)

    def __mul__(self, k) -> "Weight":
        k = Fraction(k)
        return Weight((r, c * k) for r, c in self._items)

    __rmul__ = __mul__

    def as_simple_root(self) -> SimpleRootId | None:
        """The root ``alpha`` if this weight is exactly ``alpha``."""
        if len(self._items) == 1 and self._items[0][1] == 1:
            return self._items[0][0]
        return None

    def map_roots(self, mapping: Mapping[SimpleRootId, SimpleRootId]) -> "Weight":
        return Weight((mapping[r], c) for r, c in self._items)

    def __repr__(self):
        return f"Weight({self})"

    def __str__(self):
        if not self._items:
            return "0"
        terms = []
        for r, c in self._items:
            terms.append(str(r) if c == 1 else f"{c}*{r}")
        return " + ".join(terms).replace("+ -", "- ")


def support(w: Weight) -> frozenset[SimpleRootId]:
    return frozenset(r for r, _ in w.items())


def coroot_eval(rs: RootSystem, i: SimpleRootId, w: Weight) -> Fraction:
    """Return ``<alpha_i^vee, w>`` by linearity over the simple roots of ``w``."""
    rs.check(i)
    total = Fraction(0)
    for rid, c in w.items():
        if rid not in rs:
            raise InvalidWeight(f"weight {w} uses {rid}, which is not a simple root of {rs}")
        total += c * cartan_pairing(rs, i, rid)
    return total
