"""Spherical systems ``(S^p, Sigma, A)`` and the operations that stay inside them.

Sigma indices are 1-based everywhere in the public API, so index ``i``
refers to the i-th spherical root and to the boundary divisor it labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidEmbedding, InvalidIndex, InvalidSystem
from .roots import (
    RootSystem,
    SimpleRootId,
    Weight,
    cartan_pairing,
    coroot_eval,
    orthogonal,
    support,
)


@dataclass(frozen=True)
class AColor:
    label: str
    moved_by: frozenset[SimpleRootId]
    row: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moved_by", frozenset(SimpleRootId(*r) for r in self.moved_by))
        row = []
        for v in self.row:
            v = Fraction(v)
            if v.denominator != 1:
                raise InvalidSystem(f"color {self.label}: row entry {v} is not an integer")
            row.append(int(v))
        object.__setattr__(self, "row", tuple(row))
        if not self.label:
            raise InvalidSystem("color label must be non-empty")
        if not self.moved_by:
            raise InvalidSystem(f"color {self.label}: moved_by must be non-empty")


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


@dataclass(frozen=True)
class SphericalSystem:
    rs: RootSystem
    sp: frozenset[SimpleRootId] = frozenset()
    sigma: tuple[Weight, ...] = ()
    acolors: tuple[AColor, ...] = ()
    adjoint_faithful: bool = field(default=True)

    def __post_init__(self):
        object.__setattr__(self, "sp", frozenset(SimpleRootId(*r) for r in self.sp))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "acolors", tuple(self.acolors))
        rs = self.rs
        for r in sorted(self.sp):
            if r not in rs:
                raise InvalidSystem(f"S^p contains {r}, not a simple root of {rs}")
        for k, g in enumerate(self.sigma, 1):
            if not isinstance(g, Weight) or not g:
                raise InvalidSystem(f"spherical root {k} must be a non-zero Weight")
            for r in support(g):
                if r not in rs:
                    raise InvalidSystem(f"spherical root {k} uses {r}, not a simple root of {rs}")
        simple = self.simple_spherical_roots()
        seen = set()
        for c in self.acolors:
            if c.label in seen:
                raise InvalidSystem(f"duplicate color label {c.label!r}")
            seen.add(c.label)
            if len(c.row) != len(self.sigma):
                raise InvalidSystem(
                    f"color {c.label}: row has {len(c.row)} entries, expected {len(self.sigma)}")
            for r in sorted(c.moved_by):
                if r not in simple:
                    raise InvalidSystem(
                        f"color {c.label} is moved by {r}, which is not a spherical root")

    @property
    def rank(self) -> int:
        return len(self.sigma)

    def simple_spherical_roots(self) -> dict[SimpleRootId, int]:
        """Map ``alpha -> index`` for every simple root that is a spherical root."""
        out = {}
        for k, g in enumerate(self.sigma, 1):
            a = g.as_simple_root()
            if a is not None:
                out[a] = k
        return out

    def half_spherical_roots(self) -> dict[SimpleRootId, int]:
        """Map ``alpha -> index`` for every simple root with ``2 alpha`` in Sigma."""
        out = {}
        for k, g in enumerate(self.sigma, 1):
            items = g.items()
            if len(items) == 1 and items[0][1] == 2:
                out[items[0][0]] = k
        return out

    def coroot_row(self, alpha: SimpleRootId) -> tuple[Fraction, ...]:
        return tuple(coroot_eval(self.rs, alpha, g) for g in self.sigma)

    def acolor(self, label: str) -> AColor:
        for c in self.acolors:
            if c.label == label:
                return c
        raise KeyError(label)


def rank(sys: SphericalSystem) -> int:
    return sys.rank


def supp_sigma(sys: SphericalSystem) -> frozenset[SimpleRootId]:
    out = set()
    for g in sys.sigma:
        out |= support(g)
    return frozenset(out)


def b_candidates(sys: SphericalSystem) -> list[SimpleRootId]:
    """Simple roots outside ``Sigma``, ``Sigma/2`` and ``S^p``."""
    excluded = set(sys.simple_spherical_roots()) | set(sys.half_spherical_roots()) | sys.sp
    return [r for r in sys.rs.roots() if r not in excluded]


def tilde_pairs(sys: SphericalSystem) -> list[tuple[SimpleRootId, SimpleRootId]]:
    """Generating pairs of the relation grouping the roots that move one b-color."""
    sigma = set(sys.sigma)
    cands = b_candidates(sys)
    pairs = []
    for i, a in enumerate(cands):
        for b in cands[i + 1:]:
            if not orthogonal(sys.rs, a, b):
                continue
            s = Weight.simple(a) + Weight.simple(b)
            if s in sigma or s * Fraction(1, 2) in sigma:
                pairs.append((a, b))
    return pairs


def tilde_classes(sys: SphericalSystem) -> list[frozenset[SimpleRootId]]:
    """Equivalence classes of b-candidates, ordered by their smallest member."""
    cands = b_candidates(sys)
    parent = {r: r for r in cands}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for a, b in tilde_pairs(sys):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[SimpleRootId, set] = {}
    for r in cands:
        groups.setdefault(find(r), set()).add(r)
    return [frozenset(groups[k]) for k in sorted(groups)]


def _matrix_rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank_ = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank_, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank_], m[pivot] = m[pivot], m[rank_]
        for i in range(len(m)):
            if i != rank_ and m[i][col] != 0:
                f = m[i][col] / m[rank_][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank_])]
        rank_ += 1
    return rank_


def validate(sys: SphericalSystem) -> list[Violation]:
    """Run the V1-V7 checks; an empty list means the system is usable downstream."""
    out: list[Violation] = []
    roots = sys.rs.roots()
    rs = sys.rs

    if sys.sigma:
        rows = [[g.coeff(r) for r in roots] for g in sys.sigma]
        if _matrix_rank(rows) < len(sys.sigma):
            out.append(Violation("V1", "spherical roots are linearly dependent"))

    for k, g in enumerate(sys.sigma, 1):
        neg = [str(r) for r, c in g.items() if c < 0]
        if neg:
            out.append(Violation("V2", f"spherical root {k} has negative coefficients on {', '.join(neg)}"))

    for alpha, k in sorted(sys.simple_spherical_roots().items()):
        moving = [c for c in sys.acolors if alpha in c.moved_by]
        if len(moving) != 2:
            out.append(Violation("V3", f"{alpha} moves {len(moving)} A-colors, expected 2"))
            continue
        for c in moving:
            if c.row[k - 1] != 1:
                out.append(Violation("V3", f"<{c.label}, gamma_{k}> = {c.row[k - 1]}, expected 1"))
        total = tuple(a + b for a, b in zip(moving[0].row, moving[1].row))
        expected = sys.coroot_row(alpha)
        if total != expected:
            out.append(Violation(
                "V3", f"rows of {moving[0].label} and {moving[1].label} sum to "
                      f"{_fmt_row(total)}, but the coroot of {alpha} gives {_fmt_row(expected)}"))

    supp = supp_sigma(sys)
    for alpha in roots:
        if alpha in supp or alpha in sys.sp:
            continue
        bad = [v for v in sys.coroot_row(alpha) if v.denominator != 1]
        if bad:
            out.append(Violation("V4", f"coroot of {alpha} is not integral on Sigma"))

    for alpha, k in sorted(sys.half_spherical_roots().items()):
        if any((v / 2).denominator != 1 for v in sys.coroot_row(alpha)):
            out.append(Violation("V5", f"half the coroot of {alpha} is not integral on Sigma"))

    for a, b in tilde_pairs(sys):
        if sys.coroot_row(a) != sys.coroot_row(b):
            out.append(Violation("V6", f"{a} ~ {b} but their coroots differ on Sigma"))

    clash = sys.sp & (set(sys.simple_spherical_roots()) | set(sys.half_spherical_roots()))
    if clash:
        names = ", ".join(str(r) for r in sorted(clash))
        out.append(Violation("V7", f"S^p contains roots that move colors: {names}"))
    return out


def _fmt_row(row) -> str:
    return "(" + ", ".join(str(v) for v in row) + ")"


def require_valid(sys: SphericalSystem) -> None:
    violations = validate(sys)
    if violations:
        raise InvalidSystem("; ".join(str(v) for v in violations), violations)


def localize(sys: SphericalSystem, keep: Iterable[int]) -> SphericalSystem:
    """The system of the G-stable subvariety whose spherical roots are ``keep``.

    ``keep`` holds 1-based sigma indices; their relative order is preserved.
    """
    keep = set(keep)
    for i in keep:
        if not isinstance(i, int) or not 1 <= i <= sys.rank:
            raise InvalidIndex(f"sigma index {i} out of range 1..{sys.rank}")
    kept = sorted(keep)
    kept_simple = {a for a, k in sys.simple_spherical_roots().items() if k in keep}
    acolors = []
    for c in sys.acolors:
        moved = c.moved_by & kept_simple
        if moved:
            acolors.append(AColor(c.label, moved, tuple(c.row[i - 1] for i in kept)))
    return SphericalSystem(sys.rs, sys.sp, tuple(sys.sigma[i - 1] for i in kept),
                           tuple(acolors), sys.adjoint_faithful)


def check_embedding(source: RootSystem, target: RootSystem,
                    embedding: Mapping[SimpleRootId, SimpleRootId]) -> dict[SimpleRootId, SimpleRootId]:
    emb = {SimpleRootId(*k): SimpleRootId(*v) for k, v in embedding.items()}
    missing = [r for r in source.roots() if r not in emb]
    if missing or len(emb) != len(source.roots()):
        raise InvalidEmbedding(f"embedding must be defined exactly on the roots of {source}")
    if len(set(emb.values())) != len(emb):
        raise InvalidEmbedding("embedding is not injective")
    for v in emb.values():
        if v not in target:
            raise InvalidEmbedding(f"{v} is not a simple root of {target}")
    for a in emb:
        for b in emb:
            p, q = cartan_pairing(source, a, b), cartan_pairing(target, emb[a], emb[b])
            if p != q:
                raise InvalidEmbedding(
                    f"pairing <{a}^v, {b}> = {p} but <{emb[a]}^v, {emb[b]}> = {q}")
    return emb


def induce(core: SphericalSystem, target: RootSystem,
           embedding: Mapping[SimpleRootId, SimpleRootId]) -> SphericalSystem:
    """Transport ``core`` along a Cartan-preserving embedding of its simple roots."""
    emb = check_embedding(core.rs, target, embedding)
    return SphericalSystem(
        target,
        frozenset(emb[r] for r in core.sp),
        tuple(g.map_roots(emb) for g in core.sigma),
        tuple(AColor(c.label, frozenset(emb[r] for r in c.moved_by), c.row) for c in core.acolors),
        core.adjoint_faithful,
    )
