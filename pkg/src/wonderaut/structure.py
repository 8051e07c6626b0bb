"""Product decomposition, cuspidality and cuspidal cores."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .errors import UnsupportedSubdiagram
from .roots import KINDS, RootSystem, SimpleComponent, SimpleRootId, cartan_pairing, support
from .system import AColor, SphericalSystem, require_valid, supp_sigma


@dataclass(frozen=True)
class Factor:
    system: SphericalSystem
    components: frozenset[int]
    sigma_indices: frozenset[int]


@dataclass(frozen=True)
class Decomposition:
    factors: tuple[Factor, ...]

    @property
    def trivial(self) -> bool:
        return len(self.factors) == 1


def restrict(sys: SphericalSystem, comps: Iterable[int]) -> tuple[SphericalSystem, list[int]]:
    """Restrict to the given components (renumbered in order).

    Returns the subsystem and the 1-based sigma indices it kept.  Only
    meaningful when ``comps`` is a union of decomposition blocks.
    """
    comps = sorted(set(comps))
    renum = {c: k for k, c in enumerate(comps, 1)}

    def move(r):
        return SimpleRootId(renum[r.component], r.bourbaki)

    sigma_idx = [k for k, g in enumerate(sys.sigma, 1)
                 if all(r.component in renum for r in support(g))]
    sigma = tuple(sys.sigma[k - 1].map_roots({r: move(r) for r in support(sys.sigma[k - 1])})
                  for k in sigma_idx)
    acolors = tuple(
        AColor(c.label, frozenset(move(r) for r in c.moved_by), tuple(c.row[k - 1] for k in sigma_idx))
        for c in sys.acolors if all(r.component in renum for r in c.moved_by))
    sub = SphericalSystem(
        RootSystem(tuple(sys.rs.components[c - 1] for c in comps)),
        frozenset(move(r) for r in sys.sp if r.component in renum),
        sigma, acolors, sys.adjoint_faithful)
    return sub, sigma_idx


def decompose(sys: SphericalSystem) -> Decomposition:
    """Finest product decomposition along Dynkin components."""
    require_valid(sys)
    n = len(sys.rs.components)
    g = nx.Graph()
    g.add_nodes_from(range(1, n + 1))

    def link(comps):
        comps = sorted(comps)
        for c in comps[1:]:
            g.add_edge(comps[0], c)

    for gamma in sys.sigma:
        link({r.component for r in support(gamma)})
    for c in sys.acolors:
        moved = {r.component for r in c.moved_by}
        link(moved)
        for k, v in enumerate(c.row):
            if v != 0:
                link(moved | {r.component for r in support(sys.sigma[k])})

    blocks = sorted((sorted(b) for b in nx.connected_components(g)), key=lambda b: b[0])
    factors = []
    for block in blocks:
        sub, idx = restrict(sys, block)
        factors.append(Factor(sub, frozenset(block), frozenset(idx)))
    return Decomposition(tuple(factors))


def rank0_factors(d: Decomposition) -> frozenset[int]:
    return frozenset(k for k, f in enumerate(d.factors, 1) if not f.system.sigma)


def is_cuspidal(sys: SphericalSystem) -> bool:
    require_valid(sys)
    return supp_sigma(sys) | sys.sp == frozenset(sys.rs.roots())


def product(*systems: SphericalSystem) -> SphericalSystem:
    """Concatenate systems over the product of their root systems.

    If A-color labels collide, every label of factor ``k`` is prefixed
    with ``"k."``.
    """
    labels = [c.label for s in systems for c in s.acolors]
    prefix = len(labels) != len(set(labels))
    comps, sp, sigma, acolors = [], set(), [], []
    total = sum(s.rank for s in systems)
    offset_c = offset_s = 0
    for k, s in enumerate(systems, 1):
        shift = {r: SimpleRootId(r.component + offset_c, r.bourbaki) for r in s.rs.roots()}
        comps.extend(s.rs.components)
        sp |= {shift[r] for r in s.sp}
        sigma.extend(g.map_roots(shift) for g in s.sigma)
        for c in s.acolors:
            row = (0,) * offset_s + c.row + (0,) * (total - offset_s - s.rank)
            label = f"{k}.{c.label}" if prefix else c.label
            acolors.append(AColor(label, frozenset(shift[r] for r in c.moved_by), row))
        offset_c += len(s.rs.components)
        offset_s += s.rank
    return SphericalSystem(RootSystem(tuple(comps)), frozenset(sp), tuple(sigma), tuple(acolors),
                           all(s.adjoint_faithful for s in systems))


def _diagram(rs: RootSystem, nodes: Iterable[SimpleRootId]) -> nx.DiGraph:
    nodes = list(nodes)
    g = nx.DiGraph()
    g.add_nodes_from(nodes)
    for a in nodes:
        for b in nodes:
            if a != b:
                v = cartan_pairing(rs, a, b)
                if v:
                    g.add_edge(a, b, a=v)
    return g


def classify_subdiagram(rs: RootSystem, nodes: Iterable[SimpleRootId]
                        ) -> list[tuple[SimpleComponent, dict[int, SimpleRootId]]]:
    """Type each connected piece of the sub-diagram on ``nodes``.

    Returns ``(component, {bourbaki index: original root})`` per piece,
    ordered by smallest original root.  The ambient component's kind is
    preferred when several kinds fit (``B2``/``C2``); a three-node chain is
    always ``A3``, never ``D3``.
    """
    sub = _diagram(rs, nodes)
    pieces = sorted((sorted(p) for p in nx.weakly_connected_components(sub)), key=lambda p: p[0])
    out = []
    for piece in pieces:
        n = len(piece)
        ambient = rs.components[piece[0].component - 1].kind
        kinds = [ambient] + [k for k in KINDS if k != ambient]
        if n == 3:
            kinds = [k for k in kinds if k != "D"]
        found = None
        for kind in kinds:
            try:
                comp = SimpleComponent(kind, n)
            except ValueError:
                continue
            std_rs = RootSystem((comp,))
            std = _diagram(std_rs, std_rs.roots())
            m = DiGraphMatcher(std, sub.subgraph(piece), edge_match=lambda x, y: x["a"] == y["a"])
            if m.is_isomorphic():
                found = (comp, {r.bourbaki: m.mapping[r] for r in std_rs.roots()})
                break
        if found is None:
            raise UnsupportedSubdiagram(
                f"sub-diagram on {', '.join(map(str, piece))} is not a Dynkin diagram")
        out.append(found)
    return out


@dataclass(frozen=True)
class CuspidalCore:
    core: SphericalSystem | None
    stripped: frozenset[SimpleRootId]
    embedding: dict[SimpleRootId, SimpleRootId]


def cuspidal_core(sys: SphericalSystem) -> CuspidalCore:
    """Restrict to the Levi generated by ``supp Sigma ∪ S^p``.

    ``core`` is None when that set is empty (a full flag variety).
    """
    require_valid(sys)
    levi = supp_sigma(sys) | sys.sp
    stripped = frozenset(r for r in sys.rs.roots() if r not in levi)
    if not levi:
        return CuspidalCore(None, stripped, {})
    embedding, comps = {}, []
    for k, (comp, mapping) in enumerate(classify_subdiagram(sys.rs, sorted(levi)), 1):
        comps.append(comp)
        for i, orig in mapping.items():
            embedding[SimpleRootId(k, i)] = orig
    back = {v: k for k, v in embedding.items()}
    core = SphericalSystem(
        RootSystem(tuple(comps)),
        frozenset(back[r] for r in sys.sp),
        tuple(g.map_roots(back) for g in sys.sigma),
        tuple(AColor(c.label, frozenset(back[r] for r in c.moved_by), c.row) for c in sys.acolors),
        sys.adjoint_faithful)
    return CuspidalCore(core, stripped, embedding)
