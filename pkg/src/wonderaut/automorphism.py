"""The connected automorphism group of a wonderful variety, from its spherical system.

``aut_group`` walks the indecomposable factors and either keeps a factor
(Aut = G on it) or replaces its group and system:

* rank-0 factors found in the short exceptional table;
* factors with a ``C_n`` component carrying ``gamma*`` and ``alpha_1`` outside
  ``S^p`` (``PSp_{2n}`` becomes ``PSL_{2n}``);
* the rank-2 ``B4`` case;
* cuspidal rank-1 factors other than case 15, which are homogeneous under
  a larger group (known only for ``9B`` and the ``PSp`` family).

``main2_criterion`` is a second, independent route to the same yes/no
answer through quotients by positive colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fixtures
from .colors import fixed_divisors
from .errors import NotAdjoint, NotClassified, NotIndecomposable, RankTooSmall
from .quotient import positive_colors, quotient_by
from .roots import RootSystem, SimpleComponent, SimpleRootId, support
from .structure import decompose, is_cuspidal, product
from .system import AColor, SphericalSystem, require_valid

UNCHANGED = "Unchanged"
RANK0_EXCEPTIONAL = "Rank0Exceptional"
PSP_TO_PSL = "PSpToPSL"
RANK2_B4 = "Rank2B4"
RANK1_KNOWN = "Rank1KnownFixture"
RANK1_UNSPECIFIED = "Rank1UnspecifiedHomogeneous"


@dataclass(frozen=True)
class FactorVerdict:
    kind: str
    detail: str | None = None
    replaced_components: frozenset[int] = frozenset()
    # position of the factor inside the input, 1-based
    components: frozenset[int] = frozenset()
    sigma_indices: frozenset[int] = frozenset()


@dataclass(frozen=True)
class AutReport:
    equals_g: bool
    verdicts: tuple[FactorVerdict, ...]
    new_system: SphericalSystem | None
    new_group_description: tuple[str, ...]
    boundary_under_aut: frozenset[int]
    homogeneous_under_aut: bool


def psp_criterion(sys: SphericalSystem) -> frozenset[int]:
    """C-type components whose ``gamma*`` is a spherical root and whose alpha_1 moves a color."""
    require_valid(sys)
    sigma = set(sys.sigma)
    out = set()
    for c, comp in enumerate(sys.rs.components, 1):
        if comp.kind != "C":
            continue
        if fixtures.gamma_star(comp.rank, c) in sigma and SimpleRootId(c, 1) not in sys.sp:
            out.add(c)
    return frozenset(out)


def psp_to_psl_transform(sys: SphericalSystem, comps) -> tuple[SphericalSystem, tuple[SimpleComponent, ...]]:
    """Replace each listed ``C_n`` by ``A_{2n-1}``, dropping its ``gamma*``.

    Other spherical roots keep their coefficients, with ``alpha_1`` of the
    component renamed ``beta_1``; A-colors are kept with the dropped columns
    removed.  ``S^p`` on a new component is ``beta_3 .. beta_{2n-1}``.
    """
    comps = frozenset(comps)
    allowed = psp_criterion(sys)
    if not comps <= allowed:
        raise NotClassified(
            f"components {sorted(comps - allowed)} do not carry gamma* with alpha_1 outside S^p")
    drop = set()
    for c in sorted(comps):
        n = sys.rs.components[c - 1].rank
        gs = fixtures.gamma_star(n, c)
        drop.add(sys.sigma.index(gs) + 1)
        sp_here = {r for r in sys.sp if r.component == c}
        if sp_here != set(sys.rs.component_roots(c)[2:]):
            raise NotClassified(
                f"component {c}: S^p should be alpha_3..alpha_{n} there, got "
                f"{{{', '.join(str(r) for r in sorted(sp_here))}}}")
        for k, g in enumerate(sys.sigma, 1):
            if g == gs:
                continue
            extra = [r for r in support(g) if r.component == c and r.bourbaki >= 2]
            if extra:
                raise NotClassified(
                    f"spherical root {k} involves {extra[0]} of the C{n} component {c}")

    new_comps = tuple(SimpleComponent("A", 2 * comp.rank - 1) if c in comps else comp
                      for c, comp in enumerate(sys.rs.components, 1))
    rs = RootSystem(new_comps)
    kept = [k for k in range(1, sys.rank + 1) if k not in drop]
    sp = {r for r in sys.sp if r.component not in comps}
    for c in comps:
        sp |= set(rs.component_roots(c)[2:])
    new = SphericalSystem(
        rs, frozenset(sp), tuple(sys.sigma[k - 1] for k in kept),
        tuple(AColor(a.label, a.moved_by, tuple(a.row[k - 1] for k in kept)) for a in sys.acolors),
        sys.adjoint_faithful)
    return new, new_comps


def _rank0_exception(sys: SphericalSystem):
    """``(detail, new system)`` for the three exceptional flag varieties, else None."""
    if len(sys.rs.components) != 1:
        return None
    comp = sys.rs.components[0]
    everything = set(sys.rs.roots())
    missing = everything - sys.sp
    n = comp.rank
    if comp.kind == "C" and missing == {SimpleRootId(1, 1)}:
        return "1_{rk=0}", fixtures.rank0("A", 2 * n - 1, range(2, 2 * n))
    if comp.kind == "B" and missing == {SimpleRootId(1, n)}:
        return "2_{rk=0}", fixtures.rank0("D", n + 1, range(1, n + 1))
    if comp.kind == "G" and missing == {SimpleRootId(1, 1)}:
        return "3_{rk=0}", fixtures.rank0("B", 3, [2, 3])
    return None


def _same_system(a: SphericalSystem, b: SphericalSystem) -> bool:
    return (a.rs == b.rs and a.sp == b.sp and set(a.sigma) == set(b.sigma)
            and len(a.sigma) == len(b.sigma) and a.acolors == b.acolors == ())


def _is_9B(sys: SphericalSystem) -> bool:
    comps = sys.rs.components
    return len(comps) == 1 and comps[0].kind == "B" and _same_system(sys, fixtures.case_9B(comps[0].rank))


def _psp_detail(sys: SphericalSystem, comps) -> str:
    if sys.rank == 1:
        return "9C"
    if sys.rank > 2:
        return "rk>2"
    if not is_cuspidal(sys):
        return "5_{rk=2}"
    if len(sys.rs.components) == 2:
        return "1_{rk=2}"
    if sys.acolors:
        return "3_{rk=2}"
    return "2_{rk=2}"


def _factor_verdict(sys: SphericalSystem):
    """Verdict kind, detail, replaced components, new system (or None), new group."""
    groups = tuple(str(c) for c in sys.rs.components)
    if sys.rank == 0:
        hit = _rank0_exception(sys)
        if hit:
            detail, new = hit
            return RANK0_EXCEPTIONAL, detail, frozenset(), new, tuple(str(c) for c in new.rs.components)
        return UNCHANGED, None, frozenset(), sys, groups

    comps = psp_criterion(sys)
    if comps:
        fixed = fixed_divisors(sys)
        for c in comps:
            k = sys.sigma.index(fixtures.gamma_star(sys.rs.components[c - 1].rank, c)) + 1
            if k in fixed:
                raise NotClassified(f"gamma* of component {c} labels a fixed divisor")
        new, new_comps = psp_to_psl_transform(sys, comps)
        return PSP_TO_PSL, _psp_detail(sys, comps), comps, new, tuple(str(c) for c in new_comps)

    if sys.rank == 2 and _same_system(sys, fixtures.case_4_rk2()):
        new = fixtures.case_4_rk2_aut()
        return RANK2_B4, "4_{rk=2}", frozenset(), new, ("D5",)

    if sys.rank == 1 and is_cuspidal(sys):
        if _same_system(sys, fixtures.case15()):
            return UNCHANGED, "15", frozenset(), sys, groups
        if fixed_divisors(sys):
            raise NotClassified("cuspidal rank-one factor with a fixed divisor other than case 15")
        if _is_9B(sys):
            n = sys.rs.components[0].rank
            new = fixtures.rank0("D", n + 1, range(2, n + 1))
            return RANK1_KNOWN, "9B", frozenset(), new, (f"D{n + 1}",)
        return RANK1_UNSPECIFIED, None, frozenset(), None, tuple(f"unspecified({g})" for g in groups)

    return UNCHANGED, None, frozenset(), sys, groups


def aut_group(sys: SphericalSystem) -> AutReport:
    require_valid(sys)
    if not sys.adjoint_faithful:
        raise NotAdjoint("the group must act faithfully (adjoint_faithful is false)")
    verdicts, new_systems, group = [], [], []
    for factor in decompose(sys).factors:
        kind, detail, replaced, new, new_group = _factor_verdict(factor.system)
        comp_list = sorted(factor.components)
        verdicts.append(FactorVerdict(kind, detail, frozenset(comp_list[c - 1] for c in replaced),
                                      factor.components, factor.sigma_indices))
        new_systems.append(new)
        group.extend(new_group)

    determined = all(s is not None for s in new_systems)
    boundary = fixed_divisors(sys)
    return AutReport(
        equals_g=all(v.kind == UNCHANGED for v in verdicts),
        verdicts=tuple(verdicts),
        new_system=product(*new_systems) if determined else None,
        new_group_description=tuple(group),
        boundary_under_aut=boundary,
        homogeneous_under_aut=not boundary,
    )


def main2_criterion(sys: SphericalSystem) -> tuple[bool, str | None]:
    """Is there a positive color whose quotient has a rank-one factor with no fixed divisor?"""
    d = decompose(sys)
    if not d.trivial:
        raise NotIndecomposable("the criterion applies to indecomposable systems only")
    if sys.rank < 2:
        raise RankTooSmall("the criterion applies to rank at least 2")
    for label in sorted(positive_colors(sys)):
        q = quotient_by(sys, {label}).system
        for f in decompose(q).factors:
            if f.system.rank == 1 and not fixed_divisors(f.system):
                return True, label
    return False, None
