"""Named spherical systems used as golden data and as lookup tables.

Builders take the rank parameters of their family.  Case names follow the
usual ``<number>_{rk=r}`` convention; ``9B``/``9C``/``15`` and the paired
names such as ``14-8B`` are the standard labels of rank-one cases.
"""

from __future__ import annotations

from fractions import Fraction

from .roots import RootSystem, SimpleComponent, SimpleRootId, Weight
from .system import AColor, SphericalSystem, induce, localize


def _w(*terms, comp=1) -> Weight:
    """``_w((1, 1), (2, 2))`` is ``alpha_1 + 2 alpha_2`` in component ``comp``."""
    return Weight({SimpleRootId(comp, i): c for i, c in terms})


def _roots(comp, indices):
    return frozenset(SimpleRootId(comp, i) for i in indices)


def gamma_star(n: int, comp: int = 1) -> Weight:
    """``alpha_1 + 2 alpha_2 + ... + 2 alpha_{n-1} + alpha_n`` in a C_n component."""
    if n == 2:
        return _w((1, 1), (2, 1), comp=comp)
    return _w((1, 1), *((i, 2) for i in range(2, n)), (n, 1), comp=comp)


def _rs(*names) -> RootSystem:
    return RootSystem.of(*names)


# rank 0

def rank0(kind: str, n: int, sp_indices) -> SphericalSystem:
    return SphericalSystem(RootSystem((SimpleComponent(kind, n),)), _roots(1, sp_indices))


def rank0_C(n: int) -> SphericalSystem:
    return rank0("C", n, range(2, n + 1))


def rank0_B(n: int) -> SphericalSystem:
    return rank0("B", n, range(1, n))


def rank0_G2() -> SphericalSystem:
    return rank0("G", 2, [2])


# rank 1

def case15() -> SphericalSystem:
    return SphericalSystem(_rs("G2"), frozenset(), (_w((1, 1), (2, 1)),))


def case_9B(n: int) -> SphericalSystem:
    return SphericalSystem(_rs(f"B{n}"), _roots(1, range(2, n)),
                           (_w(*((i, 1) for i in range(1, n + 1))),))


def case_9C(n: int) -> SphericalSystem:
    return SphericalSystem(_rs(f"C{n}"), _roots(1, range(3, n + 1)), (gamma_star(n),))


def fixture_14_8B() -> SphericalSystem:
    return SphericalSystem(_rs("G2"), _roots(1, [2]), (_w((1, 4), (2, 2)),))


def fixture_14_8B_big() -> SphericalSystem:
    return SphericalSystem(_rs("B3"), _roots(1, [2, 3]), (_w((1, 2), (2, 2), (3, 2)),))


def fixture_11_6D() -> SphericalSystem:
    # the coefficient 3 on alpha_3 is what makes the divisor non-fixed
    return SphericalSystem(_rs("B3"), _roots(1, [1, 2]), (_w((1, 1), (2, 2), (3, 3)),))


def fixture_11_6D_big() -> SphericalSystem:
    return SphericalSystem(_rs("D4"), _roots(1, [1, 2]), (_w((1, 2), (2, 2), (3, 1), (4, 1)),))


def fixture_10_5D() -> SphericalSystem:
    """Double cover of 11-6D: half the spherical root, not an adjoint action."""
    base = fixture_11_6D()
    return SphericalSystem(base.rs, base.sp, (base.sigma[0] * Fraction(1, 2),),
                           adjoint_faithful=False)


def fixture_13_7B() -> SphericalSystem:
    base = fixture_14_8B()
    return SphericalSystem(base.rs, base.sp, (base.sigma[0] * Fraction(1, 2),),
                           adjoint_faithful=False)


# rank 2

def case_1_rk2(n: int) -> SphericalSystem:
    """A1 x C_n."""
    a1, c1 = SimpleRootId(1, 1), SimpleRootId(2, 1)
    return SphericalSystem(_rs("A1", f"C{n}"), _roots(2, range(3, n + 1)),
                           (Weight({a1: 1, c1: 1}), gamma_star(n, comp=2)))


def case_2_rk2(n: int) -> SphericalSystem:
    return SphericalSystem(_rs(f"C{n}"), _roots(1, range(3, n + 1)),
                           (_w((1, 2)), gamma_star(n)))


def case_3_rk2(n: int) -> SphericalSystem:
    a1 = SimpleRootId(1, 1)
    return SphericalSystem(_rs(f"C{n}"), _roots(1, range(3, n + 1)),
                           (_w((1, 1)), gamma_star(n)),
                           (AColor("D+", {a1}, (1, 0)), AColor("D-", {a1}, (1, 0))))


def case_4_rk2() -> SphericalSystem:
    return SphericalSystem(_rs("B4"), _roots(1, [2, 3]),
                           (_w((2, 1), (3, 2), (4, 3)), _w((1, 1), (2, 1), (3, 1), (4, 1))))


def case_4_rk2_aut() -> SphericalSystem:
    return SphericalSystem(_rs("D5"), _roots(1, [2, 3, 4]), (_w((2, 1), (3, 2), (4, 1), (5, 2)),))


def case_5_rk2(n: int) -> SphericalSystem:
    """``1_{rk=2}`` induced into A2 x C_n with the A1 sitting on alpha_1 of A2."""
    core = case_1_rk2(n)
    emb = {SimpleRootId(1, 1): SimpleRootId(1, 1)}
    emb.update({SimpleRootId(2, i): SimpleRootId(2, i) for i in range(1, n + 1)})
    return induce(core, _rs("A2", f"C{n}"), emb)


# higher rank

def case_1_rk_gt2(n: int) -> SphericalSystem:
    """A3 x C_n: ``1_{rk=2}`` on (alpha_1, C_n) beside a rank-one ``alpha_3`` factor,
    induced through the stripped root alpha_2."""
    a, c = (lambda i: SimpleRootId(1, i)), (lambda i: SimpleRootId(2, i))
    sigma = (Weight({a(1): 1, c(1): 1}), gamma_star(n, comp=2), Weight.simple(a(3)))
    return SphericalSystem(_rs("A3", f"C{n}"), _roots(2, range(3, n + 1)), sigma,
                           (AColor("E+", {a(3)}, (0, 0, 1)), AColor("E-", {a(3)}, (0, 0, 1))))


def case_2_rk_gt2(n: int) -> SphericalSystem:
    """C_n x A1 with ``gamma* , alpha_1, alpha'_1`` and a color moved by both simple roots."""
    c1, b1 = SimpleRootId(1, 1), SimpleRootId(2, 1)
    return SphericalSystem(
        _rs(f"C{n}", "A1"), _roots(1, range(3, n + 1)),
        (gamma_star(n), Weight.simple(c1), Weight.simple(b1)),
        (AColor("D", {c1, b1}, (0, 1, 1)), AColor("E", {c1}, (0, 1, -1)),
         AColor("F", {b1}, (0, -1, 1))))


def case_3_rk_gt2(n: int, m: int) -> SphericalSystem:
    c1, d1 = SimpleRootId(1, 1), SimpleRootId(2, 1)
    return SphericalSystem(
        _rs(f"C{n}", f"C{m}"), _roots(1, range(3, n + 1)) | _roots(2, range(3, m + 1)),
        (gamma_star(n), gamma_star(m, comp=2), Weight({c1: 1, d1: 1})))


# systems with Aut = G, built by induction and localization

def _shift_embedding(core_rs: RootSystem, comp: int, by: int):
    emb = {}
    for r in core_rs.roots():
        emb[r] = SimpleRootId(r.component, r.bourbaki + (by if r.component == comp else 0))
    return emb


def induced_4_rk2() -> SphericalSystem:
    """``4_{rk=2}`` moved to alpha_2..alpha_5 of B5."""
    core = case_4_rk2()
    return induce(core, _rs("B5"), _shift_embedding(core.rs, 1, 1))


def induced_1_rk2(n: int) -> SphericalSystem:
    """``1_{rk=2}`` with C_n moved to alpha_2..alpha_{n+1} of C_{n+1}."""
    core = case_1_rk2(n)
    return induce(core, _rs("A1", f"C{n + 1}"), _shift_embedding(core.rs, 2, 1))


def induced_2_rk2(n: int) -> SphericalSystem:
    core = case_2_rk2(n)
    return induce(core, _rs(f"C{n + 1}"), _shift_embedding(core.rs, 1, 1))


def induced_3_rk2(n: int) -> SphericalSystem:
    core = case_3_rk2(n)
    return induce(core, _rs(f"C{n + 1}"), _shift_embedding(core.rs, 1, 1))


def group_compactification(n: int) -> SphericalSystem:
    """PGL_{n+1} x PGL_{n+1} acting on the compactification of PGL_{n+1}."""
    sigma = tuple(Weight({SimpleRootId(1, i): 1, SimpleRootId(2, i): 1}) for i in range(1, n + 1))
    return SphericalSystem(_rs(f"A{n}", f"A{n}"), frozenset(), sigma)


def localized_group_compactification() -> SphericalSystem:
    return localize(group_compactification(3), {1, 2})


EXCEPTIONAL_HIGH_RANK = {
    **{f"1_rk2_C{n}": (lambda n=n: case_1_rk2(n)) for n in (2, 3, 4)},
    **{f"2_rk2_C{n}": (lambda n=n: case_2_rk2(n)) for n in (2, 3, 4)},
    **{f"3_rk2_C{n}": (lambda n=n: case_3_rk2(n)) for n in (2, 3, 4)},
    "4_rk2": case_4_rk2,
    "5_rk2_A2xC3": lambda: case_5_rk2(3),
    "1_rkgt2_A3xC2": lambda: case_1_rk_gt2(2),
    "2_rkgt2_C2xA1": lambda: case_2_rk_gt2(2),
    "2_rkgt2_C3xA1": lambda: case_2_rk_gt2(3),
    "3_rkgt2_C2xC2": lambda: case_3_rk_gt2(2, 2),
    "3_rkgt2_C2xC3": lambda: case_3_rk_gt2(2, 3),
}

EQUALS_G_HIGH_RANK = {
    "induced_4_rk2_B5": induced_4_rk2,
    "induced_1_rk2_A1xC3": lambda: induced_1_rk2(2),
    "induced_2_rk2_C4": lambda: induced_2_rk2(3),
    "induced_3_rk2_C4": lambda: induced_3_rk2(3),
    "group_compactification_A2": lambda: group_compactification(2),
    "group_compactification_A3": lambda: group_compactification(3),
    "localized_group_compactification_A3": localized_group_compactification,
}

LOW_RANK = {
    **{f"rank0_C{n}": (lambda n=n: rank0_C(n)) for n in (2, 3, 4, 5)},
    **{f"rank0_B{n}": (lambda n=n: rank0_B(n)) for n in (2, 3, 4, 5)},
    "rank0_G2": rank0_G2,
    "case15": case15,
    **{f"9B_B{n}": (lambda n=n: case_9B(n)) for n in (2, 3, 4, 5)},
    **{f"9C_C{n}": (lambda n=n: case_9C(n)) for n in (2, 3, 4, 5)},
    "14-8B": fixture_14_8B,
    "14-8B_big": fixture_14_8B_big,
    "11-6D": fixture_11_6D,
    "11-6D_big": fixture_11_6D_big,
}

NON_ADJOINT = {
    "10-5D": fixture_10_5D,
    "13-7B": fixture_13_7B,
}


def corpus() -> dict[str, SphericalSystem]:
    """Every adjoint fixture, by name."""
    out = {}
    for table in (LOW_RANK, EXCEPTIONAL_HIGH_RANK, EQUALS_G_HIGH_RANK):
        out.update({name: build() for name, build in table.items()})
    return out
