import random

import pytest

from wonderaut import fixtures as F
from wonderaut.automorphism import (aut_group, main2_criterion, psp_criterion,
                                    psp_to_psl_transform)
from wonderaut.colors import fixed_divisors
from wonderaut.errors import NotAdjoint, NotClassified, NotIndecomposable, RankTooSmall
from wonderaut.io import system_from_data
from wonderaut.roots import RootSystem, SimpleRootId as R, Weight
from wonderaut.structure import decompose, product
from wonderaut.system import SphericalSystem, validate


def doc(group, sp, sigma, A=()):
    """Build a system from a compact literal: group "A1xC3", roots "c.i"."""
    comps = [{"kind": g[0], "rank": int(g[1:])} for g in group.split("x")]
    return system_from_data({"group": comps, "sp": list(sp), "sigma": list(sigma), "A": list(A)})


def ids(c, a, b):
    return [f"{c}.{i}" for i in range(a, b + 1)]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rank0_c(n):
    r = aut_group(F.rank0_C(n))
    assert not r.equals_g
    assert r.new_system == doc(f"A{2 * n - 1}", ids(1, 2, 2 * n - 1), [])
    assert r.new_group_description == (f"A{2 * n - 1}",)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_rank0_b(n):
    r = aut_group(F.rank0_B(n))
    assert r.new_system == doc(f"D{n + 1}", ids(1, 1, n), [])


def test_rank0_g2_and_others():
    assert aut_group(F.rank0_G2()).new_system == doc("B3", ["1.2", "1.3"], [])
    # other parabolics of the same groups are unchanged
    for sys in (F.rank0("C", 3, [1, 2]), F.rank0("B", 3, [2, 3]), F.rank0("G", 2, [1]),
                F.rank0("A", 3, [2, 3])):
        r = aut_group(sys)
        assert r.equals_g and r.new_system == sys


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_9b(n):
    r = aut_group(F.case_9B(n))
    assert r.verdicts[0].kind == "Rank1KnownFixture"
    assert r.new_system == doc(f"D{n + 1}", ids(1, 2, n), [])
    assert r.homogeneous_under_aut


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_9c(n):
    r = aut_group(F.case_9C(n))
    assert r.verdicts[0].kind == "PSpToPSL"
    assert r.new_system == doc(f"A{2 * n - 1}", ids(1, 3, 2 * n - 1), [])


def test_case15():
    r = aut_group(F.case15())
    assert r.equals_g and r.boundary_under_aut == {1} and not r.homogeneous_under_aut
    assert r.new_system == F.case15()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_rank2_cases_1_to_3(n):
    big = f"A{2 * n - 1}"
    r1 = aut_group(F.case_1_rk2(n))
    assert fixed_divisors(F.case_1_rk2(n)) == {1}
    assert r1.new_system == doc(f"A1x{big}", ids(2, 3, 2 * n - 1), [{"1.1": "1", "2.1": "1"}])
    r2 = aut_group(F.case_2_rk2(n))
    assert fixed_divisors(F.case_2_rk2(n)) == {1}
    assert r2.new_system == doc(big, ids(1, 3, 2 * n - 1), [{"1.1": "2"}])
    r3 = aut_group(F.case_3_rk2(n))
    assert fixed_divisors(F.case_3_rk2(n)) == {1}
    assert r3.new_system == doc(big, ids(1, 3, 2 * n - 1), [{"1.1": "1"}],
                                [{"label": "D+", "moved_by": ["1.1"], "row": [1]},
                                 {"label": "D-", "moved_by": ["1.1"], "row": [1]}])


def test_rank2_case_4():
    assert len(fixed_divisors(F.case_4_rk2())) == 1
    r = aut_group(F.case_4_rk2())
    assert r.verdicts[0].kind == "Rank2B4"
    assert r.new_system == doc("D5", ["1.2", "1.3", "1.4"], [{"1.2": "1", "1.3": "2", "1.4": "1", "1.5": "2"}])


def test_rank2_case_5():
    r = aut_group(F.case_5_rk2(3))
    assert r.verdicts[0].detail == "5_{rk=2}"
    assert r.new_system == doc("A2xA5", ids(2, 3, 5), [{"1.1": "1", "2.1": "1"}])


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3)])
def test_3_rkgt2(n, m):
    r = aut_group(F.case_3_rk_gt2(n, m))
    sp = ids(1, 3, 2 * n - 1) + ids(2, 3, 2 * m - 1)
    assert r.new_system == doc(f"A{2 * n - 1}xA{2 * m - 1}", sp, [{"1.1": "1", "2.1": "1"}])


def test_2_rkgt2_keeps_colors():
    sys = F.case_2_rk_gt2(2)
    assert psp_criterion(sys) == {1}
    new, comps = psp_to_psl_transform(sys, {1})
    assert [str(c) for c in comps] == ["A3", "A1"]
    assert [(c.label, c.moved_by) for c in new.acolors] == [(c.label, c.moved_by) for c in sys.acolors]
    assert [c.row for c in new.acolors] == [(1, 1), (1, -1), (-1, 1)]
    assert validate(new) == []


def test_psp_transform_preconditions():
    # S^p of the C3 factor must be exactly alpha_3
    wrong_sp = doc("C3", [], [{"1.1": "1", "1.2": "2", "1.3": "1"}])
    assert psp_criterion(wrong_sp) == {1}
    with pytest.raises(NotClassified):
        psp_to_psl_transform(wrong_sp, {1})
    with pytest.raises(NotClassified):
        aut_group(wrong_sp)
    with pytest.raises(NotClassified):
        psp_to_psl_transform(F.case15(), {1})


def test_not_adjoint():
    with pytest.raises(NotAdjoint):
        aut_group(F.fixture_10_5D())
    with pytest.raises(NotAdjoint):
        aut_group(F.fixture_13_7B())


def test_rank1_unspecified():
    for sys in (F.fixture_11_6D(), F.fixture_14_8B()):
        r = aut_group(sys)
        assert not r.equals_g and r.new_system is None
        assert r.verdicts[0].kind == "Rank1UnspecifiedHomogeneous"


def test_non_cuspidal_rank1_unchanged():
    sys = SphericalSystem(RootSystem.of("A2"), frozenset(), (Weight({R(1, 1): 2}),))
    r = aut_group(sys)
    assert r.equals_g


def test_main2_witnesses():
    assert main2_criterion(F.case_1_rk2(3)) == (True, "b:1.1,2.1")
    assert main2_criterion(F.case_3_rk2(3)) == (True, "a:D+")
    assert main2_criterion(F.group_compactification(2)) == (False, None)
    with pytest.raises(RankTooSmall):
        main2_criterion(F.case15())
    with pytest.raises(NotIndecomposable):
        main2_criterion(product(F.case15(), F.case15()))


def _indecomposable_rank2(corpus):
    return {n: s for n, s in corpus.items() if s.rank >= 2 and decompose(s).trivial}


def test_oracle_equivalence(corpus):
    systems = _indecomposable_rank2(corpus)
    assert len(systems) >= 12
    for name, sys in systems.items():
        assert main2_criterion(sys)[0] == (not aut_group(sys).equals_g), name


def test_new_systems_have_all_divisors_fixed(corpus):
    for name, sys in corpus.items():
        r = aut_group(sys)
        if r.new_system is not None and not r.equals_g:
            assert validate(r.new_system) == []
            assert fixed_divisors(r.new_system) == set(range(1, r.new_system.rank + 1)), name


def test_every_larger_group_at_rank2_is_psp_or_b4(corpus):
    for name, sys in corpus.items():
        if sys.rank >= 2 and not aut_group(sys).equals_g:
            assert psp_criterion(sys) or sys == F.case_4_rk2(), name


def _concat(reports):
    return ([v.kind for r in reports for v in r.verdicts],
            tuple(g for r in reports for g in r.new_group_description))


def test_product_law(corpus):
    names = sorted(corpus)
    rng = random.Random(3)
    for _ in range(20):
        a, b = (corpus[n] for n in rng.sample(names, 2))
        ra, rb, rp = aut_group(a), aut_group(b), aut_group(product(a, b))
        assert ([v.kind for v in rp.verdicts], rp.new_group_description) == _concat([ra, rb])
        assert rp.equals_g == (ra.equals_g and rb.equals_g)
        if ra.new_system is not None and rb.new_system is not None:
            assert rp.new_system == product(ra.new_system, rb.new_system)
        else:
            assert rp.new_system is None
