import itertools

import pytest

from wonderaut import fixtures as F
from wonderaut.errors import InvalidEmbedding, InvalidIndex, InvalidSystem
from wonderaut.roots import RootSystem, SimpleRootId as R, Weight, coroot_eval
from wonderaut.system import (AColor, SphericalSystem, induce, localize, rank, require_valid,
                              supp_sigma, validate)


def codes(sys):
    return [v.code for v in validate(sys)]


def test_case_3_rk2_is_clean_and_v3_sum_holds():
    sys = F.case_3_rk2(3)
    assert validate(sys) == []
    a1 = R(1, 1)
    expected = tuple(coroot_eval(sys.rs, a1, g) for g in sys.sigma)
    assert expected == (2, 0)
    d_plus, d_minus = sys.acolors
    assert tuple(a + b for a, b in zip(d_plus.row, d_minus.row)) == expected


def test_v3_detects_bad_row():
    base = F.case_3_rk2(3)
    bad = SphericalSystem(base.rs, base.sp, base.sigma,
                          (AColor("D+", {R(1, 1)}, (2, 0)), base.acolors[1]))
    assert "V3" in codes(bad)


def test_v3_wants_exactly_two_colors():
    base = F.case_3_rk2(2)
    assert "V3" in codes(SphericalSystem(base.rs, base.sp, base.sigma, base.acolors[:1]))


def test_case15_clean():
    assert validate(F.case15()) == []


def test_v1_dependent_roots():
    rs = RootSystem.of("A2")
    g = Weight({R(1, 1): 1, R(1, 2): 1})
    assert "V1" in codes(SphericalSystem(rs, frozenset(), (g, g * 2)))


def test_v2_negative_coefficient():
    rs = RootSystem.of("A2")
    assert "V2" in codes(SphericalSystem(rs, frozenset(), (Weight({R(1, 1): 1, R(1, 2): -1}),)))


def test_v4_non_integral_coroot():
    # alpha_1 of B2 is outside supp and S^p; <alpha_1^v, alpha_2/2> = -1/2
    rs = RootSystem.of("B2")
    sys = SphericalSystem(rs, frozenset(), (Weight({R(1, 2): "1/2"}),), adjoint_faithful=False)
    assert "V4" in codes(sys)


def test_v5_half_coroot():
    # 2 alpha_1 in A3 beside alpha_2 + alpha_3: <alpha_1^v, alpha_2 + alpha_3> / 2 = -1/2
    rs = RootSystem.of("A3")
    sys = SphericalSystem(rs, frozenset(), (Weight({R(1, 1): 2}), Weight({R(1, 2): 1, R(1, 3): 1})))
    assert "V5" in codes(sys)


def test_v6_tilde_pair_with_different_coroots():
    # alpha_1 ~ alpha'_1 through alpha_1 + alpha'_1, but alpha_2 breaks the symmetry
    rs = RootSystem.of("A2", "A1")
    sys = SphericalSystem(rs, frozenset(), (Weight({R(1, 1): 1, R(2, 1): 1}), Weight({R(1, 2): 2})))
    assert "V6" in codes(sys)


def test_v7_sp_clashes_with_simple_spherical_root():
    rs = RootSystem.of("A1")
    sys = SphericalSystem(rs, frozenset({R(1, 1)}), (Weight({R(1, 1): 1}),),
                          (AColor("x", {R(1, 1)}, (1,)), AColor("y", {R(1, 1)}, (1,))))
    assert "V7" in codes(sys)


def test_structural_errors_at_construction():
    rs = RootSystem.of("A2")
    with pytest.raises(InvalidSystem):
        SphericalSystem(rs, frozenset({R(1, 3)}), ())
    with pytest.raises(InvalidSystem):
        SphericalSystem(rs, frozenset(), (Weight({R(1, 1): 1}),), (AColor("x", {R(1, 1)}, (1, 0)),))
    with pytest.raises(InvalidSystem):
        # moved_by must be a simple spherical root
        SphericalSystem(rs, frozenset(), (Weight({R(1, 1): 1, R(1, 2): 1}),),
                        (AColor("x", {R(1, 1)}, (1,)),))


def test_require_valid_raises_with_violations():
    rs = RootSystem.of("A2")
    g = Weight({R(1, 1): 1, R(1, 2): 1})
    with pytest.raises(InvalidSystem) as info:
        require_valid(SphericalSystem(rs, frozenset(), (g, g)))
    assert [v.code for v in info.value.violations] == ["V1"]


def test_localize_3_rk2_to_9c():
    for n in (2, 3, 4):
        loc = localize(F.case_3_rk2(n), {2})
        assert loc == F.case_9C(n)


def test_localize_1_rk2_keep_first():
    for n in (2, 3, 4):
        loc = localize(F.case_1_rk2(n), {1})
        assert loc.sigma == (Weight({R(1, 1): 1, R(2, 1): 1}),)
        assert loc.acolors == ()
        assert loc.sp == frozenset(R(2, i) for i in range(3, n + 1))


def test_localize_all_is_identity(corpus):
    for sys in corpus.values():
        assert localize(sys, range(1, sys.rank + 1)) == sys


def test_localize_index_errors():
    with pytest.raises(InvalidIndex):
        localize(F.case15(), {2})
    with pytest.raises(InvalidIndex):
        localize(F.case15(), {0})


def test_localize_rank_clean_and_composes(corpus):
    for name, sys in corpus.items():
        n = sys.rank
        for size in range(n + 1):
            for keep in itertools.combinations(range(1, n + 1), size):
                loc = localize(sys, keep)
                assert loc.rank == len(keep), name
                assert validate(loc) == [], (name, keep)
                # a subset of keep, addressed in the numbering of loc
                for sub_size in range(len(keep) + 1):
                    for pos in itertools.combinations(range(1, len(keep) + 1), sub_size):
                        direct = localize(sys, [keep[p - 1] for p in pos])
                        assert localize(loc, pos) == direct


def test_induce_transport_9c():
    core = F.case_9C(3)
    emb = {R(1, i): R(2, i) for i in range(1, 4)}
    out = induce(core, RootSystem.of("A1", "C3"), emb)
    assert out.sigma == (F.gamma_star(3, comp=2),)
    assert out.rank == 1


def test_induce_identity():
    core = F.rank0_C(4)
    assert induce(core, core.rs, {r: r for r in core.rs.roots()}) == core


def test_induce_rejects_non_embedding():
    core = F.case15()
    with pytest.raises(InvalidEmbedding):
        induce(core, RootSystem.of("B3"), {R(1, 1): R(1, 3), R(1, 2): R(1, 2)})
    with pytest.raises(InvalidEmbedding):
        induce(core, RootSystem.of("G2"), {R(1, 1): R(1, 1), R(1, 2): R(1, 1)})


def _identity(rs):
    return {r: r for r in rs.roots()}


def test_induce_preserves_rank_rows_cleanliness():
    cases = [(F.case_4_rk2(), RootSystem.of("B5"), F._shift_embedding(F.case_4_rk2().rs, 1, 1)),
             (F.case_1_rk2(2), RootSystem.of("A1", "C3"), F._shift_embedding(F.case_1_rk2(2).rs, 2, 1)),
             (F.case_3_rk2(3), RootSystem.of("C4"), F._shift_embedding(F.case_3_rk2(3).rs, 1, 1)),
             (F.case_1_rk2(3), RootSystem.of("A2", "C3"), _identity(F.case_1_rk2(3).rs)),
             (F.case15(), RootSystem.of("G2", "A3"), _identity(F.case15().rs))]
    for core, target, emb in cases:
        big = induce(core, target, emb)
        assert big.rank == core.rank
        assert len(big.acolors) == len(core.acolors)
        assert [c.row for c in big.acolors] == [c.row for c in core.acolors]
        assert validate(big) == []
        for a in core.rs.roots():
            assert core.coroot_row(a) == big.coroot_row(emb[a])


def test_rank_and_support():
    assert rank(F.case15()) == 1
    assert rank(F.rank0_C(3)) == 0 and rank(F.rank0_G2()) == 0
    for n in (2, 3, 4):
        assert supp_sigma(F.case_1_rk2(n)) == {R(1, 1)} | {R(2, i) for i in range(1, n + 1)}
