from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wonderaut.errors import InvalidRootId, InvalidRootSystem, InvalidWeight
from wonderaut.roots import (RootSystem, SimpleComponent, SimpleRootId, Weight, cartan_pairing,
                             coroot_eval, orthogonal, support)

R = SimpleRootId
half = Fraction(1, 2)


def e(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i - 1] += Fraction(c)
    return v


def epsilon_roots(kind, n):
    """Simple roots in orthonormal coordinates, written out independently of the library."""
    if kind == "A":
        return [e(n + 1, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
    if kind == "B":
        return [e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [e(n, (n, 1))]
    if kind == "C":
        return [e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [e(n, (n, 2))]
    if kind == "D":
        return [e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [e(n, (n - 1, 1), (n, 1))]
    if kind == "E":
        a1 = [half] + [-half] * 6 + [half]
        roots = [a1, e(8, (1, 1), (2, 1)), e(8, (2, 1), (1, -1))]
        roots += [e(8, (i, 1), (i - 1, -1)) for i in range(3, 8)]
        return roots[:n]
    if kind == "F":
        return [e(4, (2, 1), (3, -1)), e(4, (3, 1), (4, -1)), e(4, (4, 1)),
                [half, -half, -half, -half]]
    if kind == "G":
        return [e(3, (1, 1), (2, -1)), e(3, (1, -2), (2, 1), (3, 1))]
    raise AssertionError(kind)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


ALL_TYPES = ([("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)]
             + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)]
             + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_cartan_matches_epsilon_realisation(kind, n):
    vs = epsilon_roots(kind, n)
    rs = RootSystem((SimpleComponent(kind, n),))
    for i in range(n):
        for j in range(n):
            expected = 2 * dot(vs[i], vs[j]) / dot(vs[i], vs[i])
            assert cartan_pairing(rs, R(1, i + 1), R(1, j + 1)) == expected


LITERAL = {
    "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
    "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
    "F4": ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2)),
    "G2": ((2, -3), (-1, 2)),
    "D4": ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    "E6": ((2, 0, -1, 0, 0, 0), (0, 2, 0, -1, 0, 0), (-1, 0, 2, -1, 0, 0),
           (0, -1, -1, 2, -1, 0), (0, 0, 0, -1, 2, -1), (0, 0, 0, 0, -1, 2)),
}


@pytest.mark.parametrize("name", sorted(LITERAL))
def test_cartan_literal_tables(name):
    assert SimpleComponent.parse(name).cartan_matrix() == LITERAL[name]


def test_cartan_examples():
    c3 = RootSystem.of("C3")
    assert cartan_pairing(c3, R(1, 2), R(1, 3)) == -2
    assert cartan_pairing(c3, R(1, 3), R(1, 2)) == -1
    g2 = RootSystem.of("G2")
    assert cartan_pairing(g2, R(1, 1), R(1, 2)) == -3
    assert cartan_pairing(g2, R(1, 2), R(1, 1)) == -1
    assert cartan_pairing(RootSystem.of("A1", "C2"), R(1, 1), R(2, 1)) == 0


def test_cartan_rejects_foreign_roots():
    with pytest.raises(InvalidRootId):
        cartan_pairing(RootSystem.of("C3"), R(1, 4), R(1, 1))
    with pytest.raises(InvalidRootId):
        cartan_pairing(RootSystem.of("C3"), R(2, 1), R(1, 1))


@pytest.mark.parametrize("kind,n", ALL_TYPES)
def test_off_diagonal_sign_symmetry(kind, n):
    m = SimpleComponent(kind, n).cartan_matrix()
    for i in range(n):
        assert m[i][i] == 2
        for j in range(n):
            if i != j:
                assert (m[i][j] == 0) == (m[j][i] == 0)
                assert m[i][j] <= 0


@pytest.mark.parametrize("bad", ["E5", "E9", "F3", "G3", "B1", "C1", "D2", "A0", "X2"])
def test_component_rank_bounds(bad):
    with pytest.raises(InvalidRootSystem):
        SimpleComponent.parse(bad)


def test_coroot_eval_examples():
    g2 = RootSystem.of("G2")
    assert coroot_eval(g2, R(1, 1), Weight({R(1, 1): 1, R(1, 2): 1})) == -1
    for n in range(3, 8):
        cn = RootSystem.of(f"C{n}")
        gamma = Weight({R(1, 1): 1, **{R(1, i): 2 for i in range(2, n)}, R(1, n): 1})
        assert coroot_eval(cn, R(1, 2), gamma) == 1
    assert coroot_eval(g2, R(1, 2), Weight()) == 0


def test_coroot_eval_rejects_foreign_weight():
    with pytest.raises(InvalidWeight):
        coroot_eval(RootSystem.of("A2"), R(1, 1), Weight({R(2, 1): 1}))


def test_orthogonal_and_support():
    rs = RootSystem.of("A1", "C3")
    w = Weight({R(1, 1): 1, R(2, 1): 1})
    assert support(w) == {R(1, 1), R(2, 1)}
    assert orthogonal(rs, R(1, 1), R(2, 1))
    assert not orthogonal(RootSystem.of("C2"), R(1, 1), R(1, 2))
    assert not orthogonal(rs, R(2, 2), R(2, 2))


def test_weight_denominator_bound():
    assert Weight({R(1, 1): Fraction(3, 2)}).coeff(R(1, 1)) == Fraction(3, 2)
    with pytest.raises(InvalidWeight):
        Weight({R(1, 1): Fraction(1, 3)})


def test_weight_drops_zero_coefficients():
    assert Weight({R(1, 1): 0, R(1, 2): 1}) == Weight({R(1, 2): 1})
    assert not Weight({R(1, 1): 0})


RS = RootSystem.of("B3", "G2", "A2")
coeff = st.integers(-6, 6).map(lambda k: Fraction(k, 2))
weights = st.dictionaries(st.sampled_from(RS.roots()), coeff).map(Weight)


@given(weights, weights, st.integers(-4, 4), st.sampled_from(RS.roots()))
def test_coroot_eval_is_linear(u, v, k, alpha):
    assert coroot_eval(RS, alpha, u + v) == coroot_eval(RS, alpha, u) + coroot_eval(RS, alpha, v)
    scaled = u * k
    if all(c.denominator <= 2 for _, c in scaled.items()):
        assert coroot_eval(RS, alpha, scaled) == k * coroot_eval(RS, alpha, u)
