import random
from fractions import Fraction
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from paramodular import _exact as ex
from paramodular.numtheory import unitary_divisors, xi_element
from paramodular.orthogonal import (LatticeVector, OrthogonalMap, bilinear, disc_action,
                                    divisor_of, gram_from_wedge, gram_st, in_plus_component,
                                    involution_classify, k3_complement_check, k3_gram,
                                    e8_minus, preserves_form, psi_map, reflection,
                                    reflection_integral_criterion, siegel_to_quadric,
                                    vd_image_template, Z_I)
from paramodular.symplectic import SiegelPoint, SymplecticSimilitude, make_vtilde, sample_gamma_t

C = ex.ComplexScalar


@pytest.mark.parametrize("t", [1, 2, 3, 6, 11, 30])
def test_gram_matches_wedge_pairing(t):
    assert ex.equal(gram_from_wedge(t), gram_st(t))
    assert ex.signature(gram_st(t)) == (3, 2)


def test_gram_t1():
    assert gram_st(1)[2][2] == 2
    assert gram_st(1)[0][4] == gram_st(1)[4][0] == -1


def test_psi_of_minus_identity():
    for t in (1, 4, 9):
        assert ex.is_identity(psi_map(SymplecticSimilitude(ex.scale(ex.identity(4), -1)), t).m)


@given(st.integers(1, 20), st.integers(0, 10 ** 6))
@settings(max_examples=40)
def test_psi_is_a_homomorphism_into_so(t, seed):
    g, h = sample_gamma_t(t, seed), sample_gamma_t(t, seed + 1)
    pg, ph = psi_map(g, t), psi_map(h, t)
    assert ex.equal(psi_map(g @ h, t).m, (pg @ ph).m)
    assert pg.is_isometry(t) and pg.det() == 1
    assert disc_action(pg, t) == 1
    assert in_plus_component(pg, t)


@pytest.mark.parametrize("t", [2, 6, 10, 12, 30, 35])
def test_vd_image(t):
    for d in unitary_divisors(t):
        o = psi_map(make_vtilde(t, d), t)
        assert ex.equal(o.m, vd_image_template(t, d).m)
        assert disc_action(o, t) == xi_element(t, d).value


def test_disc_action_identity():
    assert disc_action(OrthogonalMap(ex.identity(5)), 7) == 1


def test_disc_action_rejects_fractions():
    m = ex.identity(5)
    m[0][0] = Fraction(1, 2)
    with pytest.raises(ValueError):
        disc_action(OrthogonalMap(m), 3)


def test_plus_component():
    assert in_plus_component(OrthogonalMap(ex.identity(5)), 5)
    # swapping the two hyperbolic planes' roles flips Im z1: (x1 <-> x5) with x2 <-> x4 negated
    swap = OrthogonalMap([[0, 0, 0, 0, 1], [0, 0, 0, -1, 0], [0, 0, -1, 0, 0],
                          [0, -1, 0, 0, 0], [1, 0, 0, 0, 0]])
    assert swap.is_isometry(5)
    assert not in_plus_component(swap, 5)


def test_quadric_embedding():
    i = C(0, 1)
    z = SiegelPoint(i, C(0), i)
    assert siegel_to_quadric(z, 1) == list(Z_I)
    rng = random.Random(4)
    for t in (1, 3, 8):
        for _ in range(20):
            y1, y3 = Fraction(rng.randint(1, 9)), Fraction(rng.randint(1, 9))
            z = SiegelPoint(C(rng.randint(-3, 3), y1), C(Fraction(rng.randint(-3, 3), 2), 0),
                            C(rng.randint(-3, 3), y3))
            v = siegel_to_quadric(z, t)
            assert bilinear(v, v, t) == 0


def test_divisor_examples():
    t = 7
    assert divisor_of(LatticeVector([0, 1, 0, 0, 0]), t) == 1
    assert divisor_of(LatticeVector([0, 0, 1, 0, 0]), t) == 2 * t
    for a, b, c in [(2, 1, 4), (6, 3, 9), (14, 1, 7)]:
        assert divisor_of(LatticeVector([0, a, b, c, 0]), t) == gcd(gcd(a, 2 * t * b), c)
    with pytest.raises(ValueError):
        divisor_of(LatticeVector([0] * 5), t)


def test_reflection_properties():
    t = 5
    v = LatticeVector([0, -1, 0, 1, 0])
    r = reflection(v, t)
    assert ex.is_identity(ex.matmul(r.map.m, r.map.m))
    assert r.map.is_isometry(t)
    assert involution_classify(-r.map, t).tag == "reflection-type"
    with pytest.raises(ValueError):
        reflection(LatticeVector([1, 0, 0, 0, 0]), t)


@pytest.mark.parametrize("t", [1, 2, 3, 5, 6])
def test_reflection_matrix_closed_form(t):
    # sigma_l for l = (0, a, b, c, 0) with l^2 = 2tb^2 - 2ac
    for a, b, c in [(1, 1, 1), (2, 1, -1), (-1, 2, 3)]:
        n = 2 * t * b * b - 2 * a * c
        if n == 0:
            continue
        m = reflection(LatticeVector([0, a, b, c, 0]), t).map.m
        f = Fraction(2, n)
        expected = [[1, 0, 0, 0, 0],
                    [0, 1 + f * a * c, -f * 2 * t * a * b, f * a * a, 0],
                    [0, f * b * c, 1 - f * 2 * t * b * b, f * a * b, 0],
                    [0, f * c * c, -f * 2 * t * b * c, 1 + f * a * c, 0],
                    [0, 0, 0, 0, 1]]
        assert ex.equal(m, ex.as_matrix(expected))


@pytest.mark.parametrize("t", [1, 2, 3, 5, 6, 10])
def test_reflection_integrality_criterion_exhaustive(t):
    for v in product(range(-2, 3), repeat=5):
        if gcd(*v) != 1:
            continue
        lv = LatticeVector(v)
        if lv.norm(t) == 0:
            continue
        assert reflection(lv, t).integral == reflection_integral_criterion(lv, t)


@pytest.mark.parametrize("t", [2, 3, 5, 6, 13])
def test_minus_reflection_disc_action(t):
    for a, b, c in product(range(-3, 4), repeat=3):
        if gcd(gcd(a, b), c) != 1:
            continue
        n = 2 * t * b * b - 2 * a * c
        if n <= 0:
            continue
        r = reflection(LatticeVector([0, a, b, c, 0]), t)
        if r.integral:
            assert disc_action(-r.map, t) == (Fraction(4 * t, n) * b * b - 1) % (2 * t)


def test_involution_classify_rejects():
    with pytest.raises(ValueError):
        involution_classify(OrthogonalMap(ex.identity(5)), 3)
    with pytest.raises(ValueError):
        involution_classify(OrthogonalMap(ex.scale(ex.identity(5), 2)), 3)


def test_scaling_invariance():
    t = 6
    o = psi_map(sample_gamma_t(t, 9), t)
    for c in (-2, 3, Fraction(1, 7)):
        assert preserves_form(o.m, ex.scale(gram_st(t), c))


@given(st.lists(st.integers(-9, 9), min_size=5, max_size=5),
       st.lists(st.integers(-9, 9), min_size=5, max_size=5), st.integers(1, 30))
def test_norms_even_and_dual_pairing_integral(u, v, t):
    lu = LatticeVector(u)
    assert lu.norm(t) % 2 == 0
    dual = LatticeVector([v[0], v[1], Fraction(v[2], 2 * t), v[3], v[4]])
    assert dual.is_dual(t)
    assert lu.pairing(dual, t).denominator == 1


def test_e8_and_k3():
    assert ex.det(e8_minus()) == 1
    assert all(e8_minus()[i][i] == -2 for i in range(8))
    assert ex.signature(k3_gram()) == (3, 19)
    for t in (1, 2, 5, 12):
        assert k3_complement_check(t).ok
