from fractions import Fraction

import pytest

from genusone import fixtures
from genusone.arith import padic_valuation
from genusone.equations import (
    GenusOneEquation,
    apply_transformation,
    compose,
    det_transformation,
    equation_from_json,
    identity_transformation,
    invariants,
    is_integral,
    jacobian,
    parse_equation,
    transformation1,
    transformation3,
    weierstrass,
)
from tests.conftest import random_equation, random_transformation


def test_det_examples():
    assert det_transformation(transformation1(1)) == 1
    g = transformation3(Fraction(1, 5), ((5, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert det_transformation(g) == 1
    g = transformation3(Fraction(1, 475), ((5, 0, 0), (0, 1, 0), (0, 0, 95)))
    assert det_transformation(g) == 1


def test_apply_identity(rng):
    for deg in (1, 2, 3, 4):
        eq = random_equation(rng, deg)
        assert apply_transformation(identity_transformation(deg), eq) == eq


def test_apply_degree_mismatch():
    with pytest.raises(ValueError):
        apply_transformation(identity_transformation(2), weierstrass(0, 0, 0, 1, 1))


def test_scaling_action_on_weierstrass():
    # [u;0,0,0] divides a_i by u^i, matching det([u;r,s,t]) = 1/u and the
    # weight-4/6/12 covariance of c4/c6/Delta
    E = weierstrass(1, 2, 3, 4, 5)
    u = Fraction(3)
    img = apply_transformation(transformation1(u), E)
    assert img.coeffs == tuple(c / u**i for c, i in zip(E.coeffs, (1, 2, 3, 4, 6)))


def test_weight_covariance(rng):
    for deg in (1, 2, 3, 4):
        for _ in range(30):
            eq = random_equation(rng, deg)
            g = random_transformation(rng, deg)
            d = det_transformation(g)
            a = invariants(eq)
            b = invariants(apply_transformation(g, eq))
            assert b.c4 == d**4 * a.c4
            assert b.c6 == d**6 * a.c6
            assert b.delta == d**12 * a.delta


def test_composition(rng):
    for deg in (1, 2, 3, 4):
        for _ in range(15):
            eq = random_equation(rng, deg)
            g1 = random_transformation(rng, deg)
            g2 = random_transformation(rng, deg)
            assert apply_transformation(g2, apply_transformation(g1, eq)) == \
                apply_transformation(compose(g2, g1), eq)


def test_delta_identity(rng):
    for deg in (1, 2, 3, 4):
        for _ in range(20):
            inv = invariants(random_equation(rng, deg))
            assert inv.delta == (inv.c4**3 - inv.c6**2) / 1728


def test_invariants_basic_curve():
    inv = invariants(weierstrass(0, 0, 0, -1, 0))  # y^2 = x^3 - x
    assert (inv.c4, inv.c6, inv.delta) == (48, 0, 64)


def test_invariants_example_curves():
    assert invariants(fixtures.EXAMPLE2_CURVE).delta == 185
    inv = invariants(fixtures.EXAMPLE1_CURVE)
    assert inv.delta == 5**9 * 19**2


def test_quartic_valuations_match_curve():
    d = invariants(fixtures.EXAMPLE2_QUARTIC).delta
    assert padic_valuation(d, 5) == 1 and padic_valuation(d, 37) == 1
    for p in (7, 11, 13):
        assert padic_valuation(d, p) == 0


def test_cubic_matches_its_jacobian_curve():
    # the minimal plane cubic has exactly the invariants of its Jacobian
    inv = invariants(fixtures.EXAMPLE1_CUBIC)
    ref = invariants(fixtures.EXAMPLE1_CURVE)
    assert (inv.c4, inv.c6, inv.delta) == (ref.c4, ref.c6, ref.delta)


def test_calibration_families(rng):
    # the canonical degree-n models of y^2 = x^3 + Ax + B reproduce the
    # Weierstrass invariants exactly
    for _ in range(10):
        A, B = rng.randint(-9, 9), rng.randint(-9, 9)
        if 4 * A**3 + 27 * B**2 == 0:
            continue
        want = (-48 * A, -864 * B)
        quartic = GenusOneEquation(2, (0, 0, 0, 0, 1, 0, A, B))
        cubic = GenusOneEquation(3, (-1, 0, -B, 0, 0, 0, 1, -A, 0, 0))
        quadrics = GenusOneEquation(
            4, (0, 0, -1, 0, 1, 0, 0, 0, 0, 0, -B, -A, 0, 0, 0, -1, 0, 0, 0, 1)
        )
        for eq in (quartic, cubic, quadrics):
            inv = invariants(eq)
            assert (inv.c4, inv.c6) == want


def test_is_integral():
    assert is_integral(fixtures.EXAMPLE1_CUBIC)
    assert not is_integral(weierstrass(0, 0, 0, Fraction(-1, 2), 0))
    g = transformation3(Fraction(1, 5), ((5, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert is_integral(apply_transformation(g, fixtures.EXAMPLE1_CUBIC))


def test_jacobian():
    E = weierstrass(1, -1, 0, -617, 5916)
    J = jacobian(E)
    a, b = invariants(E), invariants(J)
    assert (b.c4, b.c6, b.delta) == (6**4 * a.c4, 6**6 * a.c6, 6**12 * a.delta)
    with pytest.raises(ValueError, match="singular"):
        jacobian(weierstrass(0, 0, 0, 0, 0))


def test_text_and_json_round_trip(rng):
    for deg in (1, 2, 3, 4):
        eq = random_equation(rng, deg)
        eq = GenusOneEquation(deg, tuple(c + Fraction(1, 7) for c in eq.coeffs))
        assert parse_equation(eq.to_text()) == eq
        assert equation_from_json(eq.to_json_dict()) == eq


def test_coefficient_length_validation():
    with pytest.raises(ValueError):
        GenusOneEquation(3, (1, 2, 3))
