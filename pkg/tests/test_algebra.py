from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from coquat import (
    CausalCharacter,
    ClassifyConfig,
    LightlikeInverse,
    LightlikeNormalization,
    NonFiniteValue,
    SplitQuaternion,
    UNIT_I,
    UNIT_J,
    UNIT_K,
    Vector3M,
    classify_vector,
    format_quaternion,
    lorentz_cross,
    lorentz_inner,
    mul,
)
from coquat.sampling import random_quaternion

ONE = SplitQuaternion(1.0)

finite_components = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
quaternions = st.builds(SplitQuaternion, finite_components, finite_components,
                        finite_components, finite_components)


def approx_quat(q, expected, tol=1e-12):
    return all(abs(a - b) <= tol for a, b in zip(q.components(), expected.components()))


# -- constructors ------------------------------------------------------------


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), -float("inf")])
def test_constructor_rejects_non_finite(bad):
    with pytest.raises(NonFiniteValue):
        SplitQuaternion(bad)
    with pytest.raises(NonFiniteValue):
        Vector3M(0.0, bad, 0.0)


def test_overflowing_arithmetic_is_rejected():
    big = SplitQuaternion(1e308)
    with pytest.raises(NonFiniteValue):
        big + big


def test_scalar_and_vector_accessors():
    q = SplitQuaternion(1, 2, 3, 4)
    assert q.scalar_part == 1.0
    assert q.vector_part == Vector3M(2.0, 3.0, 4.0)


# -- linear operations -------------------------------------------------------


def test_linear_op_examples():
    assert SplitQuaternion(1, 1, 0, 0) + SplitQuaternion(0, 0, 1, -1) == SplitQuaternion(1, 1, 1, -1)
    assert SplitQuaternion(1.5, -2, 3, 0.25) * 0.0 == SplitQuaternion(0)
    q = SplitQuaternion(0.3, -1.25, 2, 0.5)
    assert q - q == SplitQuaternion(0)


@given(quaternions, quaternions, quaternions)
def test_addition_commutes_and_associates(p, q, r):
    assert p + q == q + p
    lhs = (p + q) + r
    rhs = p + (q + r)
    assert approx_quat(lhs, rhs, tol=1e-14)


@given(quaternions, quaternions, finite_components)
def test_scaling_distributes_over_addition(p, q, r):
    lhs = (p + q) * r
    rhs = p * r + q * r
    assert approx_quat(lhs, rhs, tol=1e-13)


# -- product -----------------------------------------------------------------

BASIS = {"1": ONE, "i": UNIT_I, "j": UNIT_J, "k": UNIT_K}

PRODUCT_TABLE = {
    ("i", "i"): (-1, 0, 0, 0), ("i", "j"): (0, 0, 0, 1), ("i", "k"): (0, 0, -1, 0),
    ("j", "i"): (0, 0, 0, -1), ("j", "j"): (1, 0, 0, 0), ("j", "k"): (0, -1, 0, 0),
    ("k", "i"): (0, 0, 1, 0), ("k", "j"): (0, 1, 0, 0), ("k", "k"): (1, 0, 0, 0),
}


@pytest.mark.parametrize(("a", "b"), sorted(PRODUCT_TABLE))
def test_basis_products_match_table_exactly(a, b):
    expected = tuple(float(x) for x in PRODUCT_TABLE[(a, b)])
    assert mul(BASIS[a], BASIS[b]).components() == expected


def test_one_is_the_multiplicative_identity():
    q = SplitQuaternion(0.5, -1, 2, 3)
    assert mul(ONE, q) == q
    assert mul(q, ONE) == q


def test_product_example_expanded_by_hand():
    q = SplitQuaternion(1, 2, 1, 0)
    assert mul(q, q) == SplitQuaternion(-2, 4, 2, 0)


def test_noncommutativity_witness():
    assert mul(UNIT_J, UNIT_I) == -UNIT_K
    assert mul(UNIT_I, UNIT_J) == UNIT_K


def test_operator_mul_matches_function(rng):
    p = random_quaternion(rng)
    q = random_quaternion(rng)
    assert p * q == mul(p, q)


def test_scalar_multiplication_both_sides():
    q = SplitQuaternion(1, -2, 0.5, 4)
    assert 2 * q == q * 2 == SplitQuaternion(2, -4, 1, 8)
    assert q / 2 == q * 0.5


@given(quaternions, quaternions)
def test_table_and_formula_paths_agree(p, q):
    from coquat import _backend

    a = _backend.kernels.quat_mul(*p.components(), *q.components())
    b = _backend.kernels.quat_mul_formula(*p.components(), *q.components())
    assert all(abs(x - y) <= 1e-13 for x, y in zip(a, b))


def test_formula_table_agreement_thousand_pairs(rng):
    from coquat import _backend

    worst = 0.0
    for _ in range(1000):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        a = _backend.kernels.quat_mul(*p.components(), *q.components())
        b = _backend.kernels.quat_mul_formula(*p.components(), *q.components())
        worst = max(worst, *(abs(x - y) for x, y in zip(a, b)))
    assert worst <= 1e-13


def test_associativity_on_random_triples(rng):
    for _ in range(300):
        p, q, r = (random_quaternion(rng) for _ in range(3))
        lhs = mul(mul(p, q), r)
        rhs = mul(p, mul(q, r))
        scale = max(1.0, max(abs(c) for c in lhs.components()))
        assert all(abs(a - b) <= 1e-12 * scale
                   for a, b in zip(lhs.components(), rhs.components()))


def test_zero_divisor_nilpotency_is_exact():
    null = UNIT_I + UNIT_J
    assert mul(null, null) == SplitQuaternion(0)


# -- conjugate, quadratic form, norm ----------------------------------------


def test_conjugate_examples():
    assert UNIT_I.conjugate() == -UNIT_I
    assert SplitQuaternion(1, 2, 3, 4).conjugate() == SplitQuaternion(1, -2, -3, -4)
    q = SplitQuaternion(2, 0, 1, 0)
    assert q.conjugate().conjugate() == q


@given(quaternions, quaternions)
def test_conjugation_reverses_products(p, q):
    lhs = mul(p, q).conjugate()
    rhs = mul(q.conjugate(), p.conjugate())
    assert approx_quat(lhs, rhs, tol=1e-13)


def test_iq_examples():
    assert ONE.iq() == 1.0
    assert (UNIT_I + UNIT_J).iq() == 0.0
    assert SplitQuaternion(1, 2, 3, 1).iq() == -5.0


def test_iq_matches_product_with_conjugate(rng):
    for _ in range(200):
        q = random_quaternion(rng)
        prod = mul(q, q.conjugate())
        v = prod.vector_part
        assert max(abs(v.u1), abs(v.u2), abs(v.u3)) <= 1e-15  # cancels to rounding
        assert prod.q0 == q.iq()
        assert mul(q.conjugate(), q).q0 == pytest.approx(q.iq(), rel=1e-13, abs=1e-13)


def test_iq_is_multiplicative(rng):
    for _ in range(300):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        lhs = mul(p, q).iq()
        rhs = p.iq() * q.iq()
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_norm_examples():
    assert UNIT_I.norm() == 1.0
    assert SplitQuaternion(1, 0, 1, 0).norm() == 0.0
    assert SplitQuaternion(2, 0, 1, 0).norm() == pytest.approx(math.sqrt(3), rel=1e-15)


# -- classification ----------------------------------------------------------


def test_classify_examples():
    assert SplitQuaternion(2, 0, 1, 0).classify() is CausalCharacter.TIMELIKE
    assert SplitQuaternion(1, 0, 2, 0).classify() is CausalCharacter.SPACELIKE
    assert SplitQuaternion(1, 0, 1, 0).classify() is CausalCharacter.LIGHTLIKE


def test_classify_agrees_with_iq_sign(rng):
    cfg = ClassifyConfig()
    for _ in range(500):
        q = random_quaternion(rng)
        band = cfg.band(q.magnitude_sq())
        s = q.iq()
        expected = (CausalCharacter.TIMELIKE if s > band
                    else CausalCharacter.SPACELIKE if s < -band
                    else CausalCharacter.LIGHTLIKE)
        assert q.classify(cfg) is expected


def test_classify_band_is_scale_aware():
    # iq = 1e-14 * scale^2-ish: lightlike at any overall scale
    for scale in (1.0, 1e3, 1e-3):
        q = SplitQuaternion(scale, 0.0, scale * (1 + 5e-15), 0.0)
        assert q.classify() is CausalCharacter.LIGHTLIKE
    assert SplitQuaternion(1.0, 0.0, 1.0 + 1e-5, 0.0).classify() is CausalCharacter.SPACELIKE


def test_zero_tau_classifies_exact_zero_only():
    cfg = ClassifyConfig(tau=0.0)
    assert SplitQuaternion(1, 0, 1, 0).classify(cfg) is CausalCharacter.LIGHTLIKE
    assert SplitQuaternion(1, 1e-160, 1, 0).classify(cfg) is CausalCharacter.TIMELIKE


def test_classify_config_validation():
    with pytest.raises(NonFiniteValue):
        ClassifyConfig(tau=-1.0)
    with pytest.raises(NonFiniteValue):
        ClassifyConfig(tau=float("nan"))


# -- Lorentzian 3-vector operations ------------------------------------------


def test_lorentz_inner_signature():
    assert lorentz_inner(Vector3M(1, 0, 0), Vector3M(1, 0, 0)) == -1.0
    assert lorentz_inner(Vector3M(0, 1, 0), Vector3M(0, 1, 0)) == 1.0
    assert lorentz_inner(Vector3M(1, 1, 0), Vector3M(1, 1, 0)) == 0.0


def test_lorentz_inner_is_symmetric(rng):
    for _ in range(100):
        u = Vector3M(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        v = Vector3M(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        assert lorentz_inner(u, v) == pytest.approx(lorentz_inner(v, u), abs=1e-15)


def test_lorentz_cross_examples():
    assert lorentz_cross(Vector3M(1, 0, 0), Vector3M(0, 1, 0)) == Vector3M(0, 0, 1)
    assert lorentz_cross(Vector3M(0, 1, 0), Vector3M(0, 0, 1)) == Vector3M(-1, 0, 0)
    u = Vector3M(0.3, -1.2, 0.5)
    assert lorentz_cross(u, u) == Vector3M(0, 0, 0)


def test_lorentz_cross_antisymmetric_and_orthogonal(rng):
    for _ in range(200):
        u = Vector3M(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        v = Vector3M(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2))
        w = lorentz_cross(u, v)
        flipped = lorentz_cross(v, u)
        assert w == Vector3M(-flipped.u1, -flipped.u2, -flipped.u3)
        assert abs(lorentz_inner(w, u)) <= 1e-13
        assert abs(lorentz_inner(w, v)) <= 1e-13


def test_cross_is_consistent_with_pure_products():
    # For pure p, q: vector part of p*q equals the Lorentzian cross product.
    u = Vector3M(0.7, -0.4, 1.1)
    v = Vector3M(-0.2, 0.9, 0.3)
    prod = mul(u.as_quaternion(), v.as_quaternion())
    assert prod.q0 == pytest.approx(lorentz_inner(u, v), abs=1e-15)
    w = lorentz_cross(u, v)
    assert (prod.q1, prod.q2, prod.q3) == pytest.approx((w.u1, w.u2, w.u3), abs=1e-15)


def test_classify_vector_examples():
    assert classify_vector(Vector3M(1, 0, 0)) is CausalCharacter.TIMELIKE
    assert classify_vector(Vector3M(0, 1, 0)) is CausalCharacter.SPACELIKE
    assert classify_vector(Vector3M(1, 1, 0)) is CausalCharacter.LIGHTLIKE


# -- normalize and inverse ---------------------------------------------------


def test_normalize_examples():
    assert UNIT_I.normalize() == UNIT_I
    q = SplitQuaternion(2, 0, 1, 0).normalize()
    root3 = math.sqrt(3)
    assert q.components() == pytest.approx((2 / root3, 0.0, 1 / root3, 0.0))
    assert abs(q.norm() - 1.0) <= 1e-12


def test_normalize_preserves_character(rng):
    from coquat.sampling import sample_non_lightlike

    for _ in range(100):
        q = sample_non_lightlike(rng)
        unit = q.normalize()
        assert unit.classify() is q.classify()
        assert abs(unit.norm() - 1.0) <= 1e-12


def test_normalize_rejects_lightlike():
    with pytest.raises(LightlikeNormalization):
        SplitQuaternion(1, 0, 1, 0).normalize()


def test_inverse_examples():
    assert ONE.inverse() == ONE
    assert UNIT_I.inverse() == -UNIT_I
    q = SplitQuaternion(2, 0, 1, 0)
    third = 1.0 / 3.0
    assert q.inverse() == SplitQuaternion(2 * third, 0, -third, 0)
    assert mul(q, q.inverse()).components() == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-12)


def test_inverse_round_trip_random(rng):
    from coquat.sampling import sample_non_lightlike

    for _ in range(200):
        q = sample_non_lightlike(rng)
        prod = mul(q, q.inverse())
        assert prod.components() == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-12)


def test_inverse_rejects_lightlike():
    with pytest.raises(LightlikeInverse):
        SplitQuaternion(1, 0, 1, 0).inverse()


# -- formatting --------------------------------------------------------------


@pytest.mark.parametrize(("q", "text"), [
    (SplitQuaternion(0), "0"),
    (SplitQuaternion(1), "1"),
    (SplitQuaternion(-1), "-1"),
    (UNIT_I, "i"),
    (-UNIT_I, "-i"),
    (SplitQuaternion(0, 2), "2i"),
    (SplitQuaternion(1, -2, 1, 0), "1-2i+j"),
    (SplitQuaternion(-1.5, 0, 0, 4), "-1.5+4k"),
    (SplitQuaternion(0, 0, 1e-05, 0), "1e-05j"),
    (SplitQuaternion(16, 0, 16, 0), "16+16j"),
])
def test_format_quaternion(q, text):
    assert format_quaternion(q) == text


def test_format_drops_negative_zero_terms():
    assert format_quaternion(SplitQuaternion(-0.0, 0.0, -0.0, 0.0)) == "0"
