import cmath
import math

import pytest
from hypothesis import given, strategies as st

from polyrot import (
    Polynomial,
    RootForm,
    UnitCirclePoint,
    ZeroProximity,
    evaluate,
    from_roots,
    reverse_conjugate,
    rotation_speed,
    to_root_form,
)


def test_evaluate_direct_substitution():
    assert evaluate(Polynomial([-0.25, 0, 1]), 1j) == pytest.approx(-1.25)
    assert evaluate(Polynomial([-0.5, 1]), 1.0) == pytest.approx(0.5)


def test_evaluate_vanishes_at_expanded_root():
    p = from_roots(RootForm(1.0, (0.3, 0.7j)))
    assert abs(evaluate(p, 0.3)) <= 1e-14


def test_from_roots_single():
    p = from_roots(RootForm(1.0, (0.5,)))
    assert p.coeffs == (-0.5 + 0j, 1 + 0j)


def test_from_roots_origin_and_minus_one():
    p = from_roots(RootForm(1.0, (0, -1)))
    assert p.coeffs == (0j, 1 + 0j, 1 + 0j)


def test_from_roots_scales_leading():
    p = from_roots(RootForm(2.0, (1j, -1j)))
    assert p.coeffs == (2 + 0j, 0j, 2 + 0j)


def test_from_roots_rejects_zero_leading():
    with pytest.raises(ValueError):
        RootForm(0.0, (0.5,))


def test_reverse_conjugate_real_coeffs():
    q = reverse_conjugate(Polynomial([-0.5, 1]))
    assert q.coeffs == (1 + 0j, -0.5 + 0j)


def test_reverse_conjugate_complex_coeffs():
    q = reverse_conjugate(Polynomial([1j, 0, 2]))
    assert q.coeffs == (2 + 0j, 0j, -1j)


def test_reverse_conjugate_is_involution():
    p = Polynomial([0.2 - 1j, 1.5, -0.3j, 2 + 2j])
    assert reverse_conjugate(reverse_conjugate(p)).coeffs == p.coeffs


def test_reverse_conjugate_preserves_boundary_modulus(rng):
    for _ in range(20):
        coeffs = rng.normal(size=5) + 1j * rng.normal(size=5)
        coeffs[0] += 3.0  # keep |c0| away from 0 so the reversal keeps the degree
        p = Polynomial(coeffs)
        q = reverse_conjugate(p)
        for theta in rng.uniform(0, 2 * math.pi, size=5):
            z = cmath.exp(1j * theta)
            assert abs(abs(p(z)) - abs(q(z))) <= 1e-12 * p.coeff_scale


def test_reverse_conjugate_rejects_degree_drop():
    # P(0) = 0 would reverse into a list with zero leading coefficient
    with pytest.raises(ValueError):
        reverse_conjugate(Polynomial([0, 0, 1]))


def test_rotation_speed_monomial_is_degree():
    for n in (1, 3, 7):
        p = Polynomial([0] * n + [1])
        for theta in (0.0, 0.4, 2.0, 5.5):
            assert rotation_speed(p, UnitCirclePoint(theta)) == pytest.approx(n, abs=1e-12)


def test_rotation_speed_hand_values():
    assert rotation_speed(Polynomial([-0.5, 1]), UnitCirclePoint(0.0)) == pytest.approx(2.0)
    assert rotation_speed(Polynomial([-0.25, 0, 1]), UnitCirclePoint(math.pi / 2)) == pytest.approx(1.6)


def test_rotation_speed_refuses_zero_proximity():
    p = Polynomial([-1, 1])  # zero at z = 1
    with pytest.raises(ZeroProximity):
        rotation_speed(p, UnitCirclePoint(0.0))


def test_unit_circle_point_modulus():
    for theta in (0.0, 1.0, 3.9, -2.5):
        assert abs(UnitCirclePoint(theta).z) == pytest.approx(1.0, abs=5e-16)


def test_polynomial_invariants():
    with pytest.raises(ValueError):
        Polynomial([1.0])  # degree 0
    with pytest.raises(ValueError):
        Polynomial([1.0, 0.0])  # vanishing leading coefficient
    with pytest.raises(ValueError):
        Polynomial([])


def test_rotated_polynomial_matches_substitution():
    p = Polynomial([1, -2j, 0.5])
    w = cmath.exp(0.7j)
    q = p.rotated(w)
    for z in (0.3 + 0.1j, 1j, -0.8):
        assert q(z) == pytest.approx(p(w * z), rel=1e-13)


def test_to_root_form_simple_cases():
    rf = to_root_form(Polynomial([-0.5, 1]))
    assert rf.leading == 1
    assert rf.roots[0] == pytest.approx(0.5)

    rf = to_root_form(Polynomial([0, 0, 1]))
    assert sorted(abs(r) for r in rf.roots) == [0.0, 0.0]


def test_to_root_form_wilkinson_style():
    planted = [k / 20 for k in range(1, 11)]
    p = from_roots(RootForm(1.0, planted))
    solved = sorted(r.real for r in to_root_form(p).roots)
    assert max(abs(a - b) for a, b in zip(solved, planted)) <= 1e-8


def test_root_form_round_trip_well_separated(rng):
    for _ in range(25):
        n = int(rng.integers(1, 13))
        roots = []
        while len(roots) < n:
            cand = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9))
            if all(abs(cand - r) > 0.15 for r in roots):
                roots.append(cand)
        p = from_roots(RootForm(1.0, roots))
        back = from_roots(to_root_form(p))
        for a, b in zip(back.coeffs, p.coeffs):
            assert abs(a - b) <= 1e-8 * max(1.0, p.coeff_scale)


@given(
    st.lists(
        st.tuples(st.floats(0, 0.96), st.floats(0, 2 * math.pi)),
        min_size=1,
        max_size=8,
    ),
    st.floats(0, 2 * math.pi),
)
def test_rotation_speed_at_least_half_degree_for_disk_zeros(root_polar, theta):
    roots = [math.sqrt(r2) * cmath.exp(1j * phi) for r2, phi in root_polar]
    p = from_roots(RootForm(1.0, roots))
    pt = UnitCirclePoint(theta)
    if abs(p(pt.z)) <= 1e-3 * p.coeff_scale:
        return
    assert rotation_speed(p, pt) >= 0.5 * p.degree - 1e-9


def test_serialization_round_trip():
    p = Polynomial([1 - 1j, 0, 2.5j])
    assert Polynomial.from_json(p.to_json()).coeffs == p.coeffs
    rf = RootForm(2j, (0.5, -0.25j))
    back = RootForm.from_json(rf.to_json())
    assert back.leading == rf.leading and back.roots == rf.roots
