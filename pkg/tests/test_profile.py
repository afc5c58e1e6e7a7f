import dataclasses

import numpy as np
import pytest

from pullin import (
    DomainError,
    alpha_limit,
    first_integral_energy,
    reconstruct_profile,
    residual_check,
    slope_from_height,
    solve_alphas,
    time_map,
    verify_necessary_conditions,
    x_of_u,
)

X_015 = 0.5411219725243235  # frozen: x_of_u(0.15, 0.3, 0.5)


def test_x_of_u_reference():
    assert x_of_u(0.15, 0.3, 0.5) == pytest.approx(X_015, abs=1e-12)


def test_x_of_u_endpoints():
    assert x_of_u(0.3, 0.3, 0.5) == 0.0
    # at height zero the distance is the half-width of the supporting interval
    assert x_of_u(0.0, 0.3, 0.5) == pytest.approx(time_map(0.3, 0.5), abs=1e-10)


def test_x_of_u_decreasing_in_height():
    us = np.linspace(0.0, 0.3, 12)
    xs = [x_of_u(float(u), 0.3, 0.5) for u in us]
    assert all(a > b for a, b in zip(xs, xs[1:]))


def test_x_of_u_domain():
    with pytest.raises(DomainError):
        x_of_u(-0.01, 0.3, 0.5)
    with pytest.raises(DomainError):
        x_of_u(0.31, 0.3, 0.5)
    with pytest.raises(DomainError):
        x_of_u(0.1, 0.9, 0.5)  # alpha beyond the admissible limit


def test_energy_value():
    assert first_integral_energy(0.3, 0.5) == pytest.approx(1.0 - 0.5 / 0.7, abs=1e-15)


def test_slope_zero_at_crest():
    assert slope_from_height(0.3, 0.3, 0.5) == pytest.approx(0.0, abs=1e-12)


def test_slope_positive_and_monotone_below_crest():
    slopes = [slope_from_height(u, 0.3, 0.5) for u in (0.25, 0.15, 0.05, 0.0)]
    assert all(s > 0.0 for s in slopes)
    # steeper toward the boundary
    assert all(a < b for a, b in zip(slopes, slopes[1:]))


def test_slope_vertical_for_extreme_profile():
    a_max = alpha_limit(1.0)
    assert slope_from_height(0.0, a_max, 1.0) == float("inf")


def test_slope_consistent_with_x_of_u():
    # dU/dx = -|u'|: central difference of the inverse function
    alpha, lam, u = 0.3, 0.5, 0.18
    h = 1e-6
    dxdu = (x_of_u(u + h, alpha, lam) - x_of_u(u - h, alpha, lam)) / (2.0 * h)
    assert slope_from_height(u, alpha, lam) == pytest.approx(-1.0 / dxdu, rel=1e-6)


def test_reconstruct_shape_and_symmetry():
    p = reconstruct_profile(0.3, 0.5, 101)
    assert p.xs.size == 201 and p.us.size == 201
    assert p.xs[100] == 0.0
    assert p.us[100] == 0.3
    assert p.us[0] == 0.0 and p.us[-1] == 0.0
    np.testing.assert_allclose(p.xs + p.xs[::-1], 0.0, atol=1e-15)
    np.testing.assert_allclose(p.us, p.us[::-1], atol=1e-15)
    assert p.L == pytest.approx(time_map(0.3, 0.5), abs=1e-10)
    assert p.energy == pytest.approx(first_integral_energy(0.3, 0.5), abs=1e-15)


def test_reconstruct_matches_x_of_u():
    p = reconstruct_profile(0.3, 0.5, 51)
    mid = p.xs.size // 2
    for i in range(mid, p.xs.size, 7):
        assert p.xs[i] == pytest.approx(x_of_u(float(p.us[i]), 0.3, 0.5), abs=1e-11)


def test_reconstruct_immutable():
    p = reconstruct_profile(0.3, 0.5, 21)
    assert not p.xs.flags.writeable
    assert not p.us.flags.writeable
    with pytest.raises(ValueError):
        p.xs[0] = 0.0


def test_residual_second_order_decay():
    for alpha, lam in ((0.2, 1.0), (0.45, 0.8)):
        r1 = reconstruct_profile(alpha, lam, 201).residual_max
        r2 = reconstruct_profile(alpha, lam, 401).residual_max
        assert r1 <= 1e-4
        assert r2 <= 0.35 * r1


def test_residual_check_matches_field():
    p = reconstruct_profile(0.25, 1.2, 101)
    assert residual_check(p) == p.residual_max


def test_residual_detects_perturbation():
    p = reconstruct_profile(0.3, 0.5, 201)
    us = p.us.copy()
    us[50] += 1e-3
    broken = dataclasses.replace(p, us=us)
    assert residual_check(broken) > 1.0
    assert residual_check(broken) > 100.0 * p.residual_max


def test_reconstruct_at_branch_roots():
    for lam in (0.9, 2.0):
        for alpha in solve_alphas(lam, 0.3):
            p = reconstruct_profile(alpha, lam, 401)
            assert p.L == pytest.approx(0.3, abs=1e-8)
            assert p.residual_max <= 1e-4


def test_verify_all_conditions_hold():
    p = reconstruct_profile(0.3, 0.5, 201)
    report = verify_necessary_conditions(p)
    assert report == {
        "positivity": True,
        "concavity": True,
        "sup_bound": True,
        "evenness": True,
        "energy": True,
    }


def test_verify_flags_shifted_samples():
    p = reconstruct_profile(0.3, 0.5, 101)
    shifted = dataclasses.replace(p, xs=p.xs + 1e-6)
    assert not verify_necessary_conditions(shifted)["evenness"]


def test_verify_flags_negative_dip():
    p = reconstruct_profile(0.3, 0.5, 101)
    us = p.us.copy()
    us[3] = -1e-9
    assert not verify_necessary_conditions(dataclasses.replace(p, us=us))["positivity"]


def test_verify_flags_sup_violation():
    p = reconstruct_profile(0.3, 0.5, 101)
    us = p.us.copy()
    us[us.size // 2] = alpha_limit(0.5) + 1e-6
    report = verify_necessary_conditions(dataclasses.replace(p, us=us))
    assert not report["sup_bound"]


def test_verify_flags_energy_drift():
    p = reconstruct_profile(0.3, 0.5, 101)
    assert not verify_necessary_conditions(dataclasses.replace(p, energy=p.energy + 1e-4))["energy"]


def test_reconstruct_validation():
    with pytest.raises(DomainError):
        reconstruct_profile(5e-9, 0.5, 51)  # below the sampling floor
    with pytest.raises(DomainError):
        reconstruct_profile(0.3, 0.5, 2)
    with pytest.raises(DomainError):
        reconstruct_profile(0.8, 0.5, 51)  # beyond the admissible limit


def test_residual_check_needs_interior():
    p = reconstruct_profile(0.3, 0.5, 3)
    with pytest.raises(DomainError):
        residual_check(p)
