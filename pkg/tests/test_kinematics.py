"""Cone geometry, normalization rate, and validity diagnostics."""

import math

import numpy as np
import pytest

from qsubrad import (
    GaussianEnvelope,
    Medium,
    ModeWave,
    NoCherenkovEmission,
    bell_pair,
    cherenkov_angle,
    single_particle_rate,
    validate_assumptions,
)

# Frozen reference values, independently derived from arccos(1/(n beta)),
# q = n omega / (hbar c), and relativistic momentum arithmetic.
THETA_C = 0.775193373310361
COS_THETA = 1.0 / 1.4
Q_MAG = 0.0202709228707176
Q_T = 0.0141866907567348
Q_Z = 0.0144792306219411
GAMMA0 = 3.98197622704607e-4
GAMMA0_BETA1 = 8.71057299666328e-4
RECOIL_RATIO = 7.98595818030865e-6

MED = Medium(beta=0.7, n=2.0)


def test_cone_geometry_reference_point():
    g = cherenkov_angle(MED, 2.0)
    assert g.theta_c == pytest.approx(THETA_C, rel=1e-12)
    assert g.cos_theta == pytest.approx(COS_THETA, rel=1e-12)
    assert g.q == pytest.approx(Q_MAG, rel=1e-12)
    assert g.q_t == pytest.approx(Q_T, rel=1e-12)
    assert g.q_z == pytest.approx(Q_Z, rel=1e-12)
    # longitudinal component is omega / (hbar c beta) independently of n
    assert g.q_z == pytest.approx(2.0 / (197.3269804 * 0.7), rel=1e-12)
    assert not g.degenerate


def test_cone_components_consistent():
    g = cherenkov_angle(MED, 2.0)
    assert g.q_t**2 + g.q_z**2 == pytest.approx(g.q**2, rel=1e-12)


def test_cos_theta_times_n_beta_is_one():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = rng.uniform(1.1, 3.0)
        beta = rng.uniform(1.0 / n + 1e-6, 0.999)
        omega = rng.uniform(0.1, 6.0)
        g = cherenkov_angle(Medium(beta=beta, n=n), omega)
        assert g.cos_theta * n * beta == pytest.approx(1.0, rel=1e-12)


def test_beta_to_one_limit():
    g = cherenkov_angle(Medium(beta=1.0 - 1e-12, n=2.0), 2.0)
    assert g.cos_theta == pytest.approx(0.5, rel=1e-9)
    assert g.theta_c == pytest.approx(math.pi / 3.0, rel=1e-9)


def test_forbidden_emission_raises():
    with pytest.raises(NoCherenkovEmission):
        cherenkov_angle(Medium(beta=0.5, n=1.5), 2.0)


def test_threshold_is_degenerate_not_error():
    g = cherenkov_angle(Medium(beta=0.5, n=2.0), 2.0)
    assert g.degenerate
    assert g.sin_theta == 0.0
    assert single_particle_rate(Medium(beta=0.5, n=2.0), 2.0) == 0.0


def test_single_particle_rate_reference():
    assert single_particle_rate(MED, 2.0) == pytest.approx(GAMMA0, rel=1e-12)
    fast = Medium(beta=1.0 - 1e-12, n=2.0)
    assert single_particle_rate(fast, 2.0) == pytest.approx(GAMMA0_BETA1, rel=1e-9)


def test_rate_monotone_in_beta():
    rng = np.random.default_rng(13)
    for _ in range(100):
        n = rng.uniform(1.2, 3.0)
        b1 = rng.uniform(1.0 / n + 1e-3, 0.99)
        b2 = rng.uniform(b1, 0.999)
        r1 = single_particle_rate(Medium(beta=b1, n=n), 1.0)
        r2 = single_particle_rate(Medium(beta=b2, n=n), 1.0)
        assert r2 >= r1


def test_invalid_medium_rejected():
    with pytest.raises(ValueError):
        Medium(beta=1.2, n=2.0)
    with pytest.raises(ValueError):
        Medium(beta=0.7)
    with pytest.raises(ValueError):
        Medium(beta=0.7, n=2.0, table=((1.0, 2.0), (2.0, 2.0)))
    with pytest.raises(ValueError):
        Medium(beta=0.7, table=((2.0, 2.0), (1.0, 2.0)))
    with pytest.raises(ValueError):
        Medium(beta=0.7, table=((1.0, 2.0), (2.0, -1.0)))


def test_table_interpolation_exact_at_nodes():
    table = ((1.0, 1.8), (2.0, 2.0), (3.0, 2.3))
    med = Medium(beta=0.7, table=table)
    for omega, n in table:
        assert med.index_at(omega) == n
    assert med.index_at(1.5) == pytest.approx(1.9, rel=1e-12)
    # clamped outside the tabulated range
    assert med.index_at(0.5) == 1.8
    assert med.index_at(9.0) == 2.3


def _bell_state(sigma, dk):
    env = GaussianEnvelope(sigma)
    dk = np.asarray(dk, float)
    m1 = ModeWave(env, tuple(dk / 2), "up")
    m2 = ModeWave(env, tuple(-dk / 2), "down")
    return bell_pair(m1, m2, math.pi)


def test_assumptions_reference_values():
    state = _bell_state((200.0, 200.0, 1.0), (Q_T, 0.0, 0.0))
    report = validate_assumptions(state, MED, 2.0)
    assert report.recoil_ratio == pytest.approx(RECOIL_RATIO, rel=1e-9)
    assert report.recoil_ok
    assert report.walkoff_modeled is False


def test_assumptions_separation_ratio():
    state = _bell_state((10.0, 10.0, 500.0), (0.0, 0.0, Q_Z))
    report = validate_assumptions(state, MED, 2.0)
    assert report.separation_ratio == pytest.approx(1.0 / (2 * 500 * Q_Z), rel=1e-9)
    assert report.separation_ok


def test_assumptions_zero_separation_warns():
    env1 = GaussianEnvelope((50.0, 50.0, 50.0))
    env2 = GaussianEnvelope((50.0, 50.0, 50.0), center=(10.0, 0.0, 0.0))
    from qsubrad import product_pair

    state = product_pair(ModeWave(env1, (0.0, 0.0, 0.0), "up"),
                         ModeWave(env2, (0.0, 0.0, 0.0), "down"))
    report = validate_assumptions(state, MED, 2.0)
    assert math.isinf(report.separation_ratio)
    assert not report.separation_ok
