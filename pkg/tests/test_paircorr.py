"""Pair states and their first/second order correlation functions."""

import math

import numpy as np
import pytest

from qsubrad import (
    GaussianEnvelope,
    ModeWave,
    bell_pair,
    classical_mixture,
    g1_density,
    g2_bell,
    g2_classical,
    pair_correlation,
    product_pair,
    quadrature_density_ft,
    reconstructed_g2,
)

Q_T = 0.0141866907567348
G1_PEAK = 3.17468178191155e-6  # 2 (2 pi)^{-3/2} / (200*200*1), frozen

ENV = GaussianEnvelope((200.0, 200.0, 1.0))
DK = np.array([Q_T, 0.0, 0.0])
MODE_UP = ModeWave(ENV, tuple(DK / 2), "up")
MODE_DOWN = ModeWave(ENV, tuple(-DK / 2), "down")


def test_g2_classical_constant():
    assert g2_classical() == 0.5


def test_g2_bell_reference_points():
    # cos(zeta) = 0 recovers the classical value for any separation
    assert g2_bell(math.pi / 2, DK, (123.0, -4.0, 5.0)) == pytest.approx(0.5, abs=1e-15)
    # perfect anticorrelation at zero separation and zeta = 0
    assert g2_bell(0.0, DK, (0.0, 0.0, 0.0)) == 0.0
    # cosine extremes
    sep_pi = np.array([math.pi / Q_T, 0.0, 0.0])  # dk . sep = pi
    assert g2_bell(math.pi, DK, sep_pi) == pytest.approx(0.0, abs=1e-12)
    assert g2_bell(math.pi, DK, (0.0, 0.0, 0.0)) == 1.0


def test_g2_bell_range_and_complement():
    rng = np.random.default_rng(11)
    for _ in range(300):
        zeta = rng.uniform(0.0, 2.0 * math.pi)
        dk = rng.normal(size=3) * 0.01
        sep = rng.normal(size=3) * 100.0
        val = g2_bell(zeta, dk, sep)
        assert 0.0 <= val <= 1.0
        assert val + g2_bell(zeta + math.pi, dk, sep) == pytest.approx(1.0, abs=1e-12)
        # even in separation and under dk -> -dk
        assert g2_bell(zeta, dk, -sep) == pytest.approx(val, abs=1e-12)
        assert g2_bell(zeta, -dk, sep) == pytest.approx(val, abs=1e-12)


def test_zeta_average_recovers_classical():
    sep = np.array([50.0, 0.0, 0.0])
    avg = 0.5 * (g2_bell(0.0, DK, sep) + g2_bell(math.pi, DK, sep))
    assert avg == pytest.approx(g2_classical(), abs=1e-15)


def test_pair_correlation_dispatch():
    sep = np.array([10.0, 0.0, 0.0])
    classical = classical_mixture(MODE_UP, MODE_DOWN)
    bell = bell_pair(MODE_UP, MODE_DOWN, math.pi / 2)
    assert pair_correlation(classical, sep) == 0.5
    assert pair_correlation(bell, sep) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        pair_correlation(product_pair(MODE_UP, MODE_DOWN), sep)


def test_g1_density_peak():
    state = bell_pair(MODE_UP, MODE_DOWN, 0.0)
    assert g1_density(state, (0.0, 0.0, 0.0)) == pytest.approx(G1_PEAK, rel=1e-12)


def test_g1_density_integrates_to_two():
    # quadrature of the defining integral at q = 0 gives the unit norm
    state = bell_pair(MODE_UP, MODE_DOWN, 0.0)
    total = 2.0 * quadrature_density_ft(ENV, (0.0, 0.0, 0.0)).real
    assert total == pytest.approx(2.0, abs=1e-6)
    assert g1_density(state, (0.0, 0.0, 0.0)) == pytest.approx(
        total * state.mode_1.envelope.density((0.0, 0.0, 0.0)), rel=1e-6
    )


def test_g1_density_same_for_bell_and_classical():
    rng = np.random.default_rng(3)
    bell = bell_pair(MODE_UP, MODE_DOWN, 1.2345)
    classical = classical_mixture(MODE_UP, MODE_DOWN)
    for _ in range(50):
        x = rng.normal(size=3) * np.array(ENV.sigma)
        assert g1_density(bell, x) == g1_density(classical, x)


def test_g1_density_product_sum_form():
    env_b = GaussianEnvelope((100.0, 100.0, 2.0), center=(40.0, 0.0, 0.0))
    state = product_pair(MODE_UP, ModeWave(env_b, (0.0, 0.0, 0.0), "down"))
    x = np.array([10.0, 5.0, 0.3])
    expected = float(ENV.density(x)) + float(env_b.density(x))
    assert g1_density(state, x) == pytest.approx(expected, rel=1e-12)


def test_reconstructed_g2_symmetric():
    rng = np.random.default_rng(17)
    state = bell_pair(MODE_UP, MODE_DOWN, 0.7)
    for _ in range(50):
        x = rng.normal(size=3) * np.array(ENV.sigma)
        xp = rng.normal(size=3) * np.array(ENV.sigma)
        forward = reconstructed_g2(state, x, xp)
        backward = reconstructed_g2(state, xp, x)
        assert forward == pytest.approx(backward, rel=1e-12)


def test_pair_state_validation():
    with pytest.raises(ValueError):  # same spin
        bell_pair(MODE_UP, ModeWave(ENV, (0.0, 0.0, 0.0), "up"), 0.0)
    with pytest.raises(ValueError):  # same carrier
        bell_pair(MODE_UP, ModeWave(ENV, MODE_UP.carrier_k, "down"), 0.0)
    with pytest.raises(ValueError):  # sigma mismatch
        bell_pair(MODE_UP, ModeWave(GaussianEnvelope((1.0, 1.0, 1.0)), (0.0, 0.0, 0.0), "down"), 0.0)
    offset_env = GaussianEnvelope(ENV.sigma, center=(5.0, 0.0, 0.0))
    with pytest.raises(ValueError):  # classical mixture needs a shared center
        classical_mixture(MODE_UP, ModeWave(offset_env, (0.0, 0.0, 0.0), "down"))
    # Bell pairs accept an offset center (general entangled pair)
    bell_pair(MODE_UP, ModeWave(offset_env, (0.0, 0.0, 0.0), "down"), 0.3)


def test_zeta_wrapped():
    state = bell_pair(MODE_UP, MODE_DOWN, 2.0 * math.pi + 0.25)
    assert state.zeta == pytest.approx(0.25, abs=1e-12)
