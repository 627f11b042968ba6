"""Exact fermionic enumeration for N-particle emission."""

import math

import numpy as np
import pytest

from conftest import sample_bell
from qsubrad import (
    DuplicateCarrier,
    GaussianEnvelope,
    Medium,
    ModeWave,
    NotNormalized,
    TooManyParticles,
    bell_pair,
    build_state,
    coherent_sum,
    cone_point,
    density_ft,
    load_manybody_state,
    manybody_breakdown,
    manybody_rate,
    rate_on_cone,
)

MED = Medium(beta=0.7, n=2.0)
ENV = GaussianEnvelope((100.0, 100.0, 100.0))
INV_SQRT2 = 2.0**-0.5


def _modes(envelope, carriers):
    return [ModeWave(envelope, tuple(k), "up") for k in carriers]


def _spaced_carriers(n, spacing=1.0):
    return [(spacing * i, 0.0, 0.0) for i in range(n)]


def test_build_state_validation():
    modes = _modes(ENV, _spaced_carriers(2))
    with pytest.raises(NotNormalized):
        build_state(modes, [("ud", 1.0), ("du", 1.0)])
    renorm = build_state(modes, [("ud", 1.0), ("du", 1.0)], renormalize=True)
    assert sum(abs(c) ** 2 for _, c in renorm.terms) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(TooManyParticles):
        build_state(_modes(ENV, _spaced_carriers(9)), [("u" * 9, 1.0)])
    with pytest.raises(DuplicateCarrier):
        build_state(_modes(ENV, [(0.0, 0.0, 0.0), (0.0, 0.0, 0.0)]), [("ud", 1.0)])
    with pytest.raises(ValueError):
        build_state(modes, [])
    with pytest.raises(ValueError):
        build_state(modes, [("ud", INV_SQRT2), ("ud", INV_SQRT2)])
    with pytest.raises(ValueError):
        build_state(modes, [("u", 1.0)])
    with pytest.raises(ValueError):
        build_state(_modes(ENV, _spaced_carriers(2))
                    + [ModeWave(GaussianEnvelope((1.0, 1.0, 1.0)), (5.0, 0.0, 0.0), "up")],
                    [("udu", 1.0)])


def test_single_particle_is_unity():
    state = build_state(_modes(ENV, [(0.5, 0.0, 0.0)]), [("u", 1.0)])
    point = cone_point(MED, 2.0, 0.3)
    assert manybody_rate(state, MED, point) == pytest.approx(1.0, abs=1e-12)


def _pair_modes_for(bell):
    env = bell.mode_1.envelope
    return [
        ModeWave(env, bell.mode_1.carrier_k, "up"),
        ModeWave(env, bell.mode_2.carrier_k, "up"),
    ]


def test_bell_state_reduces_to_pair_pipeline():
    rng = np.random.default_rng(909)
    for _ in range(50):
        medium, omega, phi, bell, _ = sample_bell(rng)
        point = cone_point(medium, omega, phi)
        state = build_state(
            _pair_modes_for(bell),
            [("ud", INV_SQRT2), ("du", np.exp(1j * bell.zeta) * INV_SQRT2)],
        )
        expected = rate_on_cone(bell, medium, point).braces_quantum
        assert manybody_rate(state, medium, point) == pytest.approx(expected, abs=1e-9)


def test_same_spin_pair_shows_exchange_antibunching():
    # single-term |k1 up, k2 up>: Pauli exchange mimics the zeta = 0 pair
    dk = np.array([0.02, 0.0, 0.0])
    state = build_state(
        _modes(ENV, [tuple(dk / 2), tuple(-dk / 2)]), [("uu", 1.0)]
    )
    point = cone_point(MED, 2.0, 0.0)
    qvec = point.qvec
    expected = (
        2.0
        + 2.0 * abs(density_ft(ENV, qvec)) ** 2
        - abs(density_ft(ENV, qvec - dk)) ** 2
        - abs(density_ft(ENV, qvec + dk)) ** 2
    )
    assert manybody_rate(state, MED, point) == pytest.approx(expected, abs=1e-12)


def test_opposite_spin_product_pair_is_classical():
    dk = np.array([0.02, 0.0, 0.0])
    state = build_state(
        _modes(ENV, [tuple(dk / 2), tuple(-dk / 2)]), [("ud", 1.0)]
    )
    point = cone_point(MED, 2.0, 0.0)
    expected = 2.0 + 2.0 * abs(density_ft(ENV, point.qvec)) ** 2
    assert manybody_rate(state, MED, point) == pytest.approx(expected, abs=1e-12)


def test_three_particle_limits():
    state = build_state(_modes(ENV, _spaced_carriers(3)), [("uuu", 1.0)])
    # long wavelength: fully coherent N^2 scaling
    low = manybody_rate(state, MED, cone_point(MED, 1e-4, 0.0))
    assert low == pytest.approx(9.0, abs=1e-3)
    # short wavelength: incoherent N scaling
    high = manybody_rate(state, MED, cone_point(MED, 5.0, 0.0))
    assert high == pytest.approx(3.0, abs=1e-3)


def _random_state(rng, n):
    carriers = []
    while len(carriers) < n:
        k = tuple(rng.normal(size=3) * 0.5)
        if all(np.linalg.norm(np.subtract(k, c)) > 0.3 for c in carriers):
            carriers.append(k)
    count = rng.integers(1, 2**n + 1)
    assignments = rng.choice(2**n, size=count, replace=False)
    terms = []
    for idx in assignments:
        bits = format(idx, f"0{n}b").replace("0", "u").replace("1", "d")
        terms.append((bits, rng.normal() + 1j * rng.normal()))
    return build_state(_modes(ENV, carriers), terms, renormalize=True)


def test_rate_is_real():
    rng = np.random.default_rng(44)
    for _ in range(25):
        n = int(rng.integers(2, 5))
        state = _random_state(rng, n)
        point = cone_point(MED, rng.uniform(0.5, 4.0), rng.uniform(0.0, 2 * math.pi))
        value = coherent_sum(state, point.qvec)
        assert abs(value.imag) <= 1e-12 * max(1.0, abs(value.real))


def test_global_phase_invariance():
    rng = np.random.default_rng(46)
    for _ in range(10):
        state = _random_state(rng, 3)
        phase = np.exp(1j * rng.uniform(0.0, 2 * math.pi))
        rotated = build_state(
            _modes(state.envelope, state.carriers),
            [(a, phase * c) for a, c in state.terms],
        )
        point = cone_point(MED, 2.0, rng.uniform(0.0, 2 * math.pi))
        assert manybody_rate(rotated, MED, point) == pytest.approx(
            manybody_rate(state, MED, point), abs=1e-12
        )


def test_mode_relabeling_invariance():
    # swapping two modes (carriers and assignment columns) multiplies every
    # basis ket by the same fermionic sign, so the rate cannot change
    rng = np.random.default_rng(48)
    for _ in range(10):
        state = _random_state(rng, 3)
        carriers = [state.carriers[1], state.carriers[0], state.carriers[2]]
        terms = [(a[1] + a[0] + a[2], -c) for a, c in state.terms]
        swapped = build_state(_modes(state.envelope, carriers), terms)
        point = cone_point(MED, 2.0, rng.uniform(0.0, 2 * math.pi))
        assert manybody_rate(swapped, MED, point) == pytest.approx(
            manybody_rate(state, MED, point), abs=1e-12
        )


def test_breakdown_view():
    state = build_state(_modes(ENV, _spaced_carriers(3)), [("uuu", 1.0)])
    point = cone_point(MED, 2.0, 0.0)
    breakdown = manybody_breakdown(state, MED, point)
    assert breakdown.term_incoherent == 3.0
    assert breakdown.braces_quantum == pytest.approx(
        manybody_rate(state, MED, point), abs=1e-14
    )
    assert breakdown.gamma0 > 0.0


def test_state_file_round_trip(tmp_path):
    path = tmp_path / "bell.state"
    path.write_text(
        "# two-mode Bell state, zeta = pi\n"
        "envelope sigma 200 200 1\n"
        "envelope center 0 0 0\n"
        "mode 0.0070933453783674 0 0\n"
        "mode -0.0070933453783674 0 0\n"
        f"term ud {INV_SQRT2:.17g} 0\n"
        f"term du {-INV_SQRT2:.17g} 0\n"
    )
    state = load_manybody_state(path)
    assert state.n_particles == 2
    point = cone_point(MED, 2.0, 0.0)
    env = GaussianEnvelope((200.0, 200.0, 1.0))
    dk = np.array([2 * 0.0070933453783674, 0.0, 0.0])
    bell = bell_pair(
        ModeWave(env, tuple(dk / 2), "up"),
        ModeWave(env, tuple(-dk / 2), "down"),
        math.pi,
    )
    expected = rate_on_cone(bell, MED, point).braces_quantum
    assert manybody_rate(state, MED, point) == pytest.approx(expected, abs=1e-9)


def test_state_file_errors(tmp_path):
    bad = tmp_path / "bad.state"
    bad.write_text("mode 0 0 0\nterm u 1 0\n")
    with pytest.raises(ValueError, match="envelope sigma"):
        load_manybody_state(bad)
    bad.write_text("envelope sigma 1 1 1\nwibble 3\n")
    with pytest.raises(ValueError, match="wibble"):
        load_manybody_state(bad)
