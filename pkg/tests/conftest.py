"""Shared helpers: randomized but validity-respecting state samplers.

The momentum-separation assumption underlies the [0, 4] bound on the
quantum brace factor, so samplers draw carrier differences with a wide
margin below the diagnostic warning threshold (ratio <= 1/20 instead of
1/3).  Marginally separated carriers can push the factor slightly above 4
and are outside the model's validity.
"""

import math

import numpy as np

from qsubrad import GaussianEnvelope, Medium, ModeWave, bell_pair, classical_mixture


def sample_geometry(rng):
    """Random medium and photon energy with an open Cherenkov cone."""
    n = rng.uniform(1.3, 2.8)
    beta = rng.uniform(1.05 / n, 0.995)
    omega = rng.uniform(0.2, 5.0)
    return Medium(beta=beta, n=n), omega


def sample_envelope(rng):
    sigma = np.exp(rng.uniform(math.log(2.0), math.log(400.0), size=3))
    center = rng.uniform(-50.0, 50.0, size=3)
    return GaussianEnvelope(tuple(sigma), tuple(center))


def sample_separated_dk(rng, envelope, margin=20.0):
    """Carrier difference with momentum-separation ratio <= 1/margin."""
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    sigma = np.array(envelope.sigma)
    spread = 0.5 * math.sqrt(float(np.sum((u / sigma) ** 2)))
    return u * spread * margin * rng.uniform(1.0, 5.0)


def sample_bell(rng, zeta=None):
    """Validity-respecting random Bell pair plus its classical twin."""
    medium, omega = sample_geometry(rng)
    envelope = sample_envelope(rng)
    dk = sample_separated_dk(rng, envelope)
    mode_1 = ModeWave(envelope, tuple(dk / 2), "up")
    mode_2 = ModeWave(envelope, tuple(-dk / 2), "down")
    if zeta is None:
        zeta = rng.uniform(0.0, 2.0 * math.pi)
    bell = bell_pair(mode_1, mode_2, zeta)
    classical = classical_mixture(mode_1, mode_2)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    return medium, omega, phi, bell, classical
