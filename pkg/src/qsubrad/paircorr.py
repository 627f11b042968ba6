"""Two-particle emitter states and their correlation functions.

The three supported preparations of a pair of opposite-spin modes are a
50/50 classical mixture of the two spin pairings, a plain product state,
and the maximally-entangled superposition with relative phase zeta.  The
normalized pair correlation of the entangled state,

    g2(x - x') = (1 - cos(zeta) * cos(dk . (x - x'))) / 2,

replaces the constant 1/2 of the classical mixture; dk = k1 - k2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .wavepackets import GaussianEnvelope, ModeWave

TWO_PI = 2.0 * math.pi


class CorrelationKind(Enum):
    CLASSICAL_MIXTURE = "classical"
    PRODUCT = "product"
    BELL = "bell"


@dataclass(frozen=True)
class PairState:
    """Pair of opposite-spin modes plus their correlation kind.

    Classical-mixture states require a strictly shared envelope and
    distinct carriers.  Bell states require equal sigmas and distinct
    carriers; the centers may be offset, in which case rates route through
    the general overlap expression instead of the shared-envelope shortcut.
    Product states accept arbitrary distinct envelopes.
    """

    mode_1: ModeWave
    mode_2: ModeWave
    kind: CorrelationKind
    zeta: float = 0.0

    def __post_init__(self):
        m1, m2 = self.mode_1, self.mode_2
        if m1.spin == m2.spin:
            raise ValueError("pair modes must carry opposite spin labels")
        if self.kind in (CorrelationKind.CLASSICAL_MIXTURE, CorrelationKind.BELL):
            if m1.envelope.sigma != m2.envelope.sigma:
                raise ValueError(f"{self.kind.value} pair requires equal sigmas")
            if m1.carrier_k == m2.carrier_k:
                raise ValueError(f"{self.kind.value} pair requires distinct carriers")
        if self.kind is CorrelationKind.CLASSICAL_MIXTURE:
            if m1.envelope.center != m2.envelope.center:
                raise ValueError("classical mixture requires a shared envelope center")
        object.__setattr__(self, "zeta", float(self.zeta) % TWO_PI)

    @property
    def shared_envelope(self) -> bool:
        return self.mode_1.envelope == self.mode_2.envelope

    @property
    def delta_k(self) -> np.ndarray:
        """Carrier difference k1 - k2 in nm^-1."""
        return np.array(self.mode_1.carrier_k) - np.array(self.mode_2.carrier_k)


def classical_mixture(mode_1: ModeWave, mode_2: ModeWave) -> PairState:
    return PairState(mode_1, mode_2, CorrelationKind.CLASSICAL_MIXTURE)


def product_pair(mode_1: ModeWave, mode_2: ModeWave) -> PairState:
    return PairState(mode_1, mode_2, CorrelationKind.PRODUCT)


def bell_pair(mode_1: ModeWave, mode_2: ModeWave, zeta: float) -> PairState:
    return PairState(mode_1, mode_2, CorrelationKind.BELL, zeta)


def g2_classical() -> float:
    """Normalized pair correlation of the 50/50 classical mixture."""
    return 0.5


def g2_bell(zeta: float, dk, separation) -> float:
    """Normalized pair correlation of the Bell pair at a given separation.

    Always in [0, 1]; reduces to the classical 1/2 at zeta = pi/2.
    """
    dk = np.asarray(dk, dtype=float)
    separation = np.asarray(separation, dtype=float)
    return 0.5 * (1.0 - math.cos(zeta) * math.cos(float(dk @ separation)))


def pair_correlation(state: PairState, separation) -> float:
    """g2 of a shared-envelope pair state (classical mixture or Bell)."""
    if state.kind is CorrelationKind.CLASSICAL_MIXTURE:
        return g2_classical()
    if state.kind is CorrelationKind.BELL:
        return g2_bell(state.zeta, state.delta_k, separation)
    raise ValueError("pair correlation is defined for shared-envelope kinds only")


def g1_density(state: PairState, x) -> float:
    """Particle density G1(x, x) of the pair, nm^-3.

    Every supported pair occupies each mode once, so the density is
    |phi_1(x)|^2 + |phi_2(x)|^2; for a shared envelope this is the usual
    2 |phi(x)|^2.  Spin cross terms vanish by orthogonality.
    """
    x = np.asarray(x, dtype=float)
    if state.shared_envelope:
        return 2.0 * float(state.mode_1.envelope.density(x))
    return float(state.mode_1.envelope.density(x)) + float(
        state.mode_2.envelope.density(x)
    )


def reconstructed_g2(state: PairState, x, xp) -> float:
    """Two-point second-order correlation G2(x, x') rebuilt from the
    decomposition G1(x,x) G1(x',x') g2(x - x')."""
    x = np.asarray(x, dtype=float)
    xp = np.asarray(xp, dtype=float)
    return g1_density(state, x) * g1_density(state, xp) * pair_correlation(
        state, x - xp
    )
