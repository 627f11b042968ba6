"""On-cone Cherenkov emission rates for pair states.

All rates are reported as the dimensionless "brace factor" Gamma / Gamma_0
evaluated on the Cherenkov cone (the polar delta of the emission kernel is
kept symbolic, so a single particle scores exactly 1).  With
qvec = q * nhat the pair factors are

    classical mixture : 2 + 2 |F(qvec)|^2
    Bell(zeta)        : 2 + 2 |F(qvec)|^2
                          - cos(zeta) [ |F(qvec - dk)|^2 + |F(qvec + dk)|^2 ]
    product           : 2 + 2 Re{ F1(qvec) F2*(qvec) }

where F is the envelope density transform and dk = k1 - k2.  The general
pair expression evaluates the entangled term through the mode overlap
transform M instead,  - cos(zeta) [ |M(qvec)|^2 + |M(-qvec)|^2 ],  which
coincides with the shifted-F form whenever the two modes share an
envelope.  Both routes are kept side by side as a consistency check.

The upper bound braces <= 4 relies on the momentum-separation assumption
(see kinematics.validate_assumptions); marginally separated carriers can
exceed it slightly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import NoCherenkovEmission
from .kinematics import HBAR_C_EV_NM, ConeGeometry, Medium, cherenkov_angle, single_particle_rate
from .paircorr import CorrelationKind, PairState
from .wavepackets import density_ft, overlap_ft


@dataclass(frozen=True)
class EmissionPoint:
    """One direction on the Cherenkov cone at one photon energy."""

    phi: float
    omega_ev: float
    direction: tuple[float, float, float]
    cone: ConeGeometry

    @property
    def qvec(self) -> np.ndarray:
        """Photon wavevector q * nhat in nm^-1."""
        return self.cone.q * np.array(self.direction)


def cone_point(medium: Medium, omega_ev: float, phi: float) -> EmissionPoint:
    """Emission point at azimuth phi on the cone for the given energy."""
    cone = cherenkov_angle(medium, omega_ev)
    direction = (
        cone.sin_theta * math.cos(phi),
        cone.sin_theta * math.sin(phi),
        cone.cos_theta,
    )
    return EmissionPoint(phi=phi, omega_ev=omega_ev, direction=direction, cone=cone)


@dataclass(frozen=True)
class RateBreakdown:
    """Brace-factor decomposition at one emission point.

    braces_classical = term_incoherent + term_bunching;
    braces_quantum   = braces_classical - cos_zeta * term_entangled.
    term_entangled stores the unweighted sum |M(q)|^2 + |M(-q)|^2 and is
    zero for non-Bell states (cos_zeta is zero there too).  Forbidden
    points (no Cherenkov cone) carry zeroed terms.
    """

    term_incoherent: float
    term_bunching: float
    term_entangled: float
    cos_zeta: float
    gamma0: float
    forbidden: bool = False

    @property
    def braces_classical(self) -> float:
        return self.term_incoherent + self.term_bunching

    @property
    def braces_quantum(self) -> float:
        return self.braces_classical - self.cos_zeta * self.term_entangled


FORBIDDEN_BREAKDOWN = RateBreakdown(0.0, 0.0, 0.0, 0.0, 0.0, forbidden=True)


def _classical_interference(state: PairState, qvec: np.ndarray) -> float:
    """Bunching term 2 Re{F1 F2*}; collapses to 2|F|^2 for a shared envelope."""
    f1 = density_ft(state.mode_1.envelope, qvec)
    f2 = density_ft(state.mode_2.envelope, qvec)
    return 2.0 * float(np.real(f1 * np.conj(f2)))


def rate_on_cone(state: PairState, medium: Medium, point: EmissionPoint) -> RateBreakdown:
    """Brace-factor breakdown for a pair state at one cone point.

    Bell states with a strictly shared envelope use the shifted density
    transform; Bell states with offset centers (equal sigmas) fall back to
    the overlap route.
    """
    qvec = point.qvec
    gamma0 = single_particle_rate(medium, point.omega_ev)
    cos_zeta = 0.0
    entangled = 0.0
    if state.kind is CorrelationKind.BELL:
        cos_zeta = math.cos(state.zeta)
        if state.shared_envelope:
            dk = state.delta_k
            f_minus = density_ft(state.mode_1.envelope, qvec - dk)
            f_plus = density_ft(state.mode_1.envelope, qvec + dk)
            entangled = float(abs(f_minus) ** 2 + abs(f_plus) ** 2)
        else:
            m_plus = overlap_ft(state.mode_1, state.mode_2, qvec)
            m_minus = overlap_ft(state.mode_1, state.mode_2, -qvec)
            entangled = float(abs(m_plus) ** 2 + abs(m_minus) ** 2)
    return RateBreakdown(
        term_incoherent=2.0,
        term_bunching=_classical_interference(state, qvec),
        term_entangled=entangled,
        cos_zeta=cos_zeta,
        gamma0=gamma0,
    )


def rate_on_cone_general(state: PairState, medium: Medium, point: EmissionPoint) -> RateBreakdown:
    """Brace factor via the general pair expression (overlap route).

    Mathematically equal to rate_on_cone for shared-envelope modes; kept as
    an independent code path and used by pair_compare.
    """
    qvec = point.qvec
    gamma0 = single_particle_rate(medium, point.omega_ev)
    cos_zeta = 0.0
    entangled = 0.0
    if state.kind is CorrelationKind.BELL:
        cos_zeta = math.cos(state.zeta)
        m_plus = overlap_ft(state.mode_1, state.mode_2, qvec)
        m_minus = overlap_ft(state.mode_1, state.mode_2, -qvec)
        entangled = float(abs(m_plus) ** 2 + abs(m_minus) ** 2)
    return RateBreakdown(
        term_incoherent=2.0,
        term_bunching=_classical_interference(state, qvec),
        term_entangled=entangled,
        cos_zeta=cos_zeta,
        gamma0=gamma0,
    )


def match_delta_k(medium: Medium, omega_ev: float, mode: str) -> np.ndarray:
    """Carrier difference matched to the photon momentum on the cone.

    "transverse" gives dk = q_T x_hat; "longitudinal" gives
    dk = q_z z_hat = (omega / hbar c beta) z_hat.
    """
    cone = cherenkov_angle(medium, omega_ev)
    if mode == "transverse":
        return np.array([cone.q_t, 0.0, 0.0])
    if mode == "longitudinal":
        return np.array([0.0, 0.0, cone.q_z])
    raise ValueError(f"mode must be 'transverse' or 'longitudinal', got {mode!r}")


def bell_resonance_energy(state: PairState, medium: Medium) -> float | None:
    """Resonance energy omega_0 = hbar c beta |dk| for a Bell pair with a
    longitudinal carrier difference; None otherwise."""
    if state.kind is not CorrelationKind.BELL:
        return None
    dk = state.delta_k
    mag = float(np.linalg.norm(dk))
    if mag == 0.0 or math.hypot(dk[0], dk[1]) > 1e-9 * mag:
        return None
    return HBAR_C_EV_NM * medium.beta * mag


def _map_points(fn, items, workers: int):
    """Order-preserving map, optionally over a thread pool.

    Results are identical for any worker count: each item is evaluated by
    the same pure function and reassembled in input order.
    """
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def cone_scan(
    state: PairState,
    medium: Medium,
    omega_ev: float,
    phi_grid,
    *,
    workers: int = 1,
) -> list[tuple[float, RateBreakdown]]:
    """rate_on_cone along an azimuth grid at fixed photon energy.

    The grid must be non-empty with values in [0, 2 pi).  Output order
    follows the input grid regardless of parallelism.
    """
    phi_grid = [float(p) for p in phi_grid]
    if not phi_grid:
        raise ValueError("phi grid must be non-empty")
    if any(not 0.0 <= p < 2.0 * math.pi for p in phi_grid):
        raise ValueError("phi values must lie in [0, 2 pi)")

    def evaluate(phi: float):
        return (phi, rate_on_cone(state, medium, cone_point(medium, omega_ev, phi)))

    return _map_points(evaluate, phi_grid, workers)


@dataclass(frozen=True)
class SpectrumScan:
    """Spectrum-scan result: per-energy breakdowns plus the Bell resonance
    energy omega_0 (None unless the state is Bell with longitudinal dk)."""

    points: tuple[tuple[float, RateBreakdown], ...]
    omega0_ev: float | None


def spectrum_scan(
    state: PairState,
    medium: Medium,
    phi: float,
    omega_grid,
    *,
    workers: int = 1,
) -> SpectrumScan:
    """rate_on_cone across an energy grid at fixed azimuth.

    Grid energies must be positive.  Energies below the Cherenkov threshold
    are not fatal: they yield a zero breakdown flagged forbidden.
    """
    omega_grid = [float(w) for w in omega_grid]
    if not omega_grid:
        raise ValueError("omega grid must be non-empty")
    if any(w <= 0.0 for w in omega_grid):
        raise ValueError("omega grid must be positive")

    def evaluate(omega_ev: float):
        try:
            point = cone_point(medium, omega_ev, phi)
        except NoCherenkovEmission:
            return (omega_ev, FORBIDDEN_BREAKDOWN)
        return (omega_ev, rate_on_cone(state, medium, point))

    points = tuple(_map_points(evaluate, omega_grid, workers))
    return SpectrumScan(points=points, omega0_ev=bell_resonance_energy(state, medium))


@dataclass(frozen=True)
class PairComparison:
    """Side-by-side product vs entangled breakdowns at one cone point.

    term_entangled isolates the purely quantum contribution (unweighted);
    it can be nonzero even when the product state shows no interference.
    """

    product: RateBreakdown
    bell: RateBreakdown
    term_entangled: float

    @property
    def quantum_minus_product(self) -> float:
        return self.bell.braces_quantum - self.product.braces_quantum


def _same_modes(a: PairState, b: PairState) -> bool:
    return (
        a.mode_1.envelope == b.mode_1.envelope
        and a.mode_2.envelope == b.mode_2.envelope
        and a.mode_1.carrier_k == b.mode_1.carrier_k
        and a.mode_2.carrier_k == b.mode_2.carrier_k
    )


def pair_compare(
    product_state: PairState,
    bell_state: PairState,
    medium: Medium,
    point: EmissionPoint,
) -> PairComparison:
    """Compare a product pair against a Bell pair built from the same modes.

    Both breakdowns are evaluated through the general pair expression, so
    offset envelope centers (classical bunching analogue) are supported
    alongside the entangled term.
    """
    if product_state.kind is not CorrelationKind.PRODUCT:
        raise ValueError("first state must be a product pair")
    if bell_state.kind is not CorrelationKind.BELL:
        raise ValueError("second state must be a Bell pair")
    if not _same_modes(product_state, bell_state):
        raise ValueError("states must be built from the same two modes")
    product = rate_on_cone_general(product_state, medium, point)
    bell = rate_on_cone_general(bell_state, medium, point)
    return PairComparison(product=product, bell=bell, term_entangled=bell.term_entangled)
