"""Cherenkov kinematics: constants, medium model, cone geometry, diagnostics.

Units contract for the whole package:
    photon energies   eV
    lengths           nm
    wavevectors       nm^-1
    angles            rad
    speeds            beta = v/c (dimensionless)

Conversions use hbar*c = 197.3269804 eV nm, so a photon of energy w eV in a
medium of index n has wavenumber q = n*w / (hbar*c) in nm^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NoCherenkovEmission

HBAR_C_EV_NM = 197.3269804       # eV nm
ALPHA_FS = 7.2973525693e-3       # fine-structure constant
ME_C2_EV = 510998.95             # electron rest energy, eV

# Diagnostic thresholds (ratios above these raise a warning flag).
RECOIL_WARN_RATIO = 1e-2
SEPARATION_WARN_RATIO = 1.0 / 3.0


@dataclass(frozen=True)
class Medium:
    """Optical medium traversed by the electrons.

    The refractive index is either the constant ``n`` or a dispersion
    ``table`` of (photon energy eV, n) rows, strictly increasing in energy,
    linearly interpolated and clamped to the endpoint values outside the
    tabulated range.  ``beta`` is the electron speed as a fraction of c.
    """

    beta: float
    n: float | None = None
    table: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")
        if (self.n is None) == (self.table is None):
            raise ValueError("exactly one of n or table must be given")
        if self.n is not None and self.n <= 0.0:
            raise ValueError(f"refractive index must be positive, got {self.n}")
        if self.table is not None:
            rows = tuple((float(w), float(n)) for w, n in self.table)
            if len(rows) < 2:
                raise ValueError("dispersion table needs at least two rows")
            energies = [w for w, _ in rows]
            if any(b <= a for a, b in zip(energies, energies[1:])):
                raise ValueError("table energies must be strictly increasing")
            if any(n <= 0.0 for _, n in rows):
                raise ValueError("every tabulated index must be positive")
            object.__setattr__(self, "table", rows)

    def index_at(self, omega_ev: float) -> float:
        """Refractive index n(omega) at photon energy omega_ev."""
        if self.n is not None:
            return self.n
        energies = np.array([w for w, _ in self.table])
        values = np.array([n for _, n in self.table])
        return float(np.interp(omega_ev, energies, values))


@dataclass(frozen=True)
class ConeGeometry:
    """Cherenkov-cone geometry at one photon energy.

    ``q`` is the in-medium photon wavenumber; ``q_t``/``q_z`` are its
    transverse/longitudinal components on the cone, so q_t^2 + q_z^2 = q^2
    and q_z = omega / (hbar c beta).  ``degenerate`` marks the exact
    threshold n*beta = 1 where the cone closes (sin_theta = 0).
    """

    theta_c: float
    sin_theta: float
    cos_theta: float
    q: float
    q_t: float
    q_z: float
    degenerate: bool = False


def cherenkov_angle(medium: Medium, omega_ev: float) -> ConeGeometry:
    """Cone geometry theta_c = arccos(1 / (n beta)) at photon energy omega_ev.

    Raises NoCherenkovEmission when n(omega) * beta < 1.  The threshold case
    n * beta == 1 returns a degenerate zero-aperture geometry instead of an
    error, which keeps energy sweeps across the threshold continuous.
    """
    if omega_ev <= 0.0:
        raise ValueError(f"photon energy must be positive, got {omega_ev}")
    n = medium.index_at(omega_ev)
    nb = n * medium.beta
    if nb < 1.0:
        raise NoCherenkovEmission(
            f"n*beta = {nb:.6g} <= 1 at omega = {omega_ev:.6g} eV: "
            "no Cherenkov cone"
        )
    cos_theta = 1.0 / nb
    sin_theta = math.sqrt(max(0.0, 1.0 - cos_theta * cos_theta))
    q = n * omega_ev / HBAR_C_EV_NM
    return ConeGeometry(
        theta_c=math.acos(cos_theta),
        sin_theta=sin_theta,
        cos_theta=cos_theta,
        q=q,
        q_t=q * sin_theta,
        q_z=q * cos_theta,
        degenerate=(nb == 1.0),
    )


def single_particle_rate(medium: Medium, omega_ev: float) -> float:
    """Normalization rate Gamma_0 = alpha * beta * sin^2(theta_c) / (2 pi).

    All reported rates in this package are the dimensionless ratio
    Gamma / Gamma_0 on the cone.  Degenerate geometry gives Gamma_0 = 0.
    """
    cone = cherenkov_angle(medium, omega_ev)
    return ALPHA_FS * medium.beta * cone.sin_theta**2 / (2.0 * math.pi)


def lorentz_gamma(beta: float) -> float:
    return 1.0 / math.sqrt(1.0 - beta * beta)


@dataclass(frozen=True)
class AssumptionReport:
    """Validity diagnostics for the linearized-dispersion emission model.

    ``recoil_ratio`` is hbar*q / p_e (photon over electron momentum);
    ``separation_ratio`` is the envelope momentum spread projected on the
    carrier difference, divided by |delta_k| (infinite when delta_k = 0);
    walk-off between wavepackets is not modeled and is assumed negligible.
    Diagnostics never abort a computation.
    """

    recoil_ratio: float
    recoil_ok: bool
    separation_ratio: float
    separation_ok: bool
    walkoff_modeled: bool = False

    @property
    def all_ok(self) -> bool:
        return self.recoil_ok and self.separation_ok

    def summary(self) -> str:
        return (
            f"recoil_ratio={self.recoil_ratio:.3e}"
            f"({'ok' if self.recoil_ok else 'warn'})"
            f" separation_ratio={self.separation_ratio:.3e}"
            f"({'ok' if self.separation_ok else 'warn'})"
            " walkoff=not-modeled"
        )


def _state_modes(state) -> list:
    """Modes of a pair or many-body state, duck-typed."""
    if hasattr(state, "modes"):
        return list(state.modes)
    return [state.mode_1, state.mode_2]


def _separation_ratio(envelope, dk: np.ndarray) -> float:
    """Momentum spread of |phi|^2 along dk over |dk|.

    A density of positional std sigma per axis has momentum-space std
    1/(2 sigma); the spread along the unit vector u is the quadrature sum
    of the per-axis contributions.
    """
    mag = float(np.linalg.norm(dk))
    if mag == 0.0:
        return math.inf
    u = dk / mag
    sigma = np.asarray(envelope.sigma, dtype=float)
    spread = 0.5 * math.sqrt(float(np.sum((u / sigma) ** 2)))
    return spread / mag


def validate_assumptions(state, medium: Medium, omega_ev: float) -> AssumptionReport:
    """Diagnostic report for a pair or many-body state at one photon energy.

    Checks (a) photon recoil against the electron momentum and (b) the
    momentum separation of every carrier pair against the envelope momentum
    spread.  Only reports; never raises.
    """
    n = medium.index_at(omega_ev)
    p_e = lorentz_gamma(medium.beta) * ME_C2_EV * medium.beta  # eV (p c)
    recoil = n * omega_ev / p_e

    modes = _state_modes(state)
    separation = 0.0
    for i in range(len(modes)):
        for j in range(i + 1, len(modes)):
            dk = np.asarray(modes[i].carrier_k, float) - np.asarray(
                modes[j].carrier_k, float
            )
            for env in {modes[i].envelope, modes[j].envelope}:
                separation = max(separation, _separation_ratio(env, dk))
    return AssumptionReport(
        recoil_ratio=recoil,
        recoil_ok=recoil <= RECOIL_WARN_RATIO,
        separation_ratio=separation,
        separation_ok=separation <= SEPARATION_WARN_RATIO,
    )
