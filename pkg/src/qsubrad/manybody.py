"""N-particle states over shared-envelope momentum modes, with emission
rates computed by direct second-quantized enumeration.

A state is a superposition of spin assignments over N modes that share one
Gaussian envelope and carry pairwise distinct wavevectors k_i: each basis
term places one particle in every mode, mode i with spin sigma_i.  Basis
kets are creation-operator strings ordered by ascending mode index, which
fixes the fermionic sign convention.

The brace factor at a cone point is

    braces(qvec) = N + sum_{ijkl} A_{ijkl} S_jk(qvec) S_li(qvec)*,

where S_ab(qvec) = F(qvec - (k_b - k_a)) is the envelope density transform
shifted by the carrier difference and A_{ijkl} is the two-body expectation
sum_{s,s'} <a+_{i s'} a+_{j s} a_{k s} a_{l s'}> evaluated exactly over the
(<= 2^N)-term basis with anticommutation signs.  This generic enumeration
is the implementation for every N, including N = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .emission import EmissionPoint, RateBreakdown
from .errors import DuplicateCarrier, NotNormalized, TooManyParticles
from .kinematics import Medium, single_particle_rate
from .wavepackets import GaussianEnvelope, ModeWave, density_ft

MAX_PARTICLES = 8

_SPIN_CHARS = {"u": "u", "d": "d", "up": "u", "down": "d"}


def _parse_assignment(assignment, n_modes: int) -> str:
    """Normalize a spin assignment to a string of 'u'/'d' characters."""
    if isinstance(assignment, str):
        chars = list(assignment)
    else:
        chars = list(assignment)
    if len(chars) != n_modes:
        raise ValueError(
            f"assignment {assignment!r} has {len(chars)} entries, expected {n_modes}"
        )
    try:
        return "".join(_SPIN_CHARS[str(c).lower()] for c in chars)
    except KeyError as exc:
        raise ValueError(f"bad spin label in assignment {assignment!r}") from exc


@dataclass(frozen=True)
class ManyBodyState:
    """Superposition of spin assignments over N shared-envelope modes."""

    envelope: GaussianEnvelope
    carriers: tuple[tuple[float, float, float], ...]
    terms: tuple[tuple[str, complex], ...]

    @property
    def n_particles(self) -> int:
        return len(self.carriers)

    @property
    def modes(self) -> list[ModeWave]:
        """ModeWave view of the modes (spins live in the assignments)."""
        return [ModeWave(self.envelope, k, "up") for k in self.carriers]


def build_state(modes, terms, *, renormalize: bool = False) -> ManyBodyState:
    """Validated many-body state from modes and (assignment, coefficient) terms.

    Modes must share one envelope and have pairwise distinct carriers;
    N <= 8.  Coefficients must satisfy sum |c|^2 = 1 within 1e-12 unless
    renormalize=True.  Assignments accept strings like "ud" or sequences
    of "up"/"down".
    """
    modes = list(modes)
    if not modes:
        raise ValueError("at least one mode is required")
    if len(modes) > MAX_PARTICLES:
        raise TooManyParticles(f"N = {len(modes)} exceeds the bound {MAX_PARTICLES}")
    envelope = modes[0].envelope
    for m in modes[1:]:
        if m.envelope != envelope:
            raise ValueError("all modes must share one envelope")
    carriers = tuple(m.carrier_k for m in modes)
    if len(set(carriers)) != len(carriers):
        raise DuplicateCarrier("mode carriers must be pairwise distinct")

    terms = list(terms)
    if not terms:
        raise ValueError("at least one term is required")
    parsed: dict[str, complex] = {}
    for assignment, coeff in terms:
        key = _parse_assignment(assignment, len(modes))
        if key in parsed:
            raise ValueError(f"duplicate assignment {key!r}")
        parsed[key] = complex(coeff)
    norm_sq = sum(abs(c) ** 2 for c in parsed.values())
    if abs(norm_sq - 1.0) > 1e-12:
        if not renormalize:
            raise NotNormalized(f"sum |c|^2 = {norm_sq:.12g}, expected 1")
        scale = 1.0 / math.sqrt(norm_sq)
        parsed = {k: c * scale for k, c in parsed.items()}
    ordered = tuple(sorted(parsed.items()))
    return ManyBodyState(envelope=envelope, carriers=carriers, terms=ordered)


# ---------------------------------------------------------------------------
# Fermionic enumeration
# ---------------------------------------------------------------------------


def _orbital(mode: int, spin_char: str) -> int:
    return 2 * mode + (0 if spin_char == "u" else 1)


def _basis_mask(assignment: str) -> int:
    mask = 0
    for mode, spin_char in enumerate(assignment):
        mask |= 1 << _orbital(mode, spin_char)
    return mask


def _annihilate(mask: int, orbital: int) -> tuple[int, int] | None:
    """Apply a_orbital to a canonical ket; returns (new_mask, sign) or None."""
    bit = 1 << orbital
    if not mask & bit:
        return None
    sign = -1 if bin(mask & (bit - 1)).count("1") % 2 else 1
    return mask ^ bit, sign


def _pair_annihilated(state_vec: dict[int, complex], orb_a: int, orb_b: int) -> dict[int, complex]:
    """a_{orb_a} a_{orb_b} |psi> as a sparse mask -> coefficient map."""
    out: dict[int, complex] = {}
    for mask, coeff in state_vec.items():
        first = _annihilate(mask, orb_b)
        if first is None:
            continue
        mask1, sign1 = first
        second = _annihilate(mask1, orb_a)
        if second is None:
            continue
        mask2, sign2 = second
        out[mask2] = out.get(mask2, 0.0 + 0.0j) + sign1 * sign2 * coeff
    return out


def _dot(bra: dict[int, complex], ket: dict[int, complex]) -> complex:
    if len(bra) > len(ket):
        return _dot(ket, bra).conjugate()
    return sum((bra[m].conjugate() * ket[m] for m in bra if m in ket), 0.0 + 0.0j)


@lru_cache(maxsize=32)
def _pair_weight_tensor(state: ManyBodyState) -> np.ndarray:
    """Two-body weights A[i, j, k, l] = sum_{s,s'} <a+_{i s'} a+_{j s} a_{k s} a_{l s'}>."""
    n = state.n_particles
    psi = {_basis_mask(assignment): coeff for assignment, coeff in state.terms}
    # a_{(j s)} a_{(i s')} |psi> for every ordered orbital pair, sparse.
    pair_vecs: dict[tuple[int, int], dict[int, complex]] = {}
    for a in range(2 * n):
        for b in range(2 * n):
            vec = _pair_annihilated(psi, a, b)
            if vec:
                pair_vecs[(a, b)] = vec
    weights = np.zeros((n, n, n, n), dtype=complex)
    spins = ("u", "d")
    for s in spins:
        for sp in spins:
            for i in range(n):
                for j in range(n):
                    bra = pair_vecs.get((_orbital(j, s), _orbital(i, sp)))
                    if not bra:
                        continue
                    for k in range(n):
                        for l in range(n):
                            ket = pair_vecs.get((_orbital(k, s), _orbital(l, sp)))
                            if ket:
                                weights[i, j, k, l] += _dot(bra, ket)
    return weights


def _shift_matrix(state: ManyBodyState, qvec: np.ndarray) -> np.ndarray:
    """S[a, b] = F(qvec - (k_b - k_a)), the shifted density transform."""
    n = state.n_particles
    ks = [np.array(k) for k in state.carriers]
    s = np.empty((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            s[a, b] = density_ft(state.envelope, qvec - (ks[b] - ks[a]))
    return s


def coherent_sum(state: ManyBodyState, qvec) -> complex:
    """Coherent pair contribution sum_{ijkl} A_{ijkl} S_jk S_li* (complex;
    the imaginary part must vanish for a valid state)."""
    qvec = np.asarray(qvec, dtype=float)
    weights = _pair_weight_tensor(state)
    s = _shift_matrix(state, qvec)
    return complex(np.einsum("ijkl,jk,li->", weights, s, np.conj(s)))


def manybody_rate(state: ManyBodyState, medium: Medium, point: EmissionPoint) -> float:
    """Brace factor Gamma / Gamma_0 of the many-body state at a cone point."""
    return state.n_particles + coherent_sum(state, point.qvec).real


def manybody_breakdown(state: ManyBodyState, medium: Medium, point: EmissionPoint) -> RateBreakdown:
    """RateBreakdown-shaped view: the whole coherent sum is reported as the
    bunching term on top of the incoherent N."""
    coherent = coherent_sum(state, point.qvec).real
    return RateBreakdown(
        term_incoherent=float(state.n_particles),
        term_bunching=coherent,
        term_entangled=0.0,
        cos_zeta=0.0,
        gamma0=single_particle_rate(medium, point.omega_ev),
    )


# ---------------------------------------------------------------------------
# State description file (consumed by the CLI)
# ---------------------------------------------------------------------------
#
#   # comment lines and blank lines are ignored
#   envelope sigma 200 200 1
#   envelope center 0 0 0          (optional, defaults to the origin)
#   mode 0.0070933 0 0             (one per mode: kx ky kz in nm^-1)
#   mode -0.0070933 0 0
#   term ud 0.70710678118654752 0
#   term du 0 0.70710678118654752  (assignment, coeff re, coeff im)


def load_manybody_state(path, *, renormalize: bool = False) -> ManyBodyState:
    """Parse the state description file format documented above."""
    path = Path(path)
    sigma = None
    center = (0.0, 0.0, 0.0)
    carriers: list[tuple[float, float, float]] = []
    raw_terms: list[tuple[str, complex]] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "envelope" and fields[1] == "sigma":
                sigma = tuple(float(v) for v in fields[2:5])
            elif fields[0] == "envelope" and fields[1] == "center":
                center = tuple(float(v) for v in fields[2:5])
            elif fields[0] == "mode":
                carriers.append(tuple(float(v) for v in fields[1:4]))
            elif fields[0] == "term":
                raw_terms.append((fields[1], complex(float(fields[2]), float(fields[3]))))
            else:
                raise ValueError(f"unknown directive {fields[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
    if sigma is None:
        raise ValueError(f"{path}: missing 'envelope sigma' line")
    if not carriers:
        raise ValueError(f"{path}: no 'mode' lines")
    envelope = GaussianEnvelope(sigma, center)
    modes = [ModeWave(envelope, k, "up") for k in carriers]
    return build_state(modes, raw_terms, renormalize=renormalize)
