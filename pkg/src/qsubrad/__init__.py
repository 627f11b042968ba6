"""Cherenkov emission rates for correlated free-electron pairs and small
N-particle ensembles: classical mixtures, product states, and maximally
entangled pairs, plus scan drivers and a quadrature oracle.

Units: photon energies in eV, lengths in nm, wavevectors in nm^-1, angles
in rad, speeds as beta = v/c.  Rates are dimensionless brace factors
Gamma / Gamma_0 evaluated on the Cherenkov cone.
"""

__version__ = "0.1.0"

from .errors import (
    ConfigError,
    DuplicateCarrier,
    GridTooCoarse,
    NoCherenkovEmission,
    NotNormalized,
    QsubradError,
    TooManyParticles,
    UnequalCovariance,
)
from .kinematics import (
    ALPHA_FS,
    HBAR_C_EV_NM,
    ME_C2_EV,
    AssumptionReport,
    ConeGeometry,
    Medium,
    cherenkov_angle,
    single_particle_rate,
    validate_assumptions,
)
from .wavepackets import (
    DensityGrid,
    GaussianEnvelope,
    ModeGrid,
    ModeWave,
    density_ft,
    envelope_density_grid,
    load_density_grid,
    mode_grid,
    numeric_density_ft,
    numeric_overlap_ft,
    overlap_ft,
    quadrature_density_ft,
    quadrature_overlap_ft,
    save_density_grid,
)
from .paircorr import (
    CorrelationKind,
    PairState,
    bell_pair,
    classical_mixture,
    g1_density,
    g2_bell,
    g2_classical,
    pair_correlation,
    product_pair,
    reconstructed_g2,
)
from .emission import (
    EmissionPoint,
    PairComparison,
    RateBreakdown,
    SpectrumScan,
    bell_resonance_energy,
    cone_point,
    cone_scan,
    match_delta_k,
    pair_compare,
    rate_on_cone,
    rate_on_cone_general,
    spectrum_scan,
)
from .manybody import (
    ManyBodyState,
    build_state,
    coherent_sum,
    load_manybody_state,
    manybody_breakdown,
    manybody_rate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
