"""Config-driven command line front end.

Subcommands: cone-scan | spectrum-scan | pair-compare | manybody-rate |
oracle-check.  Every command reads a flat INI-style config (sections of
key=value pairs; unknown keys are errors), evaluates the requested scan,
and writes CSV (default) or JSON.  Output is deterministic: bytes are
identical across runs and worker counts for a fixed config and version.

Exit codes: 0 success, 2 config error, 3 physics error (for instance no
Cherenkov cone, or a failed validity check under --strict), 4 oracle
tolerance failure.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .emission import (
    bell_resonance_energy,
    cone_point,
    cone_scan,
    match_delta_k,
    pair_compare,
    rate_on_cone,
    spectrum_scan,
)
from .errors import ConfigError, NoCherenkovEmission, QsubradError
from .kinematics import Medium, cherenkov_angle, single_particle_rate, validate_assumptions
from .manybody import load_manybody_state, manybody_rate
from .paircorr import CorrelationKind, PairState, bell_pair, classical_mixture, product_pair
from .wavepackets import (
    GaussianEnvelope,
    ModeWave,
    density_ft,
    overlap_ft,
    quadrature_density_ft,
    quadrature_overlap_ft,
)

_ALLOWED_KEYS = {
    "medium": {"n", "table", "beta"},
    "envelope": {
        "sigma_x", "sigma_y", "sigma_z",
        "center_x", "center_y", "center_z",
        "size_convention",
    },
    "state": {
        "kind", "zeta", "delta_k", "delta_k_omega_ev",
        "offset_x", "offset_y", "offset_z",
    },
    "scan": {
        "type", "omega_ev", "phi", "phi_min", "phi_max", "phi_count",
        "omega_min_ev", "omega_max_ev", "omega_count",
    },
    "output": {"precision", "format"},
    "oracle": {"samples", "seed", "nodes", "span_sigmas", "tolerance"},
}

_ZETA_LABELS = (
    (0.0, "zeta0"),
    (math.pi / 2.0, "zetapi2"),
    (math.pi, "zetapi"),
    (3.0 * math.pi / 2.0, "zeta3pi2"),
)


def _fail(section: str, key: str, message: str) -> ConfigError:
    return ConfigError(f"[{section}] {key}: {message}")


class RunConfig:
    """Validated view of a parsed config file."""

    def __init__(self, path: Path):
        self.path = Path(path)
        if not self.path.is_file():
            raise ConfigError(f"config file not found: {self.path}")
        self.sha256 = hashlib.sha256(self.path.read_bytes()).hexdigest()
        parser = configparser.ConfigParser(
            interpolation=None, inline_comment_prefixes=("#", ";")
        )
        try:
            parser.read(self.path)
        except configparser.Error as exc:
            raise ConfigError(f"{self.path}: {exc}") from exc
        for section in parser.sections():
            if section not in _ALLOWED_KEYS:
                raise ConfigError(f"unknown section [{section}]")
            for key in parser[section]:
                if key not in _ALLOWED_KEYS[section]:
                    raise _fail(section, key, "unknown key")
        self._parser = parser

    def has(self, section: str, key: str) -> bool:
        return self._parser.has_option(section, key)

    def raw(self, section: str, key: str, default=None):
        if not self._parser.has_option(section, key):
            if default is None:
                raise _fail(section, key, "required key is missing")
            return default
        return self._parser.get(section, key)

    def number(self, section: str, key: str, default=None, *, integer=False):
        raw = self.raw(section, key, default)
        if not isinstance(raw, str):
            return raw
        try:
            return int(raw) if integer else float(raw)
        except ValueError as exc:
            raise _fail(section, key, f"not a number: {raw!r}") from exc


def _parse_zeta_token(token: str, cfg_key=("state", "zeta")) -> float:
    """Accept plain floats plus 'pi', 'pi/2', '3pi/2', '0.5pi' style tokens."""
    token = token.strip().lower()
    if not token:
        raise _fail(*cfg_key, "empty zeta entry")
    if "pi" in token:
        head, _, tail = token.partition("pi")
        try:
            factor = float(head) if head else 1.0
            if tail.startswith("/"):
                factor /= float(tail[1:])
            elif tail:
                raise ValueError(tail)
            return factor * math.pi
        except ValueError as exc:
            raise _fail(*cfg_key, f"bad zeta entry {token!r}") from exc
    try:
        return float(token)
    except ValueError as exc:
        raise _fail(*cfg_key, f"bad zeta entry {token!r}") from exc


def zeta_label(zeta: float) -> str:
    """Column suffix for one Bell phase, canonical names for the usual angles."""
    for value, name in _ZETA_LABELS:
        if abs(zeta - value) < 1e-12:
            return name
    return "zeta" + f"{zeta:.6g}".replace(".", "p").replace("-", "m")


def _split_list(raw: str) -> list[str]:
    return [tok for tok in raw.replace(",", " ").split() if tok]


def parse_medium(cfg: RunConfig) -> Medium:
    beta = cfg.number("medium", "beta")
    if not 0.0 < beta < 1.0:
        raise _fail("medium", "beta", f"must be in (0, 1), got {beta:g}")
    has_n = cfg.has("medium", "n")
    has_table = cfg.has("medium", "table")
    if has_n == has_table:
        raise _fail("medium", "n", "give exactly one of n or table")
    if has_n:
        n = cfg.number("medium", "n")
        if n <= 0.0:
            raise _fail("medium", "n", f"must be positive, got {n:g}")
        return Medium(beta=beta, n=n)
    rows = []
    for tok in _split_list(cfg.raw("medium", "table")):
        energy, _, index = tok.partition(":")
        try:
            rows.append((float(energy), float(index)))
        except ValueError as exc:
            raise _fail("medium", "table", f"bad row {tok!r}") from exc
    try:
        return Medium(beta=beta, table=tuple(rows))
    except ValueError as exc:
        raise _fail("medium", "table", str(exc)) from exc


def parse_envelope(cfg: RunConfig) -> GaussianEnvelope:
    sizes = tuple(
        cfg.number("envelope", f"sigma_{axis}") for axis in ("x", "y", "z")
    )
    center = tuple(
        cfg.number("envelope", f"center_{axis}", 0.0) for axis in ("x", "y", "z")
    )
    convention = cfg.raw("envelope", "size_convention", "std")
    if convention not in ("std", "fwhm"):
        raise _fail("envelope", "size_convention", f"must be std or fwhm, got {convention!r}")
    try:
        if convention == "fwhm":
            return GaussianEnvelope.from_fwhm(sizes, center)
        return GaussianEnvelope(sizes, center)
    except ValueError as exc:
        raise _fail("envelope", "sigma_x", str(exc)) from exc


def parse_delta_k(cfg: RunConfig, medium: Medium, default_omega: float | None) -> np.ndarray:
    raw = cfg.raw("state", "delta_k").strip()
    if raw in ("transverse", "longitudinal"):
        if cfg.has("state", "delta_k_omega_ev"):
            omega = cfg.number("state", "delta_k_omega_ev")
        elif default_omega is not None:
            omega = default_omega
        else:
            raise _fail("state", "delta_k_omega_ev",
                        "required for a matched delta_k in a spectrum scan")
        try:
            return match_delta_k(medium, omega, raw)
        except NoCherenkovEmission as exc:
            raise _fail("state", "delta_k", str(exc)) from exc
    parts = _split_list(raw)
    if len(parts) != 3:
        raise _fail("state", "delta_k",
                    "expected transverse | longitudinal | 'kx ky kz'")
    try:
        return np.array([float(v) for v in parts])
    except ValueError as exc:
        raise _fail("state", "delta_k", f"bad vector {raw!r}") from exc


def parse_offset(cfg: RunConfig) -> tuple[float, float, float]:
    return tuple(
        cfg.number("state", f"offset_{axis}", 0.0) for axis in ("x", "y", "z")
    )


def _pair_modes(envelope: GaussianEnvelope, dk: np.ndarray, offset) -> tuple[ModeWave, ModeWave]:
    """The two pair modes: carriers +-dk/2 (only the difference matters),
    second envelope optionally offset."""
    half = 0.5 * dk
    env_2 = envelope
    if any(offset):
        env_2 = GaussianEnvelope(
            envelope.sigma,
            tuple(c + o for c, o in zip(envelope.center, offset)),
        )
    mode_1 = ModeWave(envelope, tuple(half), "up")
    mode_2 = ModeWave(env_2, tuple(-half), "down")
    return mode_1, mode_2


def parse_zetas(cfg: RunConfig) -> list[float]:
    raw = cfg.raw("state", "zeta")
    zetas = [_parse_zeta_token(tok) for tok in raw.split(",")]
    if not zetas:
        raise _fail("state", "zeta", "at least one value required")
    labels = [zeta_label(z) for z in zetas]
    if len(set(labels)) != len(labels):
        raise _fail("state", "zeta", "duplicate values")
    return zetas


def parse_pair_state(cfg: RunConfig, medium: Medium, default_omega: float | None):
    """Build (states, zetas) from the [state] section.

    For kind=bell, one PairState per zeta; otherwise a single state.
    """
    kind = cfg.raw("state", "kind")
    envelope = parse_envelope(cfg)
    offset = parse_offset(cfg)
    if kind == "bell":
        dk = parse_delta_k(cfg, medium, default_omega)
        mode_1, mode_2 = _pair_modes(envelope, dk, offset)
        zetas = parse_zetas(cfg)
        try:
            states = [bell_pair(mode_1, mode_2, z) for z in zetas]
        except ValueError as exc:
            raise _fail("state", "kind", str(exc)) from exc
        return states, zetas
    if cfg.has("state", "zeta"):
        raise _fail("state", "zeta", f"only valid for kind=bell, not {kind!r}")
    if kind == "classical":
        if any(offset):
            raise _fail("state", "offset_x", "classical mixture requires zero offset")
        dk = parse_delta_k(cfg, medium, default_omega)
        mode_1, mode_2 = _pair_modes(envelope, dk, offset)
        try:
            return [classical_mixture(mode_1, mode_2)], []
        except ValueError as exc:
            raise _fail("state", "kind", str(exc)) from exc
    if kind == "product":
        dk = (
            parse_delta_k(cfg, medium, default_omega)
            if cfg.has("state", "delta_k")
            else np.zeros(3)
        )
        mode_1, mode_2 = _pair_modes(envelope, dk, offset)
        try:
            return [product_pair(mode_1, mode_2)], []
        except ValueError as exc:
            raise _fail("state", "kind", str(exc)) from exc
    raise _fail("state", "kind", f"must be classical | product | bell, got {kind!r}")


def _scan_type(cfg: RunConfig, expected: str):
    actual = cfg.raw("scan", "type")
    if actual != expected:
        raise _fail("scan", "type", f"expected {expected!r} for this command, got {actual!r}")


def phi_grid(cfg: RunConfig) -> np.ndarray:
    count = cfg.number("scan", "phi_count", integer=True)
    if count < 1:
        raise _fail("scan", "phi_count", "must be >= 1")
    lo = cfg.number("scan", "phi_min", 0.0)
    hi = cfg.number("scan", "phi_max", 2.0 * math.pi)
    if not 0.0 <= lo < hi <= 2.0 * math.pi:
        raise _fail("scan", "phi_min", "need 0 <= phi_min < phi_max <= 2 pi")
    return np.linspace(lo, hi, count, endpoint=False)


def omega_grid(cfg: RunConfig) -> np.ndarray:
    count = cfg.number("scan", "omega_count", integer=True)
    if count < 2:
        raise _fail("scan", "omega_count", "must be >= 2")
    lo = cfg.number("scan", "omega_min_ev")
    hi = cfg.number("scan", "omega_max_ev")
    if not 0.0 < lo < hi:
        raise _fail("scan", "omega_min_ev", "need 0 < omega_min_ev < omega_max_ev")
    return np.linspace(lo, hi, count)


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _round_sig(value: float, precision: int) -> float:
    return float(f"{value:.{precision}g}")


def _fmt(value, precision: int) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{value:.{precision}g}"


class Report:
    """Uniform tabular result: metadata, column names, numeric rows."""

    def __init__(self, meta: dict, columns: list[str], rows: list[list], precision: int):
        self.precision = precision
        self.meta = {
            k: (_round_sig(v, precision) if isinstance(v, float) else v)
            for k, v in meta.items()
        }
        self.columns = columns
        self.rows = [
            [
                _round_sig(v, precision) if isinstance(v, float) else v
                for v in row
            ]
            for row in rows
        ]

    def to_csv(self) -> str:
        lines = [f"# {k}={_fmt(v, self.precision)}" for k, v in self.meta.items()]
        lines.append(",".join(self.columns))
        for row in self.rows:
            lines.append(",".join(_fmt(v, self.precision) for v in row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"meta": self.meta, "columns": self.columns, "rows": self.rows}
        return json.dumps(payload, indent=1) + "\n"


def _base_meta(command: str, cfg: RunConfig) -> dict:
    return {
        "version": __version__,
        "command": command,
        "config_sha256": cfg.sha256,
    }


def _reference_meta(medium: Medium, omega_ev: float) -> dict:
    cone = cherenkov_angle(medium, omega_ev)
    return {
        "gamma0": single_particle_rate(medium, omega_ev),
        "gamma0_omega_ev": float(omega_ev),
        "theta_c_rad": cone.theta_c,
    }


def _check_strict(report, strict: bool):
    if strict and not report.all_ok:
        failing = []
        if not report.recoil_ok:
            failing.append("recoil")
        if not report.separation_ok:
            failing.append("momentum separation")
        raise QsubradError(
            "validity check failed under --strict: " + ", ".join(failing)
        )


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_cone_scan(cfg: RunConfig, workers: int, strict: bool) -> Report:
    _scan_type(cfg, "cone")
    medium = parse_medium(cfg)
    omega_ev = cfg.number("scan", "omega_ev")
    states, zetas = parse_pair_state(cfg, medium, omega_ev)
    grid = phi_grid(cfg)

    diagnostics = validate_assumptions(states[0], medium, omega_ev)
    _check_strict(diagnostics, strict)

    points = cone_scan(states[0], medium, omega_ev, grid, workers=workers)
    columns = ["phi_rad", "braces_classical"]
    columns += [f"braces_{zeta_label(z)}" for z in zetas]
    rows = []
    for phi, breakdown in points:
        row = [phi, breakdown.braces_classical]
        for z in zetas:
            row.append(breakdown.braces_classical - math.cos(z) * breakdown.term_entangled)
        rows.append(row)

    meta = _base_meta("cone-scan", cfg)
    meta.update(_reference_meta(medium, omega_ev))
    omega0 = bell_resonance_energy(states[0], medium)
    if omega0 is not None:
        meta["omega0_ev"] = omega0
    meta["assumptions"] = diagnostics.summary()
    precision = cfg.number("output", "precision", 9, integer=True)
    return Report(meta, columns, rows, precision)


def cmd_spectrum_scan(cfg: RunConfig, workers: int, strict: bool) -> Report:
    _scan_type(cfg, "spectrum")
    medium = parse_medium(cfg)
    grid = omega_grid(cfg)
    phi = cfg.number("scan", "phi", 0.0)
    states, zetas = parse_pair_state(cfg, medium, None)

    scan = spectrum_scan(states[0], medium, phi, grid, workers=workers)
    allowed = [w for w, b in scan.points if not b.forbidden]
    if not allowed:
        raise NoCherenkovEmission("no point of the omega grid allows emission")
    ref_omega = allowed[0]
    if scan.omega0_ev is not None:
        try:
            cherenkov_angle(medium, scan.omega0_ev)
            ref_omega = scan.omega0_ev
        except NoCherenkovEmission:
            pass

    diagnostics = validate_assumptions(states[0], medium, ref_omega)
    _check_strict(diagnostics, strict)

    columns = []
    if scan.omega0_ev is not None:
        columns.append("omega_over_omega0")
    columns += ["omega_ev", "braces_classical"]
    columns += [f"braces_{zeta_label(z)}" for z in zetas]
    columns.append("forbidden")
    rows = []
    for omega_ev, breakdown in scan.points:
        row = []
        if scan.omega0_ev is not None:
            row.append(omega_ev / scan.omega0_ev)
        row += [omega_ev, breakdown.braces_classical]
        for z in zetas:
            row.append(breakdown.braces_classical - math.cos(z) * breakdown.term_entangled)
        row.append(breakdown.forbidden)
        rows.append(row)

    meta = _base_meta("spectrum-scan", cfg)
    meta.update(_reference_meta(medium, ref_omega))
    if scan.omega0_ev is not None:
        meta["omega0_ev"] = scan.omega0_ev
    meta["assumptions"] = diagnostics.summary()
    precision = cfg.number("output", "precision", 9, integer=True)
    return Report(meta, columns, rows, precision)


def cmd_pair_compare(cfg: RunConfig, workers: int, strict: bool) -> Report:
    _scan_type(cfg, "cone")
    medium = parse_medium(cfg)
    omega_ev = cfg.number("scan", "omega_ev")
    states, zetas = parse_pair_state(cfg, medium, omega_ev)
    if states[0].kind is not CorrelationKind.BELL:
        raise _fail("state", "kind", "pair-compare requires kind=bell")
    product_state = product_pair(states[0].mode_1, states[0].mode_2)
    grid = phi_grid(cfg)

    diagnostics = validate_assumptions(states[0], medium, omega_ev)
    _check_strict(diagnostics, strict)

    def evaluate(phi: float):
        point = cone_point(medium, omega_ev, phi)
        return phi, pair_compare(product_state, states[0], medium, point)

    results = [evaluate(phi) for phi in grid]
    columns = ["phi_rad", "braces_product"]
    columns += [f"braces_bell_{zeta_label(z)}" for z in zetas]
    columns.append("term_entangled")
    rows = []
    for phi, comparison in results:
        row = [phi, comparison.product.braces_quantum]
        for z in zetas:
            row.append(
                comparison.bell.braces_classical
                - math.cos(z) * comparison.term_entangled
            )
        row.append(comparison.term_entangled)
        rows.append(row)

    meta = _base_meta("pair-compare", cfg)
    meta.update(_reference_meta(medium, omega_ev))
    meta["assumptions"] = diagnostics.summary()
    precision = cfg.number("output", "precision", 9, integer=True)
    return Report(meta, columns, rows, precision)


def cmd_manybody_rate(cfg: RunConfig, state_path: Path, workers: int, strict: bool) -> Report:
    _scan_type(cfg, "cone")
    medium = parse_medium(cfg)
    omega_ev = cfg.number("scan", "omega_ev")
    try:
        state = load_manybody_state(state_path)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"state file: {exc}") from exc
    grid = phi_grid(cfg)

    diagnostics = validate_assumptions(state, medium, omega_ev)
    _check_strict(diagnostics, strict)

    rows = []
    for phi in grid:
        point = cone_point(medium, omega_ev, phi)
        rows.append([float(phi), manybody_rate(state, medium, point)])

    meta = _base_meta("manybody-rate", cfg)
    meta.update(_reference_meta(medium, omega_ev))
    meta["n_particles"] = state.n_particles
    meta["assumptions"] = diagnostics.summary()
    precision = cfg.number("output", "precision", 9, integer=True)
    return Report(meta, columns=["phi_rad", "braces"], rows=rows, precision=precision)


def cmd_oracle_check(cfg: RunConfig) -> tuple[Report, bool]:
    """Analytic vs quadrature comparison; returns (report, passed)."""
    envelope = parse_envelope(cfg)
    samples = cfg.number("oracle", "samples", 100, integer=True)
    seed = cfg.number("oracle", "seed", 20240925, integer=True)
    nodes = cfg.number("oracle", "nodes", 96, integer=True)
    span = cfg.number("oracle", "span_sigmas", 8.0)
    tolerance = cfg.number("oracle", "tolerance", 1e-6)

    rng = np.random.default_rng(seed)
    sigma = np.array(envelope.sigma)
    rows = []
    worst = 0.0

    def record(kind: str, q, analytic: complex, numeric: complex):
        nonlocal worst
        rel = abs(analytic - numeric) / abs(analytic)
        worst = max(worst, rel)
        rows.append([
            kind, q[0], q[1], q[2],
            analytic.real, analytic.imag, numeric.real, numeric.imag, rel,
        ])

    for _ in range(samples):
        q = rng.uniform(-5.0, 5.0, size=3) / sigma
        analytic = density_ft(envelope, q)
        numeric = quadrature_density_ft(envelope, q, nodes=nodes, span_sigmas=span)
        record("density", q, analytic, numeric)

    for _ in range(samples):
        q = rng.uniform(-2.5, 2.5, size=3) / sigma
        dk = rng.uniform(-2.5, 2.5, size=3) / sigma
        offset = rng.uniform(-1.0, 1.0, size=3) * sigma
        env_b = GaussianEnvelope(
            envelope.sigma, tuple(np.array(envelope.center) + offset)
        )
        mode_a = ModeWave(envelope, tuple(0.5 * dk), "up")
        mode_b = ModeWave(env_b, tuple(-0.5 * dk), "down")
        analytic = overlap_ft(mode_a, mode_b, q)
        numeric = quadrature_overlap_ft(mode_a, mode_b, q, nodes=nodes, span_sigmas=span)
        record("overlap", q, analytic, numeric)

    meta = _base_meta("oracle-check", cfg)
    meta["samples"] = samples
    meta["tolerance"] = float(tolerance)
    meta["max_rel_err"] = worst
    meta["status"] = "pass" if worst <= tolerance else "fail"
    columns = [
        "check", "qx", "qy", "qz",
        "analytic_re", "analytic_im", "numeric_re", "numeric_im", "rel_err",
    ]
    precision = cfg.number("output", "precision", 9, integer=True)
    return Report(meta, columns, rows, precision), worst <= tolerance


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _resolve_workers(args) -> int:
    if args.threads is not None:
        value = args.threads
    else:
        raw = os.environ.get("QSUBRAD_THREADS", "1")
        try:
            value = int(raw)
        except ValueError as exc:
            raise ConfigError(f"QSUBRAD_THREADS: not an integer: {raw!r}") from exc
    if value < 1:
        raise ConfigError(f"threads must be >= 1, got {value}")
    return value


def _write(report: Report, fmt: str, out: Path | None) -> None:
    text = report.to_json() if fmt == "json" else report.to_csv()
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsubrad",
        description="Cherenkov emission rates for correlated electron pairs "
        "and small ensembles",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "cone-scan": "brace factor along the cone azimuth at fixed energy",
        "spectrum-scan": "brace factor across photon energies at fixed azimuth",
        "pair-compare": "product vs Bell pair built from the same modes",
        "manybody-rate": "N-particle brace factor from a state file",
        "oracle-check": "analytic vs quadrature transforms on random q",
    }
    for name, help_text in commands.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, type=Path)
        p.add_argument("--out", type=Path, default=None)
        p.add_argument("--format", choices=("csv", "json"), default=None)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--strict", action="store_true",
                       help="treat validity warnings as errors")
        if name == "manybody-rate":
            p.add_argument("--state", required=True, type=Path)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        workers = _resolve_workers(args)
        cfg = RunConfig(args.config)
        fmt = args.format or cfg.raw("output", "format", "csv")
        if fmt not in ("csv", "json"):
            raise _fail("output", "format", f"must be csv or json, got {fmt!r}")
        if args.command == "oracle-check":
            report, passed = cmd_oracle_check(cfg)
            _write(report, fmt, args.out)
            if not passed:
                print("oracle-check failed tolerance", file=sys.stderr)
                return 4
            return 0
        if args.command == "cone-scan":
            report = cmd_cone_scan(cfg, workers, args.strict)
        elif args.command == "spectrum-scan":
            report = cmd_spectrum_scan(cfg, workers, args.strict)
        elif args.command == "pair-compare":
            report = cmd_pair_compare(cfg, workers, args.strict)
        else:
            report = cmd_manybody_rate(cfg, args.state, workers, args.strict)
        _write(report, fmt, args.out)
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (QsubradError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
