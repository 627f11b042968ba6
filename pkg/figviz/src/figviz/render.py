"""Deterministic figure rendering from scan CSVs.

Both renderers return the matplotlib Figure so callers (and tests) can
read the plotted data arrays back off the axes; the saved image is a pure
function of the CSV contents given pinned renderer versions.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from . import EXPECTED_GENERATOR_VERSION
from .scantable import ScanTable, load_scan_table, warn_on_version_mismatch

_STYLES = ("--", ":", "-.", (0, (3, 1, 1, 1)))
_DPI = 150


def _zeta_styles(names):
    return {name: _STYLES[i % len(_STYLES)] for i, name in enumerate(names)}


def render_cone(csv_path, out_path):
    """Polar plot of the normalized rate versus cone azimuth.

    One dashed/dotted curve per braces_zeta* column plus the solid
    classical reference; legend labels are the column names.
    """
    table = load_scan_table(csv_path)
    warn_on_version_mismatch(table, EXPECTED_GENERATOR_VERSION)
    table.require("phi_rad", "braces_classical")
    table.monotone("phi_rad")

    fig = plt.figure(figsize=(6.0, 6.0))
    ax = fig.add_subplot(projection="polar")
    phi = table.columns["phi_rad"]
    ax.plot(phi, table.columns["braces_classical"], "-", color="tab:red",
            label="braces_classical")
    for name, style in _zeta_styles(table.zeta_names).items():
        ax.plot(phi, table.columns[name], linestyle=style, label=name)
    ax.set_title(r"$\Gamma/\Gamma_0$ vs $\varphi$ (rad)")
    ax.legend(loc="lower left", bbox_to_anchor=(1.0, 0.0), fontsize="small")
    fig.savefig(Path(out_path), dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return fig


def render_spectrum(csv_path, out_path):
    """Line plot of the normalized rate versus omega / omega_0.

    Rows flagged forbidden are dropped before plotting.
    """
    table = load_scan_table(csv_path)
    warn_on_version_mismatch(table, EXPECTED_GENERATOR_VERSION)
    table.require("omega_over_omega0", "braces_classical")
    table.monotone("omega_over_omega0")
    if "forbidden" in table.columns:
        table = table.rows_where(table.columns["forbidden"] == 0.0)

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    x = table.columns["omega_over_omega0"]
    ax.plot(x, table.columns["braces_classical"], "-", color="tab:red",
            label="braces_classical")
    for name, style in _zeta_styles(table.zeta_names).items():
        ax.plot(x, table.columns[name], linestyle=style, label=name)
    ax.set_xlabel(r"$\omega/\omega_0$")
    ax.set_ylabel(r"$\Gamma/\Gamma_0$")
    ax.legend(fontsize="small")
    ax.grid(alpha=0.3)
    fig.savefig(Path(out_path), dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return fig


def line_by_label(fig, label: str):
    """Plotted (xdata, ydata) arrays of the curve with the given label."""
    for ax in fig.axes:
        for line in ax.get_lines():
            if line.get_label() == label:
                return np.asarray(line.get_xdata()), np.asarray(line.get_ydata())
    raise KeyError(f"no line labeled {label!r}")
