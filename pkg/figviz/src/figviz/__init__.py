"""Renderers that turn qsubrad scan CSVs into figure-regression images.

These scripts never recompute physics: the CSV is the single source of
truth, and rendering is a pure function of its contents.
"""

__version__ = "0.1.0"

# CLI version the CSV metadata is expected to carry; mismatches warn.
EXPECTED_GENERATOR_VERSION = "0.1.0"

from .scantable import ScanTable, ScanTableError, load_scan_table
from .render import render_cone, render_spectrum

__all__ = [
    "EXPECTED_GENERATOR_VERSION",
    "ScanTable",
    "ScanTableError",
    "load_scan_table",
    "render_cone",
    "render_spectrum",
]
