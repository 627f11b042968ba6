"""Parsed view of a qsubrad scan CSV: metadata comments plus numeric columns."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class ScanTableError(Exception):
    """Malformed or incomplete scan CSV."""


@dataclass(frozen=True)
class ScanTable:
    """Metadata key/value pairs and named numeric columns of one CSV."""

    meta: dict[str, str]
    names: tuple[str, ...]
    columns: dict[str, np.ndarray]

    def require(self, *names: str) -> None:
        for name in names:
            if name not in self.columns:
                raise ScanTableError(f"missing required column: {name}")

    def monotone(self, name: str) -> None:
        values = self.columns[name]
        if np.any(np.diff(values) <= 0.0):
            raise ScanTableError(f"column {name} must be strictly increasing")

    @property
    def zeta_names(self) -> list[str]:
        return [n for n in self.names if n.startswith("braces_zeta")]

    def rows_where(self, mask: np.ndarray) -> "ScanTable":
        kept = {name: col[mask] for name, col in self.columns.items()}
        return ScanTable(self.meta, self.names, kept)


def load_scan_table(path) -> ScanTable:
    """Parse '#key=value' comment lines, the header row, and numeric rows."""
    path = Path(path)
    meta: dict[str, str] = {}
    names: tuple[str, ...] | None = None
    rows: list[list[float]] = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
            continue
        if names is None:
            names = tuple(line.split(","))
            continue
        cells = line.split(",")
        if len(cells) != len(names):
            raise ScanTableError(f"{path}:{lineno}: expected {len(names)} cells")
        try:
            rows.append([float(v) for v in cells])
        except ValueError as exc:
            raise ScanTableError(f"{path}:{lineno}: non-numeric cell: {exc}") from exc
    if names is None:
        raise ScanTableError(f"{path}: no header row")
    if not rows:
        raise ScanTableError(f"{path}: no data rows")
    data = np.array(rows)
    columns = {name: data[:, i] for i, name in enumerate(names)}
    return ScanTable(meta=meta, names=names, columns=columns)


def warn_on_version_mismatch(table: ScanTable, expected: str) -> bool:
    """Emit a stderr warning when the CSV was written by a different CLI
    version; returns True when a warning was printed."""
    found = table.meta.get("version")
    if found != expected:
        print(
            f"warning: CSV version {found!r} does not match the expected "
            f"generator version {expected!r}",
            file=sys.stderr,
        )
        return True
    return False
