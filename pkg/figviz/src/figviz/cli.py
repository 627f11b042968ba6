"""Entry points: render-cone IN.csv OUT.png, render-spectrum IN.csv OUT.png."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import render_cone, render_spectrum
from .scantable import ScanTableError


def _run(render, kind: str, argv) -> int:
    parser = argparse.ArgumentParser(
        prog=f"render-{kind}",
        description=f"Render a qsubrad {kind}-scan CSV into an image.",
    )
    parser.add_argument("csv", type=Path, help="input scan CSV")
    parser.add_argument("image", type=Path, help="output image path")
    args = parser.parse_args(argv)
    try:
        render(args.csv, args.image)
    except (ScanTableError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main_cone(argv=None) -> int:
    return _run(render_cone, "cone", argv)


def main_spectrum(argv=None) -> int:
    return _run(render_spectrum, "spectrum", argv)


if __name__ == "__main__":
    raise SystemExit(main_cone())
