"""Bundled reference configs for the CLI and the acceptance suite."""

from importlib import resources
from pathlib import Path


def bundled_config(name: str) -> Path:
    """Filesystem path of a bundled config such as 'fig2c.cfg'."""
    path = resources.files(__name__).joinpath(name)
    return Path(str(path))
