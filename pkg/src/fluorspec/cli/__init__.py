"""Command-line front end."""

from fluorspec.storage import emit_csv

from .config import ConfigLoader, load_config

__all__ = ["ConfigLoader", "emit_csv", "load_config"]
