"""File outputs: spectra, reports and where they go."""

from .paths import OUTPUT_DIR_ENV, get_output_dir, init_output_dir
from .writers import CSV_HEADER, emit_csv, format_number, write_report

__all__ = [
    "CSV_HEADER",
    "OUTPUT_DIR_ENV",
    "emit_csv",
    "format_number",
    "get_output_dir",
    "init_output_dir",
    "write_report",
]
