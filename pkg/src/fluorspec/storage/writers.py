"""Deterministic CSV and report writers.

CSV layout: header ``nu,S`` then one row per grid point, nu ascending,
UTF-8 with LF line endings. Numbers use the shortest round-trip decimal
form, ``0`` for exact zero and ``nan`` for points the solver skipped.
"""

import json
import logging
import math
from pathlib import Path
from typing import Union

from fluorspec.schemas import RunReport
from fluorspec.spectrum.result import SpectrumResult

logger = logging.getLogger(__name__)

CSV_HEADER = "nu,S"


def format_number(value: float) -> str:
    """Shortest round-trip decimal, with ``0`` and ``nan`` spelled out."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if value == 0:
        return "0"
    return repr(value)


def _write_text(path: Path, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror or e}") from e


def emit_csv(result: SpectrumResult, path: Union[str, Path]) -> None:
    """Write ``result`` as a two-column spectrum file.

    Args:
        result: Spectrum to write
        path: Target file, overwritten if present

    Raises:
        OSError: If the file cannot be written; the message names the path
    """
    path = Path(path)
    lines = [CSV_HEADER]
    for nu, value in zip(result.nu, result.values):
        lines.append(f"{format_number(nu)},{format_number(value)}")
    _write_text(path, "\n".join(lines) + "\n")
    logger.debug("Wrote %d rows to %s", len(lines) - 1, path)


def write_report(report: RunReport, path: Union[str, Path]) -> None:
    """Serialize ``report`` with the ``pass`` aliases, two-space indented."""
    path = Path(path)
    payload = report.model_dump(mode="json", by_alias=True)
    _write_text(path, json.dumps(payload, indent=2) + "\n")
    logger.debug("Wrote report to %s", path)
