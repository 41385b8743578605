"""Output-directory resolution."""

import os
from pathlib import Path
from typing import Optional, Union

OUTPUT_DIR_ENV = "FLUORSPEC_OUTPUT_DIR"


def get_output_dir(
    flag: Optional[Union[str, Path]] = None,
    configured: Union[str, Path] = "fluorspec-output",
) -> Path:
    """Pick the output directory: ``--out`` flag, then env, then config."""
    if flag:
        return Path(flag)
    env_dir = os.getenv(OUTPUT_DIR_ENV)
    if env_dir:
        return Path(env_dir)
    return Path(configured)


def init_output_dir(path: Path) -> Path:
    """Create ``path`` (and parents) if needed."""
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OSError(f"cannot create output directory {path}: {e}") from e
    return path
