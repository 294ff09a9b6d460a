"""
Utility functions for the verification engine.
"""

import logging
import os
from pathlib import Path
from typing import Callable

from .config import Config


def create_progress_callback(progress_bar, status_text) -> Callable:
    """Create a progress callback function for Streamlit."""
    def callback(progress: float, status: str):
        progress_bar.progress(min(max(progress, 0.0), 1.0))
        status_text.text(status)

    return callback


def console_progress(progress: float, status: str) -> None:
    """Progress callback for the command line."""
    print(f"⏳ [{int(progress * 100):3d}%] {status}")


def configure_logging(verbose: bool = False) -> None:
    """Route library logging to stderr; INFO with verbose, WARNING otherwise."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def atomic_write_text(path: str, text: str) -> None:
    """Write to a temporary sibling, then os.replace it onto path."""
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    tmp = target.with_name(target.name + ".tmp")
    with tmp.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
        handle.flush()
        os.fsync(handle.fileno())
    os.replace(str(tmp), str(target))


def default_output_path(task: str, extension: str) -> str:
    return f"{Config.OUTPUT_FILENAME_PREFIX}_{task}.{extension}"
