"""
File I/O utility functions.
"""

from pathlib import Path
from typing import Any

import pandas as pd
from loguru import logger

from .json_utils import dumps


def save_json_data(data: Any, filepath: str) -> None:
    """Save data to JSON file."""
    ensure_directory(str(Path(filepath).parent))
    Path(filepath).write_text(dumps(data) + "\n", encoding="utf-8")
    logger.info(f"Data saved to {filepath}")


def save_csv_data(frame: pd.DataFrame, filepath: str) -> None:
    """Save a table to CSV file."""
    if frame.empty:
        logger.warning("No data to save to CSV")
        return
    ensure_directory(str(Path(filepath).parent))
    frame.to_csv(filepath, index=False)
    logger.info(f"Data saved to {filepath}")


def ensure_directory(path: str) -> None:
    """Ensure directory exists."""
    Path(path).mkdir(parents=True, exist_ok=True)
