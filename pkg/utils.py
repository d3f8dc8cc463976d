"""
Utility functions for the ladder algebra toolkit
"""
import os
import logging
import hashlib
import time
from typing import Any, Optional
import json

logger = logging.getLogger(__name__)


def hash_string(text: str) -> str:
    """
    Create a hash of a string

    Args:
        text: Text to hash

    Returns:
        Hex digest of hash
    """
    return hashlib.sha256(text.encode()).hexdigest()


def derive_seed(seed: int, suite: str, trial: int) -> int:
    """
    Split a master seed into an independent per-trial seed

    The trial seed depends only on (seed, suite, trial), so trials can run
    in any order or in any worker.
    """
    return int(hash_string(f"{seed}:{suite}:{trial}")[:16], 16)


def truncate_string(text: str, max_length: int = 100, suffix: str = '...') -> str:
    """
    Truncate a string to a maximum length

    Args:
        text: Text to truncate
        max_length: Maximum length
        suffix: Suffix to add if truncated

    Returns:
        Truncated string
    """
    if len(text) <= max_length:
        return text
    return text[:max_length - len(suffix)] + suffix


def env_int(name: str, default: Optional[int] = None) -> Optional[int]:
    """Integer environment setting, or default when unset or blank"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got '{raw}'")


def append_jsonl(record: Any, filepath: str) -> None:
    """Append one compact JSON object as a line"""
    ensure_dir(os.path.dirname(filepath))
    with open(filepath, 'a') as f:
        f.write(json.dumps(record, sort_keys=True, separators=(',', ':')) + '\n')
    logger.debug(f"Report line appended to: {filepath}")


def ensure_dir(directory: str) -> None:
    """
    Ensure directory exists

    Args:
        directory: Directory path (empty means the working directory)
    """
    if directory:
        os.makedirs(directory, exist_ok=True)


class Timer:
    """Context manager for timing operations"""

    def __init__(self, name: str = "Operation", quiet: bool = False):
        self.name = name
        self.quiet = quiet
        self.start_time = None
        self.elapsed_ms = 0

    def __enter__(self):
        self.start_time = time.perf_counter()
        if not self.quiet:
            logger.info(f"{self.name} started")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed_ms = int((time.perf_counter() - self.start_time) * 1000)
        if not self.quiet:
            logger.info(f"{self.name} completed in {self.elapsed_ms / 1000:.2f}s")
