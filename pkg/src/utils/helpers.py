"""
Filename: helpers.py
Created Date: 2026-10-18
Description: Helper functions module.

This module contains utility functions used throughout the application,
such as wall-clock timing of long computations and duration formatting.
"""

import time
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Iterator


class Stopwatch:
    """Elapsed wall-clock seconds of a block"""

    def __init__(self):
        self.started = time.perf_counter()
        self.stopped = None

    @property
    def elapsed(self) -> float:
        end = self.stopped if self.stopped is not None else time.perf_counter()
        return end - self.started

    def stop(self) -> float:
        self.stopped = time.perf_counter()
        return self.elapsed


@contextmanager
def timed() -> Iterator[Stopwatch]:
    """Context manager yielding a Stopwatch that stops on exit"""
    watch = Stopwatch()
    try:
        yield watch
    finally:
        watch.stop()


def format_duration(seconds: float) -> str:
    """Format seconds to a human readable string"""
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60:
        return f"{seconds:.2f} s"
    minutes, rest = divmod(seconds, 60)
    return f"{int(minutes)} min {rest:.0f} s"


def utc_timestamp() -> str:
    """Current UTC time in ISO 8601 form, second precision"""
    return datetime.now(timezone.utc).replace(microsecond=0).isoformat()
