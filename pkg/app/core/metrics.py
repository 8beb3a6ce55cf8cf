"""In-process timing and counter collection for verification runs."""

import threading
import time
from contextlib import contextmanager
from typing import Iterator


class MetricsCollector:
    """
    Simple in-memory metrics collector.

    Tracks:
    - stage durations (seconds, accumulated per stage name)
    - counters (e.g. covers checked, sections counted)

    Durations never enter digest-covered report sections.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._durations: dict[str, float] = {}
        self._counters: dict[str, int] = {}

    @contextmanager
    def timed(self, stage: str) -> Iterator[None]:
        """Accumulate wall-clock time spent inside the block under `stage`."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            with self._lock:
                self._durations[stage] = self._durations.get(stage, 0.0) + elapsed

    def increment(self, name: str, amount: int = 1) -> None:
        """Increment a named counter."""
        with self._lock:
            self._counters[name] = self._counters.get(name, 0) + amount

    def snapshot(self) -> dict[str, dict[str, float]]:
        """Copy of current durations (rounded to ms) and counters."""
        with self._lock:
            return {
                "durations_s": {k: round(v, 3) for k, v in sorted(self._durations.items())},
                "counters": dict(sorted(self._counters.items())),
            }

    def reset(self) -> None:
        with self._lock:
            self._durations.clear()
            self._counters.clear()


metrics_collector = MetricsCollector()
