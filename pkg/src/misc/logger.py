"""
Logging setup and progress reporting for long scans.

SmoothedValue keeps a windowed series; ProgressLogger.log_every wraps a corpus
and reports position, eta and per-item meters through loguru.
"""

import datetime
import statistics
import sys
import time
from collections import deque
from typing import Dict, Iterable, Iterator, Optional, Sized, TypeVar

from loguru import logger

__all__ = ["setup_logger", "SmoothedValue", "ProgressLogger"]

T = TypeVar("T")

_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}"


def setup_logger(level: str = "INFO") -> None:
    """Replace loguru's default sink with one stderr sink at `level`."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=_FORMAT)


class SmoothedValue(object):
    """Windowed series with a running total, e.g. seconds per composition."""

    def __init__(self, window: int = 20, fmt: str = "{median:.3f}") -> None:
        self.recent = deque(maxlen=window)
        self.total = 0.0
        self.count = 0
        self.fmt = fmt

    def update(self, value: float) -> None:
        self.recent.append(value)
        self.total += value
        self.count += 1

    @property
    def median(self) -> float:
        return statistics.median(self.recent) if self.recent else 0.0

    @property
    def mean(self) -> float:
        return self.total / self.count if self.count else 0.0

    def __str__(self) -> str:
        return self.fmt.format(median=self.median, mean=self.mean, total=self.total)


class ProgressLogger(object):
    """Counts per-item results of a scan and logs them alongside its position."""

    def __init__(self) -> None:
        self.meters: Dict[str, SmoothedValue] = {}

    def update(self, **counts: int) -> None:
        for name, value in counts.items():
            if not isinstance(value, int):
                raise TypeError(f"meter {name} expects an int, got {type(value).__name__}")
            self.meters.setdefault(name, SmoothedValue(fmt="{total:.0f}")).update(value)

    def __str__(self) -> str:
        return "  ".join(f"{name}: {meter}" for name, meter in self.meters.items())

    def log_every(self, items: Iterable[T], print_freq: int, header: str = "") -> Iterator[T]:
        """Yield from `items`, logging every `print_freq` items and at the last one."""
        total: Optional[int] = len(items) if isinstance(items, Sized) else None
        seconds = SmoothedValue()
        started = time.perf_counter()

        done = 0
        for item in items:
            tick = time.perf_counter()
            yield item
            seconds.update(time.perf_counter() - tick)
            done += 1
            if print_freq <= 0 or (done % print_freq and done != total):
                continue
            position = f"[{done}]" if total is None else f"[{done}/{total}]"
            line = f"{header} {position}"
            if total is not None:
                eta = datetime.timedelta(seconds=int(seconds.mean * (total - done)))
                line += f"  eta: {eta}"
            if self.meters:
                line += f"  {self}"
            logger.info(f"{line}  s/item: {seconds}")

        elapsed = datetime.timedelta(seconds=int(time.perf_counter() - started))
        logger.info(f"{header} done: {done} items in {elapsed}")
