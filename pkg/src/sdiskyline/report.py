from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

REPORT_COLUMNS = (
    "algorithm",
    "strategy",
    "n",
    "d",
    "distribution",
    "seed",
    "skyline_size",
    "dominance_comparisons",
    "search_time_ms",
    "total_time_ms",
    "stop_line_updates",
    "early_stop",
)
TIME_COLUMNS = ("search_time_ms", "total_time_ms")


def now_us() -> int:
    return time.perf_counter_ns() // 1000


@dataclass(frozen=True)
class RunReport:
    """Metrics of one algorithm run.

    ``search_time_us`` covers comparisons and data access only; ``total_time_us``
    also covers index/sort construction, plus loading when set by the harness.
    """

    algorithm: str
    n: int
    d: int
    skyline_size: int
    dominance_comparisons: int
    search_time_us: int
    total_time_us: int
    strategy: str = ""
    stop_line_updates: Optional[int] = None
    early_stop: bool = False
    distribution: str = ""
    seed: Optional[int] = None

    def __post_init__(self):
        if self.search_time_us > self.total_time_us:
            raise ValueError("search time exceeds total time")

    @property
    def search_time_ms(self) -> float:
        return self.search_time_us / 1000.0

    @property
    def total_time_ms(self) -> float:
        return self.total_time_us / 1000.0

    def row(self) -> dict[str, str]:
        return {
            "algorithm": self.algorithm,
            "strategy": self.strategy,
            "n": str(self.n),
            "d": str(self.d),
            "distribution": self.distribution,
            "seed": "" if self.seed is None else str(self.seed),
            "skyline_size": str(self.skyline_size),
            "dominance_comparisons": str(self.dominance_comparisons),
            "search_time_ms": f"{self.search_time_ms:.3f}",
            "total_time_ms": f"{self.total_time_ms:.3f}",
            "stop_line_updates": "NA" if self.stop_line_updates is None else str(self.stop_line_updates),
            "early_stop": "true" if self.early_stop else "false",
        }

    def label(self) -> str:
        return f"{self.algorithm}-{self.strategy}" if self.strategy else self.algorithm

