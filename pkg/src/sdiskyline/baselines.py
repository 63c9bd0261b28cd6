"""Reference skyline algorithms: BNL, SFS, SaLSa and the all-pairs oracle.

All of them test dominance on the oriented (smaller-is-better) raw values;
normalised values are only ever used to build sort keys.
"""

from __future__ import annotations

import numpy as np

from .core import Dataset, SkylineResult, StructuralError, dominated_mask, first_dominator
from .report import RunReport, now_us

ORACLE_MAX_N = 10_000


class OracleBoundError(ValueError):
    pass


class InvariantError(AssertionError):
    pass


class Window:
    """In-memory BNL window of mutually non-dominating candidates.

    Pinned members are known skyline tuples: nothing can dominate them, so the
    reverse test against them is never made.
    """

    def __init__(self, d: int, capacity: int = 64):
        self._vals = np.empty((capacity, d))
        self._ids = np.empty(capacity, dtype=np.int64)
        self._pinned = np.zeros(capacity, dtype=bool)
        self.size = 0

    @property
    def values(self) -> np.ndarray:
        return self._vals[:self.size]

    @property
    def ids(self) -> list[int]:
        return self._ids[:self.size].tolist()

    def __len__(self) -> int:
        return self.size

    def push(self, tid: int, v: np.ndarray, pinned: bool = False) -> None:
        if self.size == len(self._ids):
            cap = 2 * len(self._ids)
            self._vals = np.resize(self._vals, (cap, self._vals.shape[1]))
            self._ids = np.resize(self._ids, cap)
            self._pinned = np.resize(self._pinned, cap)
        self._vals[self.size] = v
        self._ids[self.size] = tid
        self._pinned[self.size] = pinned
        self.size += 1

    def first_dominator(self, v: np.ndarray) -> tuple[int, int]:
        return first_dominator(self.values, v)

    def offer(self, tid: int, v: np.ndarray) -> tuple[bool, int]:
        """One BNL step; returns ``(inserted, comparisons)``.

        Per member, in order: does it dominate ``v`` (stop if so), then, for
        unpinned members, does ``v`` dominate it (evict if so).
        """
        pos, _ = first_dominator(self.values, v)
        pinned = self._pinned[:self.size]
        if pos >= 0:
            # no eviction can precede a dominator: that would make two
            # window members comparable
            return False, pos + 1 + int((~pinned[:pos]).sum())
        comparisons = self.size + int((~pinned).sum())
        evict = dominated_mask(v, self.values) & ~pinned
        if evict.any():
            keep = np.flatnonzero(~evict)
            k = len(keep)
            self._vals[:k] = self._vals[keep]
            self._ids[:k] = self._ids[keep]
            self._pinned[:k] = self._pinned[keep]
            self.size = k
        self.push(tid, v)
        return True, comparisons

    def check_incomparable(self) -> None:
        vals = self.values
        for i in range(self.size):
            if dominated_mask(vals[i], vals).any():
                raise InvariantError(f"window member {self._ids[i]} dominates another member")


def normalized(data: Dataset) -> np.ndarray:
    """Oriented values min-max scaled per dimension into [0, 1]; 0 is best."""
    o = data.oriented
    lo, hi = o.min(axis=0), o.max(axis=0)
    span = np.where(hi > lo, hi - lo, 1.0)
    return (o - lo) / span


def _presort(data: Dataset, *keys: np.ndarray) -> np.ndarray:
    # Oriented values break key ties lexicographically, so a dominator always
    # sorts before what it dominates even when float keys collide.
    o = data.oriented
    cols = [np.arange(data.n)] + [o[:, j] for j in reversed(range(data.d))]
    return np.lexsort(cols + list(reversed(keys)))


def entropy_key(data: Dataset) -> np.ndarray:
    return np.log1p(normalized(data)).sum(axis=1)


SFS_KEYS = ("entropy", "sum")
SALSA_KEYS = ("min", "sum")


def sfs_order(data: Dataset, key: str = "entropy") -> np.ndarray:
    if key not in SFS_KEYS:
        raise StructuralError(f"unknown SFS key {key!r}")
    k = entropy_key(data) if key == "entropy" else normalized(data).sum(axis=1)
    return _presort(data, k)


def salsa_order(data: Dataset, key: str = "min") -> np.ndarray:
    if key not in SALSA_KEYS:
        raise StructuralError(f"unknown SaLSa key {key!r}")
    norm = normalized(data)
    mins, sums = norm.min(axis=1), norm.sum(axis=1)
    return _presort(data, *((mins, sums) if key == "min" else (sums, mins)))


def _report(name: str, data: Dataset, result: SkylineResult, comparisons: int,
            t_start: int, t_search: int, t_end: int, early: bool = False) -> RunReport:
    return RunReport(
        algorithm=name,
        n=data.n,
        d=data.d,
        skyline_size=result.size,
        dominance_comparisons=comparisons,
        search_time_us=t_end - t_search,
        total_time_us=t_end - t_start,
        early_stop=early,
    )


def run_bnl(data: Dataset, *, check_invariants: bool = False) -> tuple[SkylineResult, RunReport]:
    t_start = now_us()
    vals = data.oriented
    t_search = now_us()
    window = Window(data.d)
    comparisons = 0
    for i in range(data.n):
        inserted, c = window.offer(i, vals[i])
        comparisons += c
        if check_invariants and inserted:
            window.check_incomparable()
    ids = window.ids
    t_end = now_us()
    result = SkylineResult(frozenset(ids), tuple(ids))
    return result, _report("bnl", data, result, comparisons, t_start, t_search, t_end)


def run_sfs(data: Dataset, *, key: str = "entropy") -> tuple[SkylineResult, RunReport]:
    """Presort by a monotone key, then one filtering pass without evictions."""
    t_start = now_us()
    order = sfs_order(data, key)
    vals = data.oriented
    t_search = now_us()
    window = Window(data.d)
    comparisons = 0
    for i in order:
        pos, c = window.first_dominator(vals[i])
        comparisons += c
        if pos < 0:
            window.push(int(i), vals[i])
    ids = window.ids
    t_end = now_us()
    result = SkylineResult(frozenset(ids), tuple(ids))
    return result, _report("sfs", data, result, comparisons, t_start, t_search, t_end)


def run_salsa(data: Dataset, *, use_stop_point: bool = True,
              key: str = "min") -> tuple[SkylineResult, RunReport]:
    """Presort by minimum coordinate and stop once the stop point beats every unread tuple.

    The stop point is the skyline tuple with the smallest maximum coordinate.
    The test is strict, so the stop point strictly beats every unread tuple on
    every dimension and exact duplicates are never cut off. Under the ``sum``
    key unread tuples are not ordered by their minimum, so the stop point only
    prunes tuples one by one.
    """
    t_start = now_us()
    norm = normalized(data)
    mins, maxs = norm.min(axis=1), norm.max(axis=1)
    order = salsa_order(data, key)
    vals = data.oriented
    t_search = now_us()
    window = Window(data.d)
    comparisons = 0
    stop_max = np.inf
    early = False
    for i in order:
        if use_stop_point and stop_max < mins[i]:
            if key != "min":
                continue
            early = True
            break
        pos, c = window.first_dominator(vals[i])
        comparisons += c
        if pos < 0:
            window.push(int(i), vals[i])
            stop_max = min(stop_max, maxs[i])
    ids = window.ids
    t_end = now_us()
    result = SkylineResult(frozenset(ids), tuple(ids))
    return result, _report("salsa", data, result, comparisons, t_start, t_search, t_end, early)


def run_oracle(data: Dataset, max_n: int = ORACLE_MAX_N) -> SkylineResult:
    """Skyline by testing every tuple against every other tuple."""
    if data.n > max_n:
        raise OracleBoundError(
            f"oracle refuses n={data.n}: all-pairs check is bounded to n <= {max_n}"
        )
    v = data.oriented
    members = []
    for i in range(data.n):
        beaten = (v <= v[i]).all(axis=1) & (v < v[i]).any(axis=1)
        if not beaten.any():
            members.append(i)
    return SkylineResult(frozenset(members), tuple(members))
