"""Range-search skyline computation over dimensional indexes.

Blocks of each index are traversed best-first. A block's local skyline is
found by BNL; each new candidate is then checked only against the skyline
tuples already met in *earlier* blocks of the same index, which is enough to
decide membership. The best stop line found so far ends the run as soon as
every index has been traversed past the stop line's block.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .baselines import InvariantError, Window
from .core import ComparisonCounter, Dataset, SkylineResult, first_dominator
from .index import IndexEntry, IndexSet, build_index_set
from .report import RunReport, now_us

TraceSink = Callable[[dict], None]


class TupleStatus(enum.IntEnum):
    UNSEEN = 0
    DOMINATED = 1
    SKYLINE = 2


class Switching(str, enum.Enum):
    BFS = "bfs"
    DFS = "dfs"


@dataclass(frozen=True)
class StopLine:
    owner: int
    block_offsets: tuple[int, ...]

    @classmethod
    def build(cls, owner: int, indexes: IndexSet) -> "StopLine":
        return cls(owner, tuple(int(ix.block_of[owner]) for ix in indexes.indexes))

    @property
    def quality(self) -> tuple[int, float]:
        """``(max block offset, mean block offset)``; smaller is better."""
        return max(self.block_offsets), sum(self.block_offsets) / len(self.block_offsets)

    def key(self) -> tuple[int, int]:
        # same ordering as quality, compared on exact integers
        return max(self.block_offsets), sum(self.block_offsets)


class _RangeList:
    """S_i: skyline tuples whose block in one index has been traversed."""

    def __init__(self, d: int):
        self.ids: list[int] = []
        self.members: set[int] = set()
        self._vals = np.empty((16, d))

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, t: int) -> bool:
        return t in self.members

    def values(self, limit: int) -> np.ndarray:
        return self._vals[:limit]

    def append(self, t: int, v: np.ndarray) -> None:
        k = len(self.ids)
        if k == len(self._vals):
            self._vals = np.resize(self._vals, (2 * k, self._vals.shape[1]))
        self._vals[k] = v
        self.ids.append(t)
        self.members.add(t)


class SkylineState:
    """Mutable state of one range-search run."""

    def __init__(self, data: Dataset, indexes: IndexSet, *, check_invariants: bool = False,
                 trace: Optional[TraceSink] = None):
        self.values = data.oriented
        self.indexes = indexes
        self.n, self.d = data.n, data.d
        self.status = bytearray(data.n)
        self.skyline: list[int] = []
        self.per_dimension = [_RangeList(data.d) for _ in range(data.d)]
        self.cursors = np.zeros(data.d, dtype=np.int64)
        # length of S_i when the current block of index i was opened
        self.range_len = [0] * data.d
        self.counter = ComparisonCounter()
        self.stop_line: Optional[StopLine] = None
        self.stop_line_updates = 0
        self.check_invariants = check_invariants
        self.trace = trace

    def emit(self, event: str, dim: int, block: int, tuple_id: Optional[int] = None) -> None:
        if self.trace is not None:
            self.trace({"event": event, "dim": int(dim), "block": int(block),
                        "tuple": None if tuple_id is None else int(tuple_id)})

    def mark(self, t: int, status: TupleStatus) -> None:
        if self.status[t] != TupleStatus.UNSEEN:
            raise InvariantError(
                f"tuple {t} already {TupleStatus(self.status[t]).name}, cannot mark {status.name}"
            )
        self.status[t] = status

    def open_block(self, dim: int) -> Optional[list[int]]:
        """Fetch the block under the cursor of index ``dim`` and advance it."""
        index = self.indexes[dim]
        k = int(self.cursors[dim])
        if k >= index.distinct_count:
            return None
        self.cursors[dim] = k + 1
        self.range_len[dim] = len(self.per_dimension[dim])
        return index.block_ids(k).tolist()

    def result(self) -> SkylineResult:
        return SkylineResult(frozenset(self.skyline), tuple(self.skyline))


def _ids(block: Iterable) -> list[int]:
    return [e.tuple_id if isinstance(e, IndexEntry) else int(e) for e in block]


def block_skyline(block: Iterable, state: SkylineState) -> list[int]:
    """BNL skyline of the block members not already known to be dominated.

    Known skyline tuples stay in (they may beat newcomers) but are never
    compared with each other. Returned in index order.
    """
    ids = _ids(block)
    status = state.status
    survivors = [t for t in ids if status[t] != TupleStatus.DOMINATED]
    if len(survivors) <= 1:
        return survivors
    vals = state.values
    window = Window(state.d, capacity=len(survivors))
    for t in survivors:
        if status[t] == TupleStatus.SKYLINE:
            window.push(t, vals[t], pinned=True)
    for t in survivors:
        if status[t] == TupleStatus.UNSEEN:
            _, c = window.offer(t, vals[t])
            state.counter.add(c)
    kept = set(window.ids)
    return [t for t in survivors if t in kept]


def _check_range(t: int, dim: int, state: SkylineState) -> None:
    index = state.indexes[dim]
    b = int(index.block_of[t])
    if int(state.cursors[dim]) != b + 1:
        raise InvariantError(f"tuple {t} is not in the open block of index {dim}")
    rng = state.per_dimension[dim]
    in_range = set(rng.ids[:state.range_len[dim]])
    for s in state.skyline:
        if (index.block_of[s] < b) != (s in in_range):
            raise InvariantError(
                f"S_{dim} incomplete when confirming {t}: skyline tuple {s} misplaced"
            )


def confirm_skyline(t: int, dim: int, state: SkylineState) -> bool:
    """Decide a block-skyline tuple by comparing it with S_dim only."""
    if state.status[t] != TupleStatus.UNSEEN:
        raise InvariantError(f"tuple {t} was already decided")
    if state.check_invariants:
        _check_range(t, dim, state)
    rng = state.per_dimension[dim]
    v = state.values[t]
    pos, c = first_dominator(rng.values(state.range_len[dim]), v)
    state.counter.add(c)
    block = int(state.cursors[dim]) - 1
    if pos >= 0:
        state.mark(t, TupleStatus.DOMINATED)
        state.emit("tuple-rejected", dim, block, t)
        return False
    state.mark(t, TupleStatus.SKYLINE)
    state.skyline.append(t)
    rng.append(t, v)
    state.emit("tuple-confirmed", dim, block, t)
    return True


def absorb_known_skyline(t: int, dim: int, state: SkylineState) -> None:
    """Put an already-confirmed skyline tuple into S_dim without comparing it."""
    if state.status[t] != TupleStatus.SKYLINE:
        raise InvariantError(f"tuple {t} is not a confirmed skyline tuple")
    rng = state.per_dimension[dim]
    if t not in rng:
        rng.append(t, state.values[t])


def update_stop_line(current: Optional[StopLine], candidate: int, indexes: IndexSet) -> StopLine:
    """Keep whichever line has the smaller (max, mean) block offset; ties keep ``current``."""
    line = StopLine.build(candidate, indexes)
    if current is None or line.key() < current.key():
        return line
    return current


def stop_line_coverage(line: StopLine, indexes: IndexSet) -> int:
    """Number of index entries lying in blocks strictly after the line's block."""
    total = 0
    for ix, b in zip(indexes.indexes, line.block_offsets):
        if b + 1 < ix.distinct_count:
            total += ix.n - int(ix.block_starts[b + 1])
    return total


def should_stop(state: SkylineState, line: Optional[StopLine]) -> bool:
    if line is None:
        return False
    return bool(np.all(state.cursors > np.asarray(line.block_offsets)))


def _process_block(state: SkylineState, dim: int, block: list[int]) -> int:
    """Classify one block; returns the number of newly confirmed skyline tuples."""
    b = int(state.cursors[dim]) - 1
    state.emit("block-traversed", dim, b)
    status = state.status
    local = block_skyline(block, state)
    if len(local) < len(block):
        kept = set(local)
        for t in block:
            if t not in kept and status[t] == TupleStatus.UNSEEN:
                state.mark(t, TupleStatus.DOMINATED)
                state.emit("tuple-rejected", dim, b, t)
    new = 0
    for t in local:
        if status[t] == TupleStatus.SKYLINE:
            absorb_known_skyline(t, dim, state)
        elif confirm_skyline(t, dim, state):
            new += 1
            line = update_stop_line(state.stop_line, t, state.indexes)
            if line is not state.stop_line:
                state.stop_line = line
                state.stop_line_updates += 1
                state.emit("stop-line-updated", dim, b, t)
    return new


def run_sdi_rs(data: Dataset, switching: Switching | str = Switching.BFS, *,
               trace: Optional[TraceSink] = None,
               check_invariants: bool = False) -> tuple[SkylineResult, RunReport]:
    """Compute the exact skyline with range search and stop-line termination.

    ``switching`` picks the dimension rotation: BFS moves to the next index
    after every block; DFS stays in an index while its blocks keep yielding
    new skyline tuples. Indexes are visited in order of decreasing number of
    distinct values.
    """
    switching = Switching(switching)
    t_start = now_us()
    indexes = build_index_set(data)
    t_search = now_us()
    state = SkylineState(data, indexes, check_invariants=check_invariants, trace=trace)
    scan = indexes.scan_order
    pos = 0
    early = False
    while True:
        dim = scan[pos]
        block = state.open_block(dim)
        if block is None:
            break
        new = _process_block(state, dim, block)
        if should_stop(state, state.stop_line):
            early = True
            state.emit("stopped", dim, int(state.cursors[dim]) - 1, state.stop_line.owner)
            break
        if switching is Switching.BFS or new == 0:
            pos = (pos + 1) % len(scan)
    result = state.result()
    t_end = now_us()
    report = RunReport(
        algorithm="sdi-rs",
        strategy=switching.value,
        n=data.n,
        d=data.d,
        skyline_size=result.size,
        dominance_comparisons=state.counter.count,
        search_time_us=t_end - t_search,
        total_time_us=t_end - t_start,
        stop_line_updates=state.stop_line_updates,
        early_stop=early,
    )
    return result, report
