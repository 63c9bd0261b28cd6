"""Per-dimension sorted indexes partitioned into equal-value blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import Dataset, StructuralError


class IndexEntry(NamedTuple):
    value: float
    tuple_id: int

    def __str__(self) -> str:
        return f"{self.value:g}:{self.tuple_id}"


class DimensionalIndex:
    """Tuple ids of one dimension, best value first, ties by id.

    Entries are stored column-wise (``ids`` and ``values`` arrays, 16 bytes
    per entry). ``block_starts[k]`` is the entry offset of block ``k``;
    ``block_of[t]`` is the block offset of tuple ``t``.
    """

    def __init__(self, dimension: int, ids: np.ndarray, values: np.ndarray, oriented: np.ndarray):
        self.dimension = dimension
        self.ids = ids
        self.values = values
        change = np.flatnonzero(oriented[1:] != oriented[:-1]) + 1
        self.block_starts = np.concatenate(([0], change)).astype(np.int64)
        self._bounds = np.append(self.block_starts, len(ids))
        block_of = np.empty(len(ids), dtype=np.int64)
        block_of[ids] = np.repeat(np.arange(len(self.block_starts)), np.diff(self._bounds))
        self.block_of = block_of
        for arr in (self.ids, self.values, self.block_starts, self._bounds, self.block_of):
            arr.flags.writeable = False

    @property
    def distinct_count(self) -> int:
        return len(self.block_starts)

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def duplicate_count(self) -> int:
        """Entries beyond the first in their block."""
        return self.n - self.distinct_count

    @property
    def largest_block(self) -> int:
        return int(np.diff(self._bounds).max())

    @property
    def entries(self) -> list[IndexEntry]:
        return [IndexEntry(float(v), int(t)) for v, t in zip(self.values, self.ids)]

    def block_ids(self, k: int) -> np.ndarray:
        return self.ids[self._bounds[k]:self._bounds[k + 1]]

    def block(self, k: int) -> list[IndexEntry]:
        lo, hi = self._bounds[k], self._bounds[k + 1]
        return [IndexEntry(float(v), int(t)) for v, t in zip(self.values[lo:hi], self.ids[lo:hi])]

    def blocks(self) -> list[list[IndexEntry]]:
        return [self.block(k) for k in range(self.distinct_count)]

    def __repr__(self) -> str:
        return (
            f"DimensionalIndex(dimension={self.dimension}, n={self.n}, "
            f"distinct_count={self.distinct_count})"
        )


@dataclass(frozen=True)
class IndexSet:
    indexes: tuple[DimensionalIndex, ...]
    scan_order: tuple[int, ...]

    def __getitem__(self, dim: int) -> DimensionalIndex:
        return self.indexes[dim]

    def __len__(self) -> int:
        return len(self.indexes)

    @property
    def block_offsets(self) -> np.ndarray:
        """``(n, d)`` array of block offsets, row per tuple."""
        return np.stack([ix.block_of for ix in self.indexes], axis=1)


def build_index(data: Dataset, dim: int) -> DimensionalIndex:
    if data.n == 0:
        raise StructuralError("cannot index an empty dataset")
    if not 0 <= dim < data.d:
        raise StructuralError(f"dimension {dim} out of range for d={data.d}")
    key = data.oriented[:, dim]
    ids = np.lexsort((np.arange(data.n), key)).astype(np.int64)
    return DimensionalIndex(dim, ids, data.values[ids, dim].copy(), key[ids])


def build_index_set(data: Dataset) -> IndexSet:
    indexes = tuple(build_index(data, i) for i in range(data.d))
    order = sorted(range(data.d), key=lambda i: (-indexes[i].distinct_count, i))
    return IndexSet(indexes, tuple(order))


def next_block(index: DimensionalIndex, cursor: int) -> tuple[list[IndexEntry], int] | None:
    """Entries of block ``cursor`` and the advanced cursor, or None at the end."""
    if cursor >= index.distinct_count:
        return None
    return index.block(cursor), cursor + 1


def block_offset_of(index: DimensionalIndex, tuple_id: int) -> int:
    if not 0 <= tuple_id < index.n:
        raise StructuralError(f"tuple {tuple_id} is not in index of dimension {index.dimension}")
    return int(index.block_of[tuple_id])
