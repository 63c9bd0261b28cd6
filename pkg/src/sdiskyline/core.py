"""Tuples, per-dimension orders and the dominance test shared by every algorithm."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np


class StructuralError(ValueError):
    """Raised on malformed inputs (shape mismatch, empty data, bad order spec)."""


class Direction(str, enum.Enum):
    MIN = "min"  # ascending is better
    MAX = "max"  # descending is better


class Cmp(enum.Enum):
    BETTER = 1
    EQUAL = 0
    WORSE = -1


@dataclass(frozen=True)
class OrderSpec:
    """One direction per dimension, plus optional category rank maps.

    A rank map turns category tokens into integer ranks at ingestion time;
    rank 0 is the best category and the dimension is then compared with
    ascending-is-better on the ranks.
    """

    directions: tuple[Direction, ...]
    rank_maps: Mapping[int, Mapping[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        dirs = tuple(Direction(x) for x in self.directions)
        object.__setattr__(self, "directions", dirs)
        for dim, ranks in self.rank_maps.items():
            if not 0 <= dim < len(dirs):
                raise StructuralError(f"rank map for unknown dimension {dim}")
            if len(set(ranks.values())) != len(ranks):
                raise StructuralError(f"rank map for dimension {dim} is not injective")
            if dirs[dim] is not Direction.MIN:
                raise StructuralError(f"rank-mapped dimension {dim} must be 'min'")

    @classmethod
    def uniform(cls, d: int, direction: Direction | str = Direction.MIN) -> "OrderSpec":
        return cls(tuple(Direction(direction) for _ in range(d)))

    @property
    def d(self) -> int:
        return len(self.directions)

    @property
    def signs(self) -> np.ndarray:
        """+1 for min dimensions, -1 for max dimensions."""
        return np.array([1.0 if x is Direction.MIN else -1.0 for x in self.directions])

    def resolve(self, dim: int, token: str) -> float:
        """Map one raw token of dimension ``dim`` to its numeric value."""
        ranks = self.rank_maps.get(dim)
        if ranks is not None:
            try:
                return float(ranks[token])
            except KeyError:
                raise StructuralError(f"unmapped category {token!r} in dimension {dim}") from None
        value = float(token)
        if not math.isfinite(value):
            raise StructuralError(f"non-finite value {token!r} in dimension {dim}")
        return value


@dataclass(frozen=True)
class Tuple:
    id: int
    values: tuple[float, ...]

    @property
    def d(self) -> int:
        return len(self.values)


class Dataset:
    """An immutable ``(n, d)`` block of finite values with stable ids ``0..n-1``."""

    def __init__(self, values, order: OrderSpec | None = None):
        arr = np.array(values, dtype=np.float64, copy=True)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise StructuralError(f"expected a 2-d array, got shape {arr.shape}")
        if arr.shape[0] == 0:
            raise StructuralError("dataset is empty")
        if not np.isfinite(arr).all():
            raise StructuralError("dataset contains NaN or infinite values")
        if order is None:
            order = OrderSpec.uniform(arr.shape[1])
        if order.d != arr.shape[1]:
            raise StructuralError(f"order has {order.d} dimensions, data has {arr.shape[1]}")
        arr.flags.writeable = False
        self.values = arr
        self.order = order
        oriented = arr * order.signs
        # -0.0 and 0.0 compare equal; normalise so byte-level views agree too
        oriented += 0.0
        oriented.flags.writeable = False
        self.oriented = oriented

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def d(self) -> int:
        return self.values.shape[1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Tuple:
        return Tuple(int(i), tuple(float(v) for v in self.values[i]))

    def __iter__(self) -> Iterator[Tuple]:
        for i in range(self.n):
            yield self[i]

    def __repr__(self) -> str:
        return f"Dataset(n={self.n}, d={self.d})"


@dataclass(frozen=True)
class SkylineResult:
    members: frozenset[int]
    # confirmation/emission order, useful for progressive consumers
    emitted: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.members)

    def sorted_ids(self) -> list[int]:
        return sorted(self.members)


class ComparisonCounter:
    """Per-run accumulator of whole-tuple dominance tests."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, k: int) -> None:
        self.count += k


def compare_values(a: float, b: float, dim: int, order: OrderSpec) -> Cmp:
    if a == b:
        return Cmp.EQUAL
    if order.directions[dim] is Direction.MIN:
        return Cmp.BETTER if a < b else Cmp.WORSE
    return Cmp.BETTER if a > b else Cmp.WORSE


def _values(t) -> Sequence[float]:
    return t.values if isinstance(t, Tuple) else t


def dominates(t, u, order: OrderSpec, counter: ComparisonCounter | None = None) -> bool:
    """True iff ``t`` is not worse than ``u`` everywhere and better somewhere.

    Counts exactly one comparison on ``counter`` whatever the outcome.
    """
    tv, uv = _values(t), _values(u)
    if len(tv) != len(uv) or len(tv) != order.d:
        raise StructuralError(
            f"dimensionality mismatch: {len(tv)} vs {len(uv)} (order has {order.d})"
        )
    if counter is not None:
        counter.count += 1
    strict = False
    for i, (a, b) in enumerate(zip(tv, uv)):
        c = compare_values(a, b, i, order)
        if c is Cmp.WORSE:
            return False
        if c is Cmp.BETTER:
            strict = True
    return strict


def incomparable(t, u, order: OrderSpec, counter: ComparisonCounter | None = None) -> bool:
    """Neither tuple dominates the other and they are not identical.

    Identical tuples are treated as equal rather than incomparable.
    """
    if dominates(t, u, order, counter):
        return False
    if dominates(u, t, order, counter):
        return False
    return tuple(_values(t)) != tuple(_values(u))


# Vectorised helpers over oriented (smaller-is-better) rows. They return the
# number of dominates() calls a sequential scan with early exit would make.

_CHUNK = 1024


def first_dominator(window: np.ndarray, v: np.ndarray) -> tuple[int, int]:
    """Scan ``window`` rows in order for the first one dominating ``v``.

    Returns ``(position or -1, comparisons)``.
    """
    k = window.shape[0]
    for lo in range(0, k, _CHUNK):
        w = window[lo:lo + _CHUNK]
        cand = np.flatnonzero((w <= v).all(axis=1))
        if len(cand):
            # strictness only matters for the few rows that are not worse anywhere
            strict = cand[(w[cand] < v).any(axis=1)]
            if len(strict):
                pos = lo + int(strict[0])
                return pos, pos + 1
    return -1, k


def dominated_mask(v: np.ndarray, window: np.ndarray) -> np.ndarray:
    """Boolean mask of ``window`` rows that ``v`` dominates (no counting)."""
    mask = (v <= window).all(axis=1)
    cand = np.flatnonzero(mask)
    if len(cand):
        mask[cand] = (v < window[cand]).any(axis=1)
    return mask
