"""Seeded synthetic benchmark data: independent, correlated, anti-correlated.

Follows the classic skyline benchmark generator procedure:

* independent: every value ``U[0, 1)``.
* correlated: a plane position ``v`` drawn as the mean of ``d`` uniforms, all
  coordinates set to ``v``, then consecutive coordinate pairs shifted by
  ``+h/-h`` with ``h`` a peaked draw on ``[-l, l]``, ``l = min(v, 1 - v)``.
* anti-correlated: plane position peaked around 0.5 (mean of 12 uniforms on
  ``[0.25, 0.75]``), coordinate pairs shifted by ``h ~ U[-l, l]``.

Shifts keep the coordinate sum on the plane. Tuples leaving ``[0, 1)`` are
redrawn, never clamped, so no artificial ties appear at the borders.
``duplicate_factor`` rounds every value to the nearest multiple of itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import Dataset, StructuralError

PEAK_DRAWS = 12


class Distribution(str, enum.Enum):
    INDEPENDENT = "independent"
    CORRELATED = "correlated"
    ANTI_CORRELATED = "anti-correlated"


@dataclass(frozen=True)
class GenSpec:
    distribution: Distribution
    n: int
    d: int
    seed: int = 0
    duplicate_factor: Optional[float] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "distribution", Distribution(self.distribution))
        except ValueError:
            raise StructuralError(f"unknown distribution {self.distribution!r}") from None
        if self.n < 1 or self.d < 1:
            raise StructuralError(f"need n >= 1 and d >= 1, got n={self.n}, d={self.d}")
        if self.duplicate_factor is not None and not 0 < self.duplicate_factor <= 1:
            raise StructuralError("duplicate_factor must lie in (0, 1]")
        if not 0 <= self.seed < 2**64:
            raise StructuralError("seed must be a 64-bit unsigned integer")


def _peak(rng: np.random.Generator, lo, hi, k: int, size: int) -> np.ndarray:
    """Mean of ``k`` uniforms on ``[lo, hi)``: bell-shaped, bounded."""
    return lo + (hi - lo) * rng.random((size, k)).mean(axis=1)


def _on_planes(rng: np.random.Generator, v: np.ndarray, d: int, correlated: bool) -> np.ndarray:
    m = len(v)
    lim = np.minimum(v, 1.0 - v)
    x = np.repeat(v[:, None], d, axis=1)
    for j in range(d):
        if correlated:
            h = _peak(rng, -lim, lim, PEAK_DRAWS, m)
        else:
            h = rng.uniform(-lim, lim)
        x[:, j] += h
        x[:, (j + 1) % d] -= h
    return x


def _rejection(rng: np.random.Generator, spec: GenSpec) -> np.ndarray:
    n, d = spec.n, spec.d
    correlated = spec.distribution is Distribution.CORRELATED
    parts, have = [], 0
    while have < n:
        m = max(2 * (n - have), 64)
        if correlated:
            v = _peak(rng, 0.0, 1.0, d, m)
        else:
            v = _peak(rng, 0.25, 0.75, PEAK_DRAWS, m)
        x = _on_planes(rng, v, d, correlated)
        x = x[((x >= 0.0) & (x < 1.0)).all(axis=1)]
        parts.append(x)
        have += len(x)
    return np.concatenate(parts)[:n]


def generate_values(spec: GenSpec) -> np.ndarray:
    rng = np.random.default_rng(spec.seed)
    if spec.distribution is Distribution.INDEPENDENT:
        v = rng.random((spec.n, spec.d))
    else:
        v = _rejection(rng, spec)
    if spec.duplicate_factor is not None:
        q = spec.duplicate_factor
        v = np.clip(np.round(v / q) * q, 0.0, 1.0)
    return v


def generate(spec: GenSpec) -> Dataset:
    return Dataset(generate_values(spec))
