"""Input checks shared by the estimator API."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.utils.validation import check_array

from .core import Dataset, Direction, OrderSpec, StructuralError


def check_order(order: OrderSpec | str | Sequence[str] | None, n_features: int) -> OrderSpec:
    """Normalise ``order`` into an OrderSpec for ``n_features`` dimensions.

    Accepts None (all ``min``), a single direction applied everywhere, a
    per-dimension sequence of directions, or a ready OrderSpec.
    """
    if order is None:
        return OrderSpec.uniform(n_features)
    if isinstance(order, OrderSpec):
        spec = order
    elif isinstance(order, (str, Direction)):
        spec = OrderSpec.uniform(n_features, order)
    else:
        spec = OrderSpec(tuple(Direction(x) for x in order))
    if spec.d != n_features:
        raise StructuralError(f"order covers {spec.d} dimensions, X has {n_features} features")
    return spec


def check_dataset(X, order=None) -> Dataset:
    arr = check_array(X, dtype=np.float64)
    return Dataset(arr, check_order(order, arr.shape[1]))
