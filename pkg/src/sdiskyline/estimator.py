from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_array, check_is_fitted

from .baselines import run_bnl, run_salsa, run_sfs
from .core import StructuralError
from .sdi import run_sdi_rs
from .validation import check_dataset

_RUNNERS = {
    "sdi-rs": lambda data, strategy: run_sdi_rs(data, strategy),
    "bnl": lambda data, strategy: run_bnl(data),
    "sfs": lambda data, strategy: run_sfs(data),
    "salsa": lambda data, strategy: run_salsa(data),
}


class SkylineEstimator(BaseEstimator):
    """Skyline of a sample matrix, exposed through the estimator protocol.

    Parameters
    ----------
    algorithm : {"sdi-rs", "bnl", "sfs", "salsa"}, default="sdi-rs"
    strategy : {"bfs", "dfs"}, default="bfs"
        Dimension switching used by ``sdi-rs``; ignored by the others.
    order : None, "min", "max", sequence of those, or OrderSpec
        Preference direction per feature. None means smaller is better.

    Attributes
    ----------
    skyline_indices_ : ndarray of int
        Row indices of the skyline of the training data, ascending.
    skyline_ : ndarray of shape (m, n_features)
    report_ : RunReport
    order_ : OrderSpec
    n_features_in_ : int
    """

    def __init__(self, algorithm="sdi-rs", strategy="bfs", order=None):
        self.algorithm = algorithm
        self.strategy = strategy
        self.order = order

    def fit(self, X, y=None):
        if self.algorithm not in _RUNNERS:
            raise StructuralError(f"unknown algorithm {self.algorithm!r}")
        data = check_dataset(X, self.order)
        result, report = _RUNNERS[self.algorithm](data, self.strategy)
        self.order_ = data.order
        self.n_features_in_ = data.d
        self.skyline_indices_ = np.array(sorted(result.members), dtype=np.int64)
        self.skyline_ = data.values[self.skyline_indices_]
        self.report_ = report
        return self

    def predict(self, X):
        """True for rows no fitted skyline tuple dominates.

        On the training data this is exactly the skyline membership mask.
        """
        check_is_fitted(self, "skyline_")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != self.n_features_in_:
            raise StructuralError(
                f"X has {X.shape[1]} features, estimator was fitted with {self.n_features_in_}"
            )
        signs = self.order_.signs
        sky = self.skyline_ * signs
        out = np.empty(len(X), dtype=bool)
        for i, row in enumerate(X * signs):
            out[i] = not ((sky <= row).all(axis=1) & (sky < row).any(axis=1)).any()
        return out

    def fit_predict(self, X, y=None):
        self.fit(X)
        mask = np.zeros(len(X), dtype=bool)
        mask[self.skyline_indices_] = True
        return mask
