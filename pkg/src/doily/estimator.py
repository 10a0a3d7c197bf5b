"""scikit-learn style wrapper around the detector."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .detector import SMALL_DOILY_SIZE, DetectorOutcome, run_full
from .validation import check_graph, check_graphs

__all__ = ["DoilyDetector"]


class DoilyDetector(BaseEstimator):
    """Decide doily containment for a batch of graphs.

    The detector has no learned state; ``fit`` only validates the
    parameters, so it composes with pipelines and ``clone``.

    Parameters
    ----------
    small_size : int, default=8
        Doilies up to this many vertices are searched for directly before
        the candidate stream runs.  Must be at least 8.
    threads : int, default=1
        Worker processes for the candidate stage.  Values above 1 may return
        a different (still valid) certificate between runs.
    """

    def __init__(self, small_size: int = SMALL_DOILY_SIZE, threads: int = 1):
        self.small_size = small_size
        self.threads = threads

    def fit(self, X=None, y=None):
        if int(self.small_size) < SMALL_DOILY_SIZE:
            raise ValueError(f"small_size must be at least {SMALL_DOILY_SIZE}")
        if int(self.threads) < 1:
            raise ValueError("threads must be positive")
        if X is not None:
            check_graphs(X)
        self.fitted_ = True
        return self

    def detect(self, G) -> DetectorOutcome:
        check_is_fitted(self, "fitted_")
        return run_full(check_graph(G), threads=int(self.threads), small_size=int(self.small_size))

    def transform(self, X) -> list[DetectorOutcome]:
        check_is_fitted(self, "fitted_")
        return [self.detect(G) for G in check_graphs(X)]

    def predict(self, X) -> np.ndarray:
        """Boolean array: does each graph contain a doily."""
        return np.array([out.found for out in self.transform(X)], dtype=bool)

    def fit_predict(self, X, y=None) -> np.ndarray:
        return self.fit(X).predict(X)
