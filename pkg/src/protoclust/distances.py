"""Shared Euclidean distance kernels.

Every nearest-something decision in the library goes through these helpers so
tie-breaking (lowest index wins) is identical everywhere.
"""

import numpy as np


def pairwise_sq_dists(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Squared Euclidean distances between rows of x (n, d) and y (m, d)."""
    x = np.atleast_2d(np.asarray(x, dtype=float))
    y = np.atleast_2d(np.asarray(y, dtype=float))
    d2 = (
        np.sum(x * x, axis=1)[:, None]
        + np.sum(y * y, axis=1)[None, :]
        - 2.0 * (x @ y.T)
    )
    # gemm form can go infinitesimally negative for coincident points
    np.maximum(d2, 0.0, out=d2)
    return d2


def nearest_index(x: np.ndarray, centers: np.ndarray) -> np.ndarray:
    """Index of the nearest center for each row of x; ties -> lowest index."""
    return np.argmin(pairwise_sq_dists(x, centers), axis=1)
