"""Lloyd's K-means with farthest-first seeding and empty-cluster repair."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .data import Dataset, SeedLike
from .distances import nearest_index, pairwise_sq_dists

DEFAULT_MAX_ITER = 300
CONVERGENCE_TOL = 1e-12


@dataclass
class KMeansModel:
    centroids: np.ndarray
    assignment: np.ndarray
    sse_history: list[float] = field(default_factory=list)
    iterations: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "centroids": self.centroids.tolist(),
                "assignment": self.assignment.tolist(),
                "sse_history": list(self.sse_history),
                "iterations": self.iterations,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "KMeansModel":
        obj = json.loads(text)
        return cls(
            np.asarray(obj["centroids"], dtype=float),
            np.asarray(obj["assignment"], dtype=int),
            list(obj["sse_history"]),
            int(obj["iterations"]),
        )


def assign_nearest(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """Nearest-centroid id per point; equidistant ties go to the lowest id."""
    if len(centroids) == 0:
        raise ValueError("need at least one centroid")
    return nearest_index(points, centroids)


def sse(ds_or_points, assignment: np.ndarray, centroids: np.ndarray) -> float:
    """Sum of squared Euclidean distances from points to assigned centroids."""
    points = ds_or_points.samples if isinstance(ds_or_points, Dataset) else np.asarray(ds_or_points, dtype=float)
    assignment = np.asarray(assignment, dtype=int)
    centroids = np.asarray(centroids, dtype=float)
    if assignment.min(initial=0) < 0 or assignment.max(initial=0) >= len(centroids):
        raise ValueError("assignment id out of range")
    diff = points - centroids[assignment]
    return float(np.sum(diff * diff))


def farthest_first_init(points: np.ndarray, k: int, rng: SeedLike) -> np.ndarray:
    """Pick k distinct data points: a seeded random start, then greedy maximin.

    Each subsequent pick maximizes the distance to the nearest already-chosen
    point, so every well-separated group receives a seed before any group
    receives two.
    """
    rng = np.random.default_rng(rng)
    n = len(points)
    chosen = [int(rng.integers(n))]
    min_d2 = pairwise_sq_dists(points, points[chosen[-1]][None, :])[:, 0]
    while len(chosen) < k:
        min_d2[chosen] = -1.0  # keep picks distinct even among duplicates
        nxt = int(np.argmax(min_d2))
        chosen.append(nxt)
        d2 = pairwise_sq_dists(points, points[nxt][None, :])[:, 0]
        min_d2 = np.minimum(min_d2, d2)
    return points[np.array(chosen)].copy()


def _repair_empty(points, assignment, centroids, counts):
    """Re-seed each empty cluster at the point farthest from its own centroid."""
    d = np.sqrt(pairwise_sq_dists(points, centroids))
    dist_to_own = d[np.arange(len(points)), assignment]
    for j in np.flatnonzero(counts == 0):
        far = int(np.argmax(dist_to_own))
        centroids[j] = points[far]
        dist_to_own[far] = -1.0
    return centroids


def kmeans_fit(
    ds: Dataset,
    k: int,
    init: np.ndarray | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
    rng: SeedLike = 0,
) -> KMeansModel:
    """Run Lloyd iteration until no centroid moves (tol 1e-12) or max_iter."""
    points = ds.samples if isinstance(ds, Dataset) else np.asarray(ds, dtype=float)
    n = len(points)
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > n:
        raise ValueError(f"k={k} exceeds the number of points n={n}")
    if init is not None:
        centroids = np.asarray(init, dtype=float).copy()
        if centroids.shape != (k, points.shape[1]):
            raise ValueError("init must supply k centroids of matching dimension")
        if not np.all(np.isfinite(centroids)):
            raise ValueError("init centroids must be finite")
    else:
        centroids = farthest_first_init(points, k, rng)

    history: list[float] = []
    assignment = assign_nearest(points, centroids)
    for it in range(max_iter):
        history.append(sse(points, assignment, centroids))
        new_centroids = centroids.copy()
        counts = np.bincount(assignment, minlength=k)
        for dim in range(points.shape[1]):
            sums = np.bincount(assignment, weights=points[:, dim], minlength=k)
            new_centroids[counts > 0, dim] = sums[counts > 0] / counts[counts > 0]
        if np.any(counts == 0):
            new_centroids = _repair_empty(points, assignment, new_centroids, counts)
        if np.max(np.abs(new_centroids - centroids)) < CONVERGENCE_TOL:
            return KMeansModel(centroids, assignment, history, it + 1)
        centroids = new_centroids
        assignment = assign_nearest(points, centroids)
    history.append(sse(points, assignment, centroids))
    return KMeansModel(centroids, assignment, history, max_iter)
