"""Prototype sets: the currency passed from a first-stage model to a refiner."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distances import nearest_index

UNLABELED = -1


@dataclass
class PrototypeSet:
    prototypes: np.ndarray
    majority_labels: np.ndarray | None = None
    suggested_k: int | None = None
    source: str = "raw"

    def __post_init__(self):
        self.prototypes = np.atleast_2d(np.asarray(self.prototypes, dtype=float))
        if len(self.prototypes) < 1:
            raise ValueError("a prototype set cannot be empty")

    def __len__(self) -> int:
        return len(self.prototypes)


def majority_labels_for(
    prototypes: np.ndarray, samples: np.ndarray, labels: np.ndarray | None
) -> np.ndarray | None:
    """Majority class among the samples nearest each prototype.

    Prototypes that attract no samples get UNLABELED; label ties resolve to
    the lowest class id.
    """
    if labels is None:
        return None
    owner = nearest_index(samples, prototypes)
    out = np.full(len(prototypes), UNLABELED, dtype=int)
    n_classes = int(labels.max()) + 1
    for p in range(len(prototypes)):
        mine = labels[owner == p]
        if len(mine):
            out[p] = int(np.argmax(np.bincount(mine, minlength=n_classes)))
    return out
