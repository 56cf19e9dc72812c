"""Datasets: CSV ingestion, range normalization, synthetic generators, folds.

All generators are deterministic given a seed and attach integer class labels.
Normalization maps each attribute into [-1, 1] via

    x_norm = (2x - x_max - x_min) / (x_max - x_min)

computed per attribute; a constant attribute maps to 0.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from typing import Union

import numpy as np

SeedLike = Union[int, np.random.Generator]


class DataFormatError(ValueError):
    """Raised for malformed dataset files; carries row/column position."""


@dataclass
class Dataset:
    samples: np.ndarray
    labels: np.ndarray | None = None
    attribute_names: list[str] | None = None
    name: str = "dataset"

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=float)
        if self.samples.ndim != 2:
            raise ValueError("samples must be a 2-D matrix")
        n, a = self.samples.shape
        if n < 1 or a < 1:
            raise ValueError("dataset needs at least one row and one column")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("samples contain non-finite values")
        if self.labels is not None:
            self.labels = np.asarray(self.labels, dtype=int)
            if self.labels.shape != (n,):
                raise ValueError("labels length must match sample count")
            if self.labels.min() < 0:
                raise ValueError("labels must be non-negative")

    @property
    def n_samples(self) -> int:
        return self.samples.shape[0]

    @property
    def n_attributes(self) -> int:
        return self.samples.shape[1]

    @property
    def n_classes(self) -> int:
        if self.labels is None:
            return 0
        return int(self.labels.max()) + 1

    def subset(self, indices: np.ndarray, name: str | None = None) -> "Dataset":
        labels = None if self.labels is None else self.labels[indices]
        return Dataset(
            self.samples[indices],
            labels,
            self.attribute_names,
            name or self.name,
        )


@dataclass
class NormalizationParams:
    per_attribute_min: np.ndarray
    per_attribute_max: np.ndarray

    def __post_init__(self):
        self.per_attribute_min = np.asarray(self.per_attribute_min, dtype=float)
        self.per_attribute_max = np.asarray(self.per_attribute_max, dtype=float)
        if np.any(self.per_attribute_min > self.per_attribute_max):
            raise ValueError("per-attribute min must not exceed max")


@dataclass
class FoldPlan:
    fold_assignment: np.ndarray
    k_folds: int

    def __post_init__(self):
        self.fold_assignment = np.asarray(self.fold_assignment, dtype=int)

    def test_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_assignment == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.fold_assignment != fold)

    def to_json(self) -> str:
        return json.dumps(
            {"k_folds": self.k_folds, "fold_assignment": self.fold_assignment.tolist()}
        )

    @classmethod
    def from_json(cls, text: str) -> "FoldPlan":
        obj = json.loads(text)
        return cls(np.asarray(obj["fold_assignment"]), int(obj["k_folds"]))


# ---------------------------------------------------------------------------
# normalization

def fit_normalization(samples: np.ndarray) -> NormalizationParams:
    samples = np.asarray(samples, dtype=float)
    return NormalizationParams(samples.min(axis=0), samples.max(axis=0))


def apply_normalization(samples: np.ndarray, params: NormalizationParams) -> np.ndarray:
    lo = params.per_attribute_min
    hi = params.per_attribute_max
    span = hi - lo
    out = np.zeros_like(np.asarray(samples, dtype=float))
    ok = span > 0
    out[:, ok] = (2.0 * samples[:, ok] - hi[ok] - lo[ok]) / span[ok]
    return out


def normalize(ds: Dataset) -> tuple[Dataset, NormalizationParams]:
    """Map every attribute of ds into [-1, 1]; constant attributes map to 0."""
    params = fit_normalization(ds.samples)
    scaled = apply_normalization(ds.samples, params)
    return Dataset(scaled, ds.labels, ds.attribute_names, ds.name), params


# ---------------------------------------------------------------------------
# synthetic generators

def _split_counts(total: int, parts: int) -> np.ndarray:
    base = total // parts
    counts = np.full(parts, base, dtype=int)
    counts[: total % parts] += 1
    return counts


def gen_lines(n_total: int = 1000, n_segments: int = 10, rng: SeedLike = 0) -> Dataset:
    """Points uniform along short parallel segments laid out as a staircase.

    Segment i runs over x in [3i, 3i+2] at height y = 4i.  The horizontal
    stagger keeps the groups compact relative to both attribute ranges, so the
    segments survive per-attribute normalization as separable clusters.
    """
    if not 1 <= n_segments <= n_total:
        raise ValueError("need n_total >= n_segments >= 1")
    rng = np.random.default_rng(rng)
    counts = _split_counts(n_total, n_segments)
    xs, ys, labels = [], [], []
    for seg, count in enumerate(counts):
        u = rng.random(count)
        xs.append(3.0 * seg + 2.0 * u)
        ys.append(np.full(count, 4.0 * seg))
        labels.append(np.full(count, seg, dtype=int))
    samples = np.column_stack([np.concatenate(xs), np.concatenate(ys)])
    return Dataset(samples, np.concatenate(labels), ["a0", "a1"], "lines")


BANANA_RADIUS = 5.0
BANANA_CENTERS = ((0.0, 0.0), (5.0, 2.5))


def gen_banana(n_per_class: int = 500, s: float = 1.0, rng: SeedLike = 0) -> Dataset:
    """Two interlocking half-circle arcs of radius 5 with Gaussian noise s."""
    if n_per_class < 1 or s <= 0:
        raise ValueError("need n_per_class >= 1 and s > 0")
    rng = np.random.default_rng(rng)
    blocks = []
    for cls, (cx, cy) in enumerate(BANANA_CENTERS):
        theta = rng.uniform(0.0, np.pi, n_per_class) + cls * np.pi
        pts = np.column_stack(
            [cx + BANANA_RADIUS * np.cos(theta), cy + BANANA_RADIUS * np.sin(theta)]
        )
        pts += rng.normal(0.0, s, size=pts.shape)
        blocks.append(pts)
    samples = np.vstack(blocks)
    labels = np.repeat([0, 1], n_per_class)
    return Dataset(samples, labels, ["a0", "a1"], "banana")


def gen_highleyman(n_per_class: int = 500, rng: SeedLike = 0) -> Dataset:
    """Two axis-aligned Gaussians: N((1,0), diag(1,.25)) vs N((.01,0), diag(1,4))."""
    if n_per_class < 1:
        raise ValueError("need n_per_class >= 1")
    rng = np.random.default_rng(rng)
    c0 = rng.normal([1.0, 0.0], [1.0, 0.5], size=(n_per_class, 2))
    c1 = rng.normal([0.01, 0.0], [1.0, 2.0], size=(n_per_class, 2))
    samples = np.vstack([c0, c1])
    labels = np.repeat([0, 1], n_per_class)
    return Dataset(samples, labels, ["a0", "a1"], "highleyman")


def gen_spherical(n_per_class: int = 500, u: float = 1.0, rng: SeedLike = 0) -> Dataset:
    """Spherical N((u,0), I) against N(0, diag(4,1))."""
    if n_per_class < 1:
        raise ValueError("need n_per_class >= 1")
    rng = np.random.default_rng(rng)
    c0 = rng.normal([u, 0.0], 1.0, size=(n_per_class, 2))
    c1 = rng.normal([0.0, 0.0], [2.0, 1.0], size=(n_per_class, 2))
    samples = np.vstack([c0, c1])
    labels = np.repeat([0, 1], n_per_class)
    return Dataset(samples, labels, ["a0", "a1"], "spherical")


def gen_simple(n_per_class: int = 500, d: float = 6.0, rng: SeedLike = 0) -> Dataset:
    """Two unit-variance Gaussians whose means are d apart on the first axis."""
    if n_per_class < 1 or d < 0:
        raise ValueError("need n_per_class >= 1 and d >= 0")
    rng = np.random.default_rng(rng)
    c0 = rng.normal([0.0, 0.0], 1.0, size=(n_per_class, 2))
    c1 = rng.normal([d, 0.0], 1.0, size=(n_per_class, 2))
    samples = np.vstack([c0, c1])
    labels = np.repeat([0, 1], n_per_class)
    return Dataset(samples, labels, ["a0", "a1"], "simple")


GENERATORS = {
    "lines": gen_lines,
    "banana": gen_banana,
    "highleyman": gen_highleyman,
    "spherical": gen_spherical,
    "simple": gen_simple,
}


# ---------------------------------------------------------------------------
# cross-validation folds

def make_folds(n: int, k_folds: int, rng: SeedLike = 0) -> FoldPlan:
    """Deal a random permutation of 0..n-1 round-robin into k_folds folds."""
    if not 1 <= k_folds <= n:
        raise ValueError(f"need 1 <= k_folds <= n, got k_folds={k_folds}, n={n}")
    rng = np.random.default_rng(rng)
    perm = rng.permutation(n)
    assignment = np.empty(n, dtype=int)
    assignment[perm] = np.arange(n) % k_folds
    return FoldPlan(assignment, k_folds)


# ---------------------------------------------------------------------------
# CSV I/O

def load_csv(path, has_header: bool = True, label_column: int | None = None) -> Dataset:
    """Read a comma-separated dataset; label column values may be any strings.

    Labels are re-encoded densely to 0..L-1 in first-appearance order.
    """
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise DataFormatError(f"cannot read {path}: {exc}") from exc
    rows = [row for row in rows if row]
    if not rows:
        raise DataFormatError(f"{path}: file is empty")
    header = rows.pop(0) if has_header else None
    if not rows:
        raise DataFormatError(f"{path}: no data rows after header")

    width = len(rows[0])
    if label_column is not None and not -width <= label_column < width:
        raise DataFormatError(f"{path}: label column {label_column} out of range")
    label_idx = label_column % width if label_column is not None else None

    values, raw_labels = [], []
    for r, row in enumerate(rows):
        row_no = r + 1 + (1 if has_header else 0)
        if len(row) != width:
            raise DataFormatError(
                f"{path}: row {row_no} has {len(row)} cells, expected {width}"
            )
        vals = []
        for c, cell in enumerate(row):
            if c == label_idx:
                raw_labels.append(cell.strip())
                continue
            try:
                v = float(cell)
            except ValueError:
                raise DataFormatError(
                    f"{path}: row {row_no}, column {c}: non-numeric cell {cell!r}"
                ) from None
            if not np.isfinite(v):
                raise DataFormatError(
                    f"{path}: row {row_no}, column {c}: non-finite value {cell!r}"
                )
            vals.append(v)
        values.append(vals)
    if not values or not values[0]:
        raise DataFormatError(f"{path}: no numeric attribute columns")

    labels = None
    if label_idx is not None:
        seen: dict[str, int] = {}
        labels = np.array([seen.setdefault(s, len(seen)) for s in raw_labels])
    names = None
    if header is not None:
        names = [h for c, h in enumerate(header) if c != label_idx]
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    return Dataset(np.asarray(values, dtype=float), labels, names, stem)


def save_csv(ds: Dataset, path) -> None:
    """Write the generator dialect: header a0..a{A-1},label; repr'd floats."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        names = ds.attribute_names or [f"a{j}" for j in range(ds.n_attributes)]
        if ds.labels is not None:
            writer.writerow(list(names) + ["label"])
            for row, lab in zip(ds.samples, ds.labels):
                writer.writerow([repr(float(v)) for v in row] + [int(lab)])
        else:
            writer.writerow(list(names))
            for row in ds.samples:
                writer.writerow([repr(float(v)) for v in row])
