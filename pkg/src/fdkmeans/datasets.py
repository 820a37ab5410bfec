"""Synthetic longitudinal models, missing-data injection, and dataset IO.

Four benchmark models, each a small family of signal functions observed on
a fixed time grid with additive white Gaussian noise:

* M1 -- polynomial and fast sinusoidal signals on [0, 1], d=101 (df 15)
* M2 -- flatter polynomial/sinusoidal signals on [0, 1], d=101 (df 4)
* M3 -- raw and transformed Gaussian bumps on [-10, 10], d=201 (df 13)
* M4 -- monotone growth-curve signals on [0, 1], d=21 (df 4)

Datasets serialize to CSV (header = grid times plus a final ``label``
column, missing cells empty) with a JSON manifest alongside.
"""

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError
from .rng import as_generator

_SQRT_2PI = np.sqrt(2.0 * np.pi)


def _m1_signals():
    return [
        lambda x: x - 0.5,
        lambda x: (x - 0.5) ** 2 - 0.8,
        lambda x: -((x - 0.5) ** 2) + 0.7,
        lambda x: 0.75 * np.sin(8 * np.pi * x),
    ]


def _m2_signals():
    return [
        lambda x: x,
        lambda x: 2.0 * (x - 0.5) ** 2 - 0.25,
        lambda x: -2.0 * (x - 0.5) ** 2 + 0.3,
        lambda x: 0.6 * np.sin(2 * np.pi * x - 0.5),
    ]


def _m3_signals():
    return [
        lambda x: 1.0 / (2.0 * _SQRT_2PI) * np.exp(-(x**2) / (2.0 * 2.0**2)),
        lambda x: 1.0 / _SQRT_2PI * np.exp(-((x + 2.0) ** 2) / 2.0),
        lambda x: 1.0 / _SQRT_2PI * np.exp(-((x - 2.0) ** 2) / 2.0),
        lambda x: -1.0 / _SQRT_2PI * np.exp(-(x**2) / 2.0) + 0.4,
        lambda x: -2.0 / (3.0 * _SQRT_2PI) * np.exp(-(x**2) / (2.0 * 3.0**2)) + 0.4,
    ]


def _m4_signals():
    return [
        lambda x: x - 1.0,
        lambda x: x**2,
        lambda x: x**3,
        lambda x: np.sqrt(x),
    ]


@dataclass(frozen=True)
class ModelSpec:
    """One synthetic model: grid, cluster signal functions, defaults."""

    id: str
    sigma: float
    grid: np.ndarray
    signals: list
    default_df: int
    n_per_cluster: int = 25

    @property
    def n_clusters(self):
        return len(self.signals)


_MODEL_BUILDERS = {
    "M1": lambda: (np.linspace(0.0, 1.0, 101), _m1_signals(), 15),
    "M2": lambda: (np.linspace(0.0, 1.0, 101), _m2_signals(), 4),
    "M3": lambda: (np.linspace(-10.0, 10.0, 201), _m3_signals(), 13),
    "M4": lambda: (np.linspace(0.0, 1.0, 21), _m4_signals(), 4),
}

MODEL_IDS = tuple(_MODEL_BUILDERS)


def model_spec(model_id, sigma=1.0, n_per_cluster=25):
    """Look up a model by id ("M1".."M4") with the given noise level."""
    key = str(model_id).upper()
    if key not in _MODEL_BUILDERS:
        raise InvalidParameterError(f"unknown model {model_id!r}; expected one of {MODEL_IDS}")
    if sigma < 0:
        raise InvalidParameterError("sigma must be >= 0")
    grid, signals, default_df = _MODEL_BUILDERS[key]()
    return ModelSpec(
        id=key,
        sigma=float(sigma),
        grid=grid,
        signals=signals,
        default_df=default_df,
        n_per_cluster=int(n_per_cluster),
    )


@dataclass
class LabeledDataset:
    """Curves on a shared grid with ground-truth labels and optional missingness.

    ``mask`` is boolean with True marking a MISSING cell; ``data`` keeps the
    underlying complete values (generators) or NaN (files read from disk).
    """

    data: np.ndarray
    truth: np.ndarray
    grid: np.ndarray
    mask: np.ndarray = None
    meta: dict = field(default_factory=dict)


def generate(model, rng):
    """Sample one labeled dataset from a :class:`ModelSpec`.

    Rows come in contiguous blocks of ``n_per_cluster`` per signal, each row
    being the signal on the grid plus i.i.d. Normal(0, sigma^2) noise.
    """
    rng = as_generator(rng)
    grid = model.grid
    blocks = []
    for signal in model.signals:
        clean = np.broadcast_to(signal(grid), (model.n_per_cluster, grid.size))
        blocks.append(clean + rng.normal(0.0, model.sigma, clean.shape))
    data = np.vstack(blocks)
    truth = np.repeat(np.arange(model.n_clusters), model.n_per_cluster)
    return LabeledDataset(
        data=data,
        truth=truth,
        grid=grid.copy(),
        meta={"model": model.id, "sigma": model.sigma},
    )


def inject_missing(ds, p, rng):
    """Mask ``round(p * (d - 2))`` interior cells per row, uniformly at random.

    The first and last coordinates of every row stay observed.  Returns a
    new dataset sharing data/truth with a fresh mask; truth is untouched.
    """
    if not 0.0 <= p < 1.0:
        raise InvalidParameterError(f"missing proportion p={p} must be in [0, 1)")
    rng = as_generator(rng)
    n, d = ds.data.shape
    n_miss = int(np.rint(p * (d - 2)))
    mask = np.zeros((n, d), dtype=bool)
    for i in range(n):
        if n_miss:
            cols = rng.choice(np.arange(1, d - 1), size=n_miss, replace=False)
            mask[i, cols] = True
    meta = dict(ds.meta)
    meta["p_missing"] = float(p)
    return LabeledDataset(data=ds.data, truth=ds.truth, grid=ds.grid, mask=mask, meta=meta)


def write_csv(ds, path):
    """Write a dataset as CSV: header row of grid times plus ``label``,
    one curve per row, masked cells left empty."""
    data, mask = ds.data, ds.mask
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([repr(float(t)) for t in ds.grid] + ["label"])
        for i in range(data.shape[0]):
            cells = []
            for j in range(data.shape[1]):
                hidden = mask is not None and mask[i, j]
                if hidden or np.isnan(data[i, j]):
                    cells.append("")
                else:
                    cells.append(repr(float(data[i, j])))
            cells.append(str(int(ds.truth[i])) if ds.truth is not None else "")
            writer.writerow(cells)


def read_csv(path):
    """Read a dataset written by :func:`write_csv`.

    Missing cells come back as NaN in ``data`` with True in ``mask``
    (mask is None when nothing is missing).
    """
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0][-1] != "label":
        raise InvalidParameterError(f"{path}: expected a header ending in 'label'")
    grid = np.array([float(t) for t in rows[0][:-1]])
    d = grid.size
    data = np.full((len(rows) - 1, d), np.nan)
    truth = np.zeros(len(rows) - 1, dtype=int)
    mask = np.zeros((len(rows) - 1, d), dtype=bool)
    for i, row in enumerate(rows[1:]):
        if len(row) != d + 1:
            raise InvalidParameterError(f"{path}: row {i} has {len(row)} cells, expected {d + 1}")
        for j, cell in enumerate(row[:-1]):
            if cell == "":
                mask[i, j] = True
            else:
                data[i, j] = float(cell)
        truth[i] = int(row[-1]) if row[-1] != "" else -1
    if not mask.any():
        mask = None
    return LabeledDataset(data=data, truth=truth, grid=grid, mask=mask)


def write_manifest(ds, path, seed=None, replicate_index=None):
    """JSON manifest describing how a dataset file was produced."""
    payload = {
        "model": ds.meta.get("model"),
        "sigma": ds.meta.get("sigma"),
        "seed": seed,
        "grid": [float(t) for t in ds.grid],
        "p_missing": ds.meta.get("p_missing", 0.0),
        "replicate_index": replicate_index,
        "n_curves": int(ds.data.shape[0]),
        "masked": bool(ds.mask is not None and ds.mask.any()),
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
