"""Clustering quality measures and benchmark aggregation."""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InvalidParameterError

MEASURES = ("correctness", "ari", "distortion", "iterations", "wall_time")


def _check_pair(a, b):
    a = np.asarray(a).ravel()
    b = np.asarray(b).ravel()
    if a.size != b.size:
        raise InvalidParameterError("label vectors differ in length")
    return a, b


def contingency_table(a, b):
    """Counts n[i, j] of points with label i in ``a`` and j in ``b``."""
    a, b = _check_pair(a, b)
    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    table = np.zeros((ai.max() + 1, bi.max() + 1), dtype=np.int64)
    np.add.at(table, (ai, bi), 1)
    return table


def ari(a, b):
    """Hubert-Arabie Adjusted Rand Index between two labelings.

    Computed from the contingency table; the degenerate case where the
    expected index equals the maximum index (e.g. both partitions are one
    single cluster) returns 1.0.
    """
    a, b = _check_pair(a, b)
    if a.size < 2:
        raise InvalidParameterError("need at least 2 points")

    def comb2(x):
        return x * (x - 1) / 2.0

    table = contingency_table(a, b)
    sum_ij = comb2(table.astype(float)).sum()
    sum_a = comb2(table.sum(axis=1).astype(float)).sum()
    sum_b = comb2(table.sum(axis=0).astype(float)).sum()
    expected = sum_a * sum_b / comb2(float(a.size))
    maximum = 0.5 * (sum_a + sum_b)
    if maximum == expected:
        return 1.0
    return float((sum_ij - expected) / (maximum - expected))


def correctness(pred, truth):
    """Fraction of correctly labeled points under the best label matching.

    The optimal permutation is found by maximum-weight matching on the
    contingency table, so the result is invariant to relabeling ``pred``.
    """
    pred, truth = _check_pair(pred, truth)
    table = contingency_table(pred, truth)
    rows, cols = linear_sum_assignment(table, maximize=True)
    return float(table[rows, cols].sum()) / pred.size


def distortion(data, labels):
    """Sum of squared distances to per-cluster gravity centers.

    Centers are recomputed from ``data`` rows; label values may be any
    integers (absent labels contribute nothing).
    """
    data = np.asarray(data, dtype=float)
    labels = np.asarray(labels).ravel()
    if labels.size != data.shape[0]:
        raise InvalidParameterError("labels length does not match data rows")
    total = 0.0
    for value in np.unique(labels):
        rows = data[labels == value]
        total += float(((rows - rows.mean(axis=0)) ** 2).sum())
    return total


@dataclass(frozen=True)
class Stats:
    """Median / mean / sample standard deviation of one measure."""

    median: float
    mean: float
    sd: float
    n: int


def _stats(values):
    values = np.asarray(values, dtype=float)
    n = values.size
    sd = float(values.std(ddof=1)) if n > 1 else 0.0
    return Stats(median=float(np.median(values)), mean=float(values.mean()), sd=sd, n=n)


def summarize(records, method_order=None):
    """Aggregate per-run records into per-method summary statistics.

    ``records`` is an iterable of mappings with at least a ``method`` key
    and the five measures in :data:`MEASURES`.  Returns an ordered dict
    ``{method: {measure: Stats}}``; with a single run per method the median
    and mean equal the value and the sd is 0 (``n`` flags the count).
    """
    records = list(records)
    if not records:
        raise InvalidParameterError("no run records to summarize")
    methods = []
    for rec in records:
        if rec["method"] not in methods:
            methods.append(rec["method"])
    if method_order is not None:
        methods.sort(key=lambda m: method_order.index(m) if m in method_order else len(method_order))
    summary = {}
    for method in methods:
        rows = [r for r in records if r["method"] == method]
        summary[method] = {
            measure: _stats([r[measure] for r in rows]) for measure in MEASURES
        }
    return summary
