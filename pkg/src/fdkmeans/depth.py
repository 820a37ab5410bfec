"""Modified Band Depth for samples of discretized curves.

The depth of a row is the average, over all unordered pairs of rows, of the
proportion of grid columns where the row lies inside the band spanned by the
pair (boundaries inclusive).  Pairs in which the row itself is a generator
count with proportion one.  Depths are computed per column from the counts
of strictly smaller / strictly larger values, which gives the exact pair
enumeration result in O(N log N) per column instead of O(N^2).
"""

import numpy as np

from .errors import InsufficientDataError


def mbd(data):
    """Modified Band Depth of every row of an ``N x D`` matrix.

    Returns a length-N vector with entries in ``(0, 1]``.  Requires
    ``N >= 2``; bands are pointwise min/max envelopes of row pairs and
    membership uses inclusive bounds, so duplicate rows still contribute.
    """
    data = np.asarray(data, dtype=float)
    if data.ndim == 1:
        data = data[None, :]
    n, d = data.shape
    if n < 2:
        raise InsufficientDataError("MBD needs at least 2 curves")
    if d < 1:
        raise InsufficientDataError("MBD needs at least 1 grid column")

    # Per column: pairs (not involving the row) whose band misses the value
    # are exactly the pairs entirely below or entirely above it.
    below = np.empty((n, d))
    above = np.empty((n, d))
    for j in range(d):
        col = data[:, j]
        order = np.sort(col)
        below[:, j] = np.searchsorted(order, col, side="left")
        above[:, j] = n - np.searchsorted(order, col, side="right")

    total_pairs = n * (n - 1) / 2.0
    other_pairs = (n - 1) * (n - 2) / 2.0
    inside = other_pairs - below * (below - 1) / 2.0 - above * (above - 1) / 2.0
    # the n-1 bands generated by the row itself always contain it
    proportions = inside.mean(axis=1) + (n - 1)
    return proportions / total_pairs


def deepest_index(data):
    """Index of the MBD-deepest row; ties go to the lowest index."""
    data = np.asarray(data, dtype=float)
    if data.ndim == 1:
        data = data[None, :]
    if data.shape[0] == 0:
        raise InsufficientDataError("empty input")
    if data.shape[0] == 1:
        return 0
    return int(np.argmax(mbd(data)))
