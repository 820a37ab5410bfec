"""Lloyd's k-Means with pluggable seeding, plus PAM (k-medoids).

All randomness flows through an explicit ``numpy.random.Generator`` (or
seed), so identical seeds give bit-identical partitions.  Ties in nearest
assignments always break toward the lowest center index.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientDataError, InvalidParameterError
from .rng import as_generator


@dataclass(frozen=True)
class SeedSet:
    """K initial centers and the name of the strategy that produced them."""

    seeds: np.ndarray  # K x D
    provenance: str


@dataclass(frozen=True)
class Partition:
    """Result of one k-Means run."""

    labels: np.ndarray  # N, values 0..K-1
    centers: np.ndarray  # K x D
    iterations: int
    distortion: float


def _check_data(data):
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[0] < 1:
        raise InvalidParameterError("data must be a non-empty N x D matrix")
    return data


def _check_k(k, n):
    k = int(k)
    if k < 1 or k > n:
        raise InvalidParameterError(f"k={k} must be in 1..{n}")
    return k


def sq_distances(data, centers):
    """Squared Euclidean distances, N x K."""
    d2 = (
        (data * data).sum(axis=1)[:, None]
        + (centers * centers).sum(axis=1)[None, :]
        - 2.0 * data @ centers.T
    )
    return np.maximum(d2, 0.0)


def forgy_init(data, k, rng):
    """Pick k distinct rows uniformly at random."""
    data = _check_data(data)
    k = _check_k(k, data.shape[0])
    rng = as_generator(rng)
    idx = rng.choice(data.shape[0], size=k, replace=False)
    return SeedSet(seeds=data[idx].copy(), provenance="forgy")


def kmeanspp_init(data, k, rng):
    """k-Means++ seeding: each new seed is drawn among the remaining rows
    with probability proportional to its squared distance to the nearest
    seed chosen so far (uniform fallback when all remaining distances are
    zero)."""
    data = _check_data(data)
    n = data.shape[0]
    k = _check_k(k, n)
    rng = as_generator(rng)

    chosen = np.empty(k, dtype=int)
    chosen[0] = rng.integers(n)
    d2 = sq_distances(data, data[chosen[:1]])[:, 0]
    available = np.ones(n, dtype=bool)
    available[chosen[0]] = False
    for j in range(1, k):
        weights = np.where(available, d2, 0.0)
        total = weights.sum()
        if total > 0.0:
            idx = rng.choice(n, p=weights / total)
        else:
            idx = rng.choice(np.flatnonzero(available))
        chosen[j] = idx
        available[idx] = False
        d2 = np.minimum(d2, sq_distances(data, data[idx : idx + 1])[:, 0])
    return SeedSet(seeds=data[chosen].copy(), provenance="kmeanspp")


def _assign(data, centers):
    return np.argmin(sq_distances(data, centers), axis=1)


def _distortion(data, centers, labels):
    diff = data - centers[labels]
    return float(np.einsum("ij,ij->", diff, diff))


def _update_centers(data, labels, k, centers):
    """Per-cluster means; empty clusters are repaired by promoting the point
    farthest from its current center to a singleton center."""
    new_centers = np.empty((k, data.shape[1]))
    counts = np.bincount(labels, minlength=k)
    for j in range(k):
        if counts[j] > 0:
            new_centers[j] = data[labels == j].mean(axis=0)
        else:
            new_centers[j] = centers[j]  # placeholder until repaired
    empties = np.flatnonzero(counts == 0)
    if empties.size:
        labels = labels.copy()
        d2 = ((data - new_centers[labels]) ** 2).sum(axis=1)
        for j in empties:
            far = int(np.argmax(d2))
            new_centers[j] = data[far]
            labels[far] = j
            d2[far] = 0.0
    return new_centers, labels


def lloyd(data, seeds, max_iter=100, trace=None):
    """Lloyd's algorithm from explicit seeds.

    Alternates nearest-center assignment and mean updates until the labels
    stop changing or ``max_iter`` rounds are done.  ``iterations`` counts
    completed update+assignment rounds after the initial assignment, so a
    fixed point reports 1.  ``trace``, if a list, receives the distortion
    after every round (non-increasing).
    """
    data = _check_data(data)
    if isinstance(seeds, SeedSet):
        centers = np.asarray(seeds.seeds, dtype=float)
    else:
        centers = np.asarray(seeds, dtype=float)
    if centers.ndim != 2 or centers.shape[1] != data.shape[1]:
        raise InvalidParameterError("seed dimension does not match data")
    if int(max_iter) < 1:
        raise InvalidParameterError("max_iter must be >= 1")
    k = centers.shape[0]

    labels = _assign(data, centers)
    iterations = 0
    for _ in range(int(max_iter)):
        centers, labels = _update_centers(data, labels, k, centers)
        new_labels = _assign(data, centers)
        iterations += 1
        if trace is not None:
            trace.append(_distortion(data, centers, new_labels))
        if np.array_equal(new_labels, labels):
            labels = new_labels
            break
        labels = new_labels
    return Partition(
        labels=labels,
        centers=centers,
        iterations=iterations,
        distortion=_distortion(data, centers, labels),
    )


def pam(data, k):
    """Partitioning Around Medoids with the classical BUILD + SWAP phases.

    BUILD greedily accumulates the k medoids minimizing total Euclidean
    distance to the nearest medoid; SWAP exhaustively applies the best
    strictly improving (medoid, non-medoid) exchange until none is left.
    Returns ``(medoid_indices, labels)`` with labels indexing medoid
    positions (ties to the lowest position).
    """
    data = _check_data(data)
    n = data.shape[0]
    k = _check_k(k, n)
    dist = np.sqrt(sq_distances(data, data))

    # BUILD
    medoids = [int(np.argmin(dist.sum(axis=1)))]
    dmin = dist[:, medoids[0]].copy()
    while len(medoids) < k:
        costs = np.minimum(dmin[None, :], dist).sum(axis=1)
        costs[medoids] = np.inf
        best = int(np.argmin(costs))
        medoids.append(best)
        dmin = np.minimum(dmin, dist[:, best])

    medoids = np.asarray(medoids)
    current_cost = dist[:, medoids].min(axis=1).sum()

    # SWAP
    while True:
        best_cost = current_cost
        best_swap = None
        is_medoid = np.zeros(n, dtype=bool)
        is_medoid[medoids] = True
        candidates = np.flatnonzero(~is_medoid)
        for pos in range(k):
            others = np.delete(medoids, pos)
            if others.size:
                d_wo = dist[:, others].min(axis=1)
            else:
                d_wo = np.full(n, np.inf)
            swap_costs = np.minimum(d_wo[None, :], dist[candidates]).sum(axis=1)
            i = int(np.argmin(swap_costs))
            if swap_costs[i] < best_cost:
                best_cost = swap_costs[i]
                best_swap = (pos, int(candidates[i]))
        if best_swap is None:
            break
        medoids = medoids.copy()
        medoids[best_swap[0]] = best_swap[1]
        current_cost = best_cost

    labels = np.argmin(dist[:, medoids], axis=1)
    return medoids, labels
