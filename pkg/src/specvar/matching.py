"""Optimal matching distances via exact bottleneck assignment.

The bottleneck assignment of a nonnegative cost matrix is the permutation
minimizing the largest selected entry. It is computed exactly: binary
search over the sorted distinct cost values with a maximum-bipartite-
matching feasibility test (augmenting paths) at each threshold. The
Euclidean and hyperbolic matching distances of two equal-size spectra are
the bottleneck values of the cost matrices |a_i - b_j| and
|a_i - b_j| / |1 - conj(a_i) b_j| respectively.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateInput, InvalidInputs
from .linalg import TOL_EIG, check_size_match


def _augment(i: int, allowed: np.ndarray, match_row_of_col: np.ndarray, visited: np.ndarray) -> bool:
    for j in np.flatnonzero(allowed[i]):
        if visited[j]:
            continue
        visited[j] = True
        if match_row_of_col[j] < 0 or _augment(match_row_of_col[j], allowed, match_row_of_col, visited):
            match_row_of_col[j] = i
            return True
    return False


def _perfect_matching(allowed: np.ndarray) -> np.ndarray | None:
    """Row->column perfect matching of a boolean adjacency, or None."""
    n = allowed.shape[0]
    match_row_of_col = np.full(n, -1, dtype=int)
    for i in range(n):
        visited = np.zeros(n, dtype=bool)
        if not _augment(i, allowed, match_row_of_col, visited):
            return None
    perm = np.empty(n, dtype=int)
    for j, i in enumerate(match_row_of_col):
        perm[i] = j
    return perm


def bottleneck_assignment(cost) -> tuple[np.ndarray, float]:
    """Permutation minimizing max_i cost[i, perm[i]], and that minimax value.

    Exact: thresholds are the distinct cost values; the smallest feasible
    one is found by binary search (ties resolve to the smaller value).
    """
    cost = np.asarray(cost, dtype=float)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1] or cost.shape[0] == 0:
        raise InvalidInputs(f"cost matrix must be square and nonempty, got shape {cost.shape}")
    if not np.all(np.isfinite(cost)) or np.any(cost < 0):
        raise InvalidInputs("cost entries must be finite and nonnegative")
    levels = np.unique(cost)
    lo, hi = 0, len(levels) - 1
    perm = _perfect_matching(cost <= levels[hi])
    assert perm is not None  # complete graph at the top threshold
    while lo < hi:
        mid = (lo + hi) // 2
        candidate = _perfect_matching(cost <= levels[mid])
        if candidate is not None:
            perm, hi = candidate, mid
        else:
            lo = mid + 1
    return perm, float(levels[hi])


def d_euclid(sa, sb) -> float:
    """Euclidean optimal matching distance of two equal-size multisets."""
    sa, sb = check_size_match(sa, sb)
    cost = np.abs(sa[:, None] - sb[None, :])
    return bottleneck_assignment(cost)[1]


def d_hyper(sa, sb) -> float:
    """Hyperbolic optimal matching distance; all points in the closed disk."""
    sa, sb = check_size_match(sa, sb)
    for s in (sa, sb):
        if np.any(np.abs(s) > 1.0 + TOL_EIG):
            raise DegenerateInput("hyperbolic matching requires spectra in the closed unit disk")
    den = 1.0 - np.conj(sa)[:, None] * sb[None, :]
    if np.any(np.abs(den) < 1e-15):
        raise DegenerateInput("degenerate pair with conj(a) b = 1")
    cost = np.minimum(np.abs(sa[:, None] - sb[None, :]) / np.abs(den), 1.0)
    return bottleneck_assignment(cost)[1]
