"""Deterministic, seedless direction grids.

Sampling-based checks (falsification sweeps, dual-norm lower bounds)
must be reproducible bit for bit, so no RNG is involved: dimension one
alternates signs, dimension two walks equispaced angles, and higher
dimensions map a Korobov lattice through the normal quantile before
normalising (rows of Gaussians are uniform on the sphere, and the
lattice makes the construction deterministic).
"""

from __future__ import annotations

import math
from functools import lru_cache
from statistics import NormalDist

import numpy as np

_NORMAL = NormalDist()

# square roots of primes: irrational, rationally independent generators
_ALPHAS = [math.sqrt(p) for p in (2, 3, 5, 7, 11, 13, 17, 19)]


@lru_cache(maxsize=None)
def sphere_grid(dim: int, count: int) -> np.ndarray:
    """``count`` unit directions in R^dim, deterministic in both args."""
    if dim < 1 or count < 1:
        raise ValueError("dim and count must be positive")
    if dim == 1:
        return np.array([[1.0 if k % 2 == 0 else -1.0] for k in range(count)])
    if dim == 2:
        angles = 2.0 * math.pi * np.arange(count) / count
        return np.column_stack([np.cos(angles), np.sin(angles)])
    rows = np.empty((count, dim))
    for k in range(count):
        for j in range(dim):
            u = math.fmod((k + 1) * _ALPHAS[j % len(_ALPHAS)] + 0.5, 1.0)
            # keep the quantile argument away from {0, 1}
            u = min(max(u, 1e-12), 1.0 - 1e-12)
            rows[k, j] = _NORMAL.inv_cdf(u)
    lengths = np.linalg.norm(rows, axis=1)
    lengths[lengths == 0.0] = 1.0
    return rows / lengths[:, None]
