"""Brute-force reference computations.

Everything here goes through the definitions only -- one-dimensional
convex minimisation of lambda -> ||x + lambda y||, pair scans over
enumerated extreme points, and sampled norm ratios -- so the results
are independent of the closed-form support/diameter formulas they are
used to cross-check.  All sampling is deterministic (see grids).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import components as comp
from . import sums
from .errors import DegenerateInputError, NotEnumerableError
from .grids import sphere_grid

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the reference computations (all strictly positive)."""

    golden_section_width: float = 1e-12
    grid_directions: int = 1024
    pair_scan_limit: int = 200_000

    def __post_init__(self):
        if self.golden_section_width <= 0 or self.grid_directions <= 0 \
                or self.pair_scan_limit <= 0:
            raise ValueError("oracle configuration values must be positive")


DEFAULT_CONFIG = OracleConfig()


@dataclass(frozen=True)
class MinNormResult:
    value: float
    argmin: float


def golden_section_min(fn, a: float, b: float, width: float) -> tuple[float, float]:
    """Minimise a convex ``fn`` on [a, b] down to bracket ``width``.

    The requested width is floored at the local float resolution (a
    bracket sitting at large magnitudes cannot shrink below a few ulps)
    and the iteration count is capped accordingly.  Returns (argmin,
    value) of the best point actually evaluated, so refining ``width``
    can only improve the reported minimum.
    """
    best_x, best_v = a, fn(a)
    v = fn(b)
    if v < best_v:
        best_x, best_v = b, v
    c = b - (b - a) * _INV_GOLDEN
    d = a + (b - a) * _INV_GOLDEN
    fc, fd = fn(c), fn(d)
    for _ in range(400):
        floor = 8.0 * np.finfo(float).eps * max(abs(a), abs(b), 1e-300)
        if b - a <= max(width, floor):
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_GOLDEN
            fc = fn(c)
            x, v = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_GOLDEN
            fd = fn(d)
            x, v = d, fd
        if v < best_v:
            best_x, best_v = x, v
    mid = 0.5 * (a + b)
    v = fn(mid)
    if v < best_v:
        best_x, best_v = mid, v
    return best_x, best_v


def oracle_min_norm(space: sums.SumSpace, x: sums.SumVector, y: sums.SumVector,
                    config: OracleConfig = DEFAULT_CONFIG) -> MinNormResult:
    """Global minimum of the convex map lambda -> ||x + lambda y||.

    Outside [-2||x||/||y||, 2||x||/||y||] the norm exceeds ||x||
    (||x + ly|| >= |l| ||y|| - ||x||), so the bracket contains the
    minimiser.  lambda = 0 is always evaluated, hence the reported
    minimum never exceeds ||x||.
    """
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    ny = sums.sum_norm(space, y)
    if ny == 0.0:
        raise DegenerateInputError("direction y must be nonzero")
    nx = sums.sum_norm(space, x)
    if nx == 0.0:
        return MinNormResult(0.0, 0.0)

    def fn(lam: float) -> float:
        return sums.sum_norm(space, x.plus(y, lam))

    radius = 2.0 * nx / ny
    width = config.golden_section_width * (1.0 + nx)
    best_x, best_v = golden_section_min(fn, -radius, radius, width)
    if nx < best_v:
        best_x, best_v = 0.0, nx
    return MinNormResult(best_v, best_x)


def oracle_diameter(space: sums.SumSpace, x: sums.SumVector,
                    config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Diameter of J(x) by brute-force pair scan over its extreme points.

    For p = 1 with an unsupported declared coordinate no enumeration is
    needed: the free dual ball contributes a +/-g pair at distance 2
    there, and 2 is an upper bound on any distance between norm-one
    functionals, so the diameter is exactly 2.
    """
    sums.validate_element(space, x)
    if x.is_zero:
        raise DegenerateInputError("diameter of J at the zero vector")
    if space.p == 1.0 and len(x.support()) < len(space.components):
        return 2.0
    # cap the enumeration so that the pair scan stays within budget
    max_points = int((1 + math.isqrt(1 + 8 * config.pair_scan_limit)) // 2)
    points = sums.support_extreme_points(space, x, max_count=max_points)
    dual = sums.dual_sum_space(space)
    best = 0.0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            diff = sums.SumVector(points[i].plus(points[j], -1.0).entries)
            best = max(best, sums.sum_norm(dual, diff))
    return best


def oracle_dual_norm(space: sums.SumSpace, f: sums.SumFunctional, samples: int = 64,
                     config: OracleConfig = DEFAULT_CONFIG) -> float:
    """Certified lower bound on the operator norm of ``f``:
    the best ratio f(x)/||x|| over a deterministic sample grid plus the
    exact norming-element candidate."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    sums.validate_element(space, f)
    if f.is_zero:
        return 0.0
    best = 0.0
    candidates = [sums.norming_element(space, f)]
    indices = [i for i, _ in f.entries]
    for k in range(samples):
        entries = []
        for pos, i in enumerate(indices):
            dim = space.component(i).dim
            grid = sphere_grid(dim, max(samples, 8))
            entries.append((i, grid[(k + pos) % len(grid)]))
        candidates.append(sums.SumVector(entries))
    for x in candidates:
        nx = sums.sum_norm(space, x)
        if nx == 0.0:
            continue
        best = max(best, sums.apply_functional(f, x) / nx)
    return best
