"""Finite-dimensional real normed spaces used as direct-sum components.

Five kinds of space are supported:

* ``euclidean(d)`` -- the Euclidean norm on R^d,
* ``lr(d, r)``     -- the coordinate r-norm with 1 < r < infinity,
* ``l1(d)``        -- the coordinate 1-norm,
* ``linf(d)``      -- the coordinate max-norm,
* ``polygon(V)``   -- the Minkowski gauge of a symmetric convex polygon
                      in R^2 given by its vertex list.

For each kind the module computes the norm, the dual space, dual norms,
the set of support functionals of a nonzero vector (a singleton for the
smooth kinds, a face of the dual-ball polytope for the polyhedral ones),
the achievable-value interval {f(w) : f in J(v)}, and the dual-norm
diameter of J(v) together with its supremum over the whole space.

Functionals act by the standard coordinate pairing, so vectors and
functionals are both plain float arrays of length ``dim``.

All comparisons use the single geometric tolerance ``GEOMETRIC_TOL``
(relative where a natural scale exists).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    ConstructionError,
    DegenerateInputError,
    DimensionMismatchError,
    ValidationError,
)

# Single geometric tolerance for active-vertex detection, support checks
# and norm comparisons.  Relative where a natural scale exists.
GEOMETRIC_TOL = 1e-9

KINDS = ("euclidean", "lr", "l1", "linf", "polygon")


@dataclass(frozen=True)
class ComponentSpace:
    """A finite-dimensional real normed space.

    ``r`` is set only for the ``lr`` kind (strictly between 1 and
    infinity; r = 1 and r = infinity are the dedicated polyhedral
    kinds).  ``vertices`` is set only for the ``polygon`` kind and must
    list the vertices of a centrally symmetric, strictly convex polygon
    in counterclockwise order with the origin in its interior.
    """

    kind: str
    dim: int
    r: float | None = None
    vertices: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown space kind {self.kind!r}")
        if self.dim < 1:
            raise ValidationError("dim must be a positive integer")
        if self.kind == "lr":
            if self.r is None or not (1.0 < self.r < math.inf):
                raise ValidationError("lr spaces need an exponent r with 1 < r < inf")
        elif self.r is not None:
            raise ValidationError(f"kind {self.kind!r} takes no exponent")
        if self.kind == "polygon":
            if self.dim != 2:
                raise ValidationError("polygon spaces are two-dimensional")
            _validate_polygon(self.vertices)
        elif self.vertices is not None:
            raise ValidationError(f"kind {self.kind!r} takes no vertex list")

    @property
    def smooth_kind(self) -> bool:
        return self.kind in ("euclidean", "lr")


def euclidean(dim: int) -> ComponentSpace:
    return ComponentSpace("euclidean", dim)


def lr(dim: int, r: float) -> ComponentSpace:
    return ComponentSpace("lr", dim, r=float(r))


def l1(dim: int) -> ComponentSpace:
    return ComponentSpace("l1", dim)


def linf(dim: int) -> ComponentSpace:
    return ComponentSpace("linf", dim)


def polygon(vertices) -> ComponentSpace:
    verts = tuple((float(x), float(y)) for x, y in vertices)
    return ComponentSpace("polygon", 2, vertices=verts)


def _cross2(a, b) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def _validate_polygon(vertices) -> None:
    if vertices is None or len(vertices) < 4 or len(vertices) % 2 != 0:
        raise ValidationError("polygon needs an even vertex count >= 4")
    arr = np.asarray(vertices, dtype=float)
    scale = float(np.max(np.abs(arr)))
    if scale == 0.0:
        raise ValidationError("polygon vertices are all zero")
    # central symmetry: every vertex must have its negative in the list
    for v in arr:
        if not np.any(np.all(np.abs(arr + v) <= GEOMETRIC_TOL * scale, axis=1)):
            raise ValidationError("polygon vertex list is not symmetric")
    n = len(arr)
    for i in range(n):
        a = arr[i]
        b = arr[(i + 1) % n]
        c = arr[(i + 2) % n]
        turn = _cross2(b - a, c - b)
        if turn <= GEOMETRIC_TOL * scale * scale:
            raise ValidationError(
                "polygon vertices must be in strictly convex counterclockwise position"
            )
        if _cross2(a, b) <= GEOMETRIC_TOL * scale * scale:
            raise ValidationError("polygon must contain the origin strictly inside")


def as_vector(space: ComponentSpace, coords) -> np.ndarray:
    """Validate and return ``coords`` as a float array living in ``space``."""
    v = np.asarray(coords, dtype=float)
    if v.shape != (space.dim,):
        raise DimensionMismatchError(
            f"expected {space.dim} coordinates, got shape {v.shape}"
        )
    return v


@lru_cache(maxsize=None)
def _polygon_polar_vertices(vertices: tuple) -> tuple:
    """Vertices of the polar polygon, one per primal edge, in ccw order.

    The edge through v_i, v_{i+1} contributes the functional a solving
    a(v_i) = a(v_{i+1}) = 1; the solve is exact in 2-D, no generic hull
    code is involved.
    """
    arr = np.asarray(vertices, dtype=float)
    n = len(arr)
    polar = []
    for i in range(n):
        vi = arr[i]
        vj = arr[(i + 1) % n]
        det = vi[0] * vj[1] - vi[1] * vj[0]
        # det == 0 would mean the edge line passes through the origin;
        # excluded by validation.
        a = np.array([(vj[1] - vi[1]) / det, (vi[0] - vj[0]) / det])
        polar.append((float(a[0]), float(a[1])))
    return tuple(polar)


def norm(space: ComponentSpace, v) -> float:
    """Norm of ``v`` under the space's kind (Minkowski gauge for polygons)."""
    v = as_vector(space, v)
    if space.kind == "euclidean":
        return float(np.linalg.norm(v))
    if space.kind == "lr":
        return float(np.sum(np.abs(v) ** space.r) ** (1.0 / space.r))
    if space.kind == "l1":
        return float(np.sum(np.abs(v)))
    if space.kind == "linf":
        return float(np.max(np.abs(v)))
    # polygon: gauge(v) = max over edge functionals a of a.v
    polar = np.asarray(_polygon_polar_vertices(space.vertices))
    return float(np.max(polar @ v))


def dual_space(space: ComponentSpace) -> ComponentSpace:
    """The dual space under the coordinate pairing.

    euclidean is self-dual, lr(d, r) pairs with lr(d, r'), l1 with linf,
    and a polygon space with the gauge of its polar polytope.
    """
    if space.kind == "euclidean":
        return space
    if space.kind == "lr":
        rc = space.r / (space.r - 1.0)
        return lr(space.dim, rc)
    if space.kind == "l1":
        return linf(space.dim)
    if space.kind == "linf":
        return l1(space.dim)
    return polygon(_polygon_polar_vertices(space.vertices))


def dual_norm(space: ComponentSpace, f) -> float:
    """Operator norm of the functional ``f``: sup{f(v) : norm(v) <= 1}."""
    return norm(dual_space(space), f)


def dual_ball_vertices(space: ComponentSpace) -> np.ndarray | None:
    """Extreme points of the dual unit ball, or None for the smooth kinds
    (whose dual balls have the whole sphere as extreme points)."""
    if space.kind == "l1":
        # dual is linf: all sign vectors
        return np.array(list(itertools.product((-1.0, 1.0), repeat=space.dim)))
    if space.kind == "linf":
        # dual is l1: +/- basis vectors
        eye = np.eye(space.dim)
        return np.concatenate([eye, -eye])
    if space.kind == "polygon":
        return np.asarray(_polygon_polar_vertices(space.vertices), dtype=float)
    return None


def unit_ball_vertices(space: ComponentSpace) -> np.ndarray:
    """Extreme points of the primal unit ball (polyhedral kinds only)."""
    if space.kind == "l1":
        eye = np.eye(space.dim)
        return np.concatenate([eye, -eye])
    if space.kind == "linf":
        return np.array(list(itertools.product((-1.0, 1.0), repeat=space.dim)))
    if space.kind == "polygon":
        return np.asarray(space.vertices, dtype=float)
    raise ValidationError(f"{space.kind} unit ball is not a polytope")


@dataclass(frozen=True, eq=False)
class SupportSet:
    """The set J(v) of support functionals of a nonzero v.

    Either a singleton (smooth kinds: the duality map) or the face of
    the dual-ball polytope exposed by v, listed by its extreme points.
    The extreme list is irredundant because the points are vertices of
    the dual ball.
    """

    functionals: tuple
    singleton: bool

    def __post_init__(self):
        if self.singleton and len(self.functionals) != 1:
            raise ValidationError("singleton support set with != 1 functional")

    @property
    def is_smooth(self) -> bool:
        return len(self.functionals) == 1

    def canonical(self) -> np.ndarray:
        """Deterministic representative: the unique functional, or the
        lexicographically smallest extreme point."""
        return min(self.functionals, key=lambda g: tuple(g))

    def values(self, w: np.ndarray) -> "Interval":
        vals = [float(np.dot(g, w)) for g in self.functionals]
        return Interval(min(vals), max(vals))


@dataclass(frozen=True)
class Interval:
    """Closed real interval; endpoints of achievable-value sets."""

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValidationError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    def contains(self, t: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= t <= self.hi + tol

    def min_abs(self) -> float:
        """Distance of the interval from zero."""
        if self.lo <= 0.0 <= self.hi:
            return 0.0
        return min(abs(self.lo), abs(self.hi))

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def scaled(self, c: float) -> "Interval":
        if c >= 0:
            return Interval(c * self.lo, c * self.hi)
        return Interval(c * self.hi, c * self.lo)


ZERO_INTERVAL = Interval(0.0, 0.0)


def support_set(space: ComponentSpace, v) -> SupportSet:
    """All support functionals of a nonzero v: the g with dual norm one
    and g(v) = norm(v).

    Smooth kinds return the explicit duality map; polyhedral kinds
    return the dual-ball vertices active at v (detected with relative
    tolerance GEOMETRIC_TOL).
    """
    v = as_vector(space, v)
    nv = norm(space, v)
    if nv == 0.0:
        raise DegenerateInputError("support set of the zero vector is undefined")
    if space.kind == "euclidean":
        return SupportSet((v / nv,), singleton=True)
    if space.kind == "lr":
        g = np.sign(v) * np.abs(v) ** (space.r - 1.0) / nv ** (space.r - 1.0)
        return SupportSet((g,), singleton=True)
    verts = dual_ball_vertices(space)
    vals = verts @ v
    active = verts[vals >= nv - GEOMETRIC_TOL * nv]
    ordered = sorted((tuple(g) for g in active))
    return SupportSet(tuple(np.array(g) for g in ordered), singleton=False)


def in_support_set(space: ComponentSpace, v, g, tol: float = GEOMETRIC_TOL) -> bool:
    """Membership test for J(v) that needs no hull computation:
    g lies in J(v) iff dual_norm(g) <= 1 and g(v) = norm(v)."""
    v = as_vector(space, v)
    g = as_vector(space, g)
    nv = norm(space, v)
    if nv == 0.0:
        raise DegenerateInputError("support set of the zero vector is undefined")
    return dual_norm(space, g) <= 1.0 + tol and float(np.dot(g, v)) >= nv * (1.0 - tol)


def support_values(space: ComponentSpace, v, w) -> Interval:
    """The achievable values {f(w) : f in J(v)} as a closed interval."""
    w = as_vector(space, w)
    return support_set(space, v).values(w)


def support_diameter(space: ComponentSpace, v) -> float:
    """Diameter of J(v) measured in the dual norm (0 at smooth points)."""
    sset = support_set(space, v)
    if sset.is_smooth:
        return 0.0
    dual = dual_space(space)
    best = 0.0
    for g1, g2 in itertools.combinations(sset.functionals, 2):
        best = max(best, norm(dual, g1 - g2))
    return best


def is_smooth_point(space: ComponentSpace, v) -> bool:
    return support_set(space, v).is_smooth


def max_support_diameter(space: ComponentSpace) -> float:
    """sup of support_diameter over all nonzero vectors.

    Zero for the smooth kinds.  For a polyhedral kind the supremum is
    attained in a unit-ball vertex direction, because J(v) is the face
    of the dual ball exposed by v, every face lies in a facet, and the
    facets are exposed exactly by the primal vertices.
    """
    if space.smooth_kind:
        return 0.0
    return max(support_diameter(space, u) for u in unit_ball_vertices(space))


def norming_vector(space: ComponentSpace, f) -> np.ndarray:
    """A unit vector v with f(v) = dual_norm(f), for a nonzero functional.

    By reflexivity this is a support functional of f computed in the
    dual space, so the construction is exact for every kind.
    """
    f = as_vector(space, f)
    if dual_norm(space, f) == 0.0:
        raise DegenerateInputError("norming vector of the zero functional is undefined")
    return support_set(dual_space(space), f).canonical()


def _hexagon(t: float) -> ComponentSpace:
    return polygon([(1.0, -t), (1.0, t), (0.0, 1.0), (-1.0, t), (-1.0, -t), (0.0, -1.0)])


def polygon_family(n: int) -> ComponentSpace:
    """A polygon space whose max support diameter is 2 - 1/n (within 1e-6).

    Family: the symmetric hexagons H(t) = conv{(+-1, +-t), (0, +-1)}
    for t in (0, 1).  Their polar is conv{(+-1, 0), (+-(1-t), +-1)} and
    a short computation gives max support diameter = max(2t, 2(1-t), 1),
    which on the bracket t in [1/2, 1) equals 2t: continuous, strictly
    increasing, covering [1, 2).  The target 2 - 1/n is reached by
    bisection on that bracket down to width 5e-8 (slope 2 then puts the
    diameter within 1e-7 < 1e-6 of the target).
    """
    if n < 1:
        raise ValidationError("polygon_family needs n >= 1")
    target = 2.0 - 1.0 / n
    lo, hi = 0.5, 1.0 - 1.0 / (8.0 * n)
    f_lo = max_support_diameter(_hexagon(lo))
    f_hi = max_support_diameter(_hexagon(hi))
    if not (f_lo <= target <= f_hi):
        raise ConstructionError(
            f"hexagon bracket [{lo}, {hi}] gives diameters [{f_lo}, {f_hi}], "
            f"which do not straddle {target}"
        )
    while hi - lo > 5e-8:
        mid = 0.5 * (lo + hi)
        if max_support_diameter(_hexagon(mid)) < target:
            lo = mid
        else:
            hi = mid
    space = _hexagon(0.5 * (lo + hi))
    achieved = max_support_diameter(space)
    if abs(achieved - target) > 1e-6:
        raise ConstructionError(
            f"bisection landed at diameter {achieved}, target {target}"
        )
    return space
