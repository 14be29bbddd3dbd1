"""lp- and c0-direct sums of component spaces.

A ``SumSpace`` is an exponent together with a finite ordered list of
component spaces; exponent 0 denotes the c0-style max-norm sum, values
in [1, inf) the usual p-sums, and ``math.inf`` the sup-norm container
that only ever arises as the dual of a p = 1 sum.  Elements are sparse:
a list of (index, coordinate array) pairs with strictly increasing
1-based indices.  A declared component without an entry (or with an
exactly zero entry) counts as a zero coordinate; the p = 1 and p = 0
case splits below depend on that distinction, so adding declared
components to a space can change the answers.

The module computes sum norms, dual spaces under the pairing
f(x) = sum_n f_n(x_n), exact norming elements, the support-functional
set J(x) of a nonzero element, its extreme points, the dual-norm
diameter of J(x), the supremum of that diameter over the space, and a
smoothness classification.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import components as comp
from .components import GEOMETRIC_TOL, ComponentSpace, SupportSet
from .errors import (
    DegenerateInputError,
    DimensionMismatchError,
    LpsumsError,
    NotEnumerableError,
    ValidationError,
)


@dataclass(frozen=True)
class SumSpace:
    """Exponent plus components.  p = 0 is the max-norm (c0-style) sum."""

    p: float
    components: tuple[ComponentSpace, ...]

    def __post_init__(self):
        if not self.components:
            raise ValidationError("a sum space needs at least one component")
        if not (self.p == 0.0 or self.p >= 1.0):
            raise ValidationError("exponent must be 0 or lie in [1, inf]")

    @property
    def q(self) -> float:
        """Conjugate exponent: q = inf for p = 1, p/(p-1) for 1 < p < inf,
        and q = 1 for the p = 0 sum by definition."""
        if self.p == 0.0:
            return 1.0
        if self.p == 1.0:
            return math.inf
        if self.p == math.inf:
            raise ValidationError("the sup-norm container is only a dual; no conjugate")
        return self.p / (self.p - 1.0)

    def component(self, index: int) -> ComponentSpace:
        return self.components[index - 1]

    @property
    def indices(self) -> range:
        return range(1, len(self.components) + 1)


def sum_space(p: float, components) -> SumSpace:
    return SumSpace(float(p), tuple(components))


class _SparseEntries:
    """Shared machinery for sparse sum-space elements."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        pairs = []
        for index, coords in entries:
            pairs.append((int(index), np.asarray(coords, dtype=float)))
        indices = [i for i, _ in pairs]
        if any(i < 1 for i in indices):
            raise ValidationError("entry indices are 1-based positive integers")
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValidationError("entry indices must be strictly increasing")
        self.entries = tuple(pairs)

    def entry(self, index: int) -> np.ndarray | None:
        for i, v in self.entries:
            if i == index:
                return v
        return None

    def support(self) -> tuple[int, ...]:
        """Indices carrying an exactly nonzero coordinate vector."""
        return tuple(i for i, v in self.entries if np.any(v != 0.0))

    @property
    def is_zero(self) -> bool:
        return not self.support()

    def scaled(self, c: float):
        return type(self)([(i, c * v) for i, v in self.entries])

    def plus(self, other, factor: float = 1.0):
        """self + factor * other, merging sparse entries."""
        merged: dict[int, np.ndarray] = {i: v.copy() for i, v in self.entries}
        for i, v in other.entries:
            if i in merged:
                merged[i] = merged[i] + factor * v
            else:
                merged[i] = factor * v
        return type(self)(sorted(merged.items()))

    def __repr__(self):
        inner = ", ".join(f"{i}: {list(v)}" for i, v in self.entries)
        return f"{type(self).__name__}({{{inner}}})"


class SumVector(_SparseEntries):
    """Sparse element of a sum space."""


class SumFunctional(_SparseEntries):
    """Sparse element of the dual, acting by f(x) = sum_n f_n(x_n)."""


def sum_vector(entries) -> SumVector:
    """Build a SumVector from an iterable of (index, coords) pairs or a dict."""
    if isinstance(entries, dict):
        entries = sorted(entries.items())
    return SumVector(entries)


def sum_functional(entries) -> SumFunctional:
    if isinstance(entries, dict):
        entries = sorted(entries.items())
    return SumFunctional(entries)


def validate_element(space: SumSpace, x: _SparseEntries) -> None:
    for i, v in x.entries:
        if i > len(space.components):
            raise ValidationError(
                f"entry index {i} exceeds the {len(space.components)} declared components"
            )
        if v.shape != (space.component(i).dim,):
            raise DimensionMismatchError(
                f"entry {i} has {v.shape[0] if v.ndim == 1 else v.shape} coordinates, "
                f"component expects {space.component(i).dim}"
            )


def component_norms(space: SumSpace, x: _SparseEntries) -> dict[int, float]:
    validate_element(space, x)
    return {i: comp.norm(space.component(i), v) for i, v in x.entries}


def sum_norm(space: SumSpace, x: SumVector) -> float:
    """The p-sum (or max, for p = 0 and the sup container) of the
    component norms."""
    norms = list(component_norms(space, x).values())
    if space.p == 0.0 or space.p == math.inf:
        return max(norms, default=0.0)
    if space.p == 1.0:
        return float(sum(norms))
    return float(sum(n ** space.p for n in norms) ** (1.0 / space.p))


def dual_sum_space(space: SumSpace) -> SumSpace:
    """The dual: exponent q with the component duals."""
    return SumSpace(space.q, tuple(comp.dual_space(c) for c in space.components))


def functional_norm(space: SumSpace, f: SumFunctional) -> float:
    """Norm of ``f`` in the dual of ``space`` (the q-sum of the component
    dual norms)."""
    return sum_norm(dual_sum_space(space), SumVector(f.entries))


def apply_functional(f: SumFunctional, x: SumVector) -> float:
    """f(x) = sum over common indices of the coordinate pairing."""
    by_index = dict(x.entries)
    total = 0.0
    for i, fv in f.entries:
        xv = by_index.get(i)
        if xv is not None:
            if fv.shape != xv.shape:
                raise DimensionMismatchError(f"entry {i}: {fv.shape} vs {xv.shape}")
            total += float(np.dot(fv, xv))
    return total


def norming_element(space: SumSpace, f: SumFunctional, eps: float = 1e-8) -> SumVector:
    """A unit vector y with f(y) = functional_norm(f).

    Per-component norming vectors are exact in finite dimensions, so
    attainment is exact for every kind; ``eps`` only expresses the
    guaranteed bound f(y) > ||f|| - eps.
    """
    if eps <= 0:
        raise ValidationError("eps must be positive")
    validate_element(space, f)
    if f.is_zero:
        raise DegenerateInputError("cannot norm the zero functional")
    duals = {i: comp.dual_space(space.component(i)) for i, _ in f.entries}
    fnorms = {
        i: comp.norm(duals[i], fv) for i, fv in f.entries if np.any(fv != 0.0)
    }
    if space.p == 1.0:
        nstar = min((i for i in fnorms), key=lambda i: (-fnorms[i], i))
        xv = comp.norming_vector(space.component(nstar), f.entry(nstar))
        return SumVector([(nstar, xv)])
    total = functional_norm(space, f)
    entries = []
    for i, fv in f.entries:
        if i not in fnorms:
            continue
        xv = comp.norming_vector(space.component(i), fv)
        if space.p == 0.0:
            entries.append((i, xv))
        else:
            weight = (fnorms[i] / total) ** (space.q - 1.0)
            entries.append((i, weight * xv))
    return SumVector(entries)


def max_attaining_indices(space: SumSpace, x: SumVector) -> tuple[int, ...]:
    """Indices whose component norm attains max_n ||x_n|| (relative
    tolerance GEOMETRIC_TOL).  Declared components without an entry
    never attain unless x = 0."""
    norms = component_norms(space, x)
    top = max(norms.values(), default=0.0)
    if top == 0.0:
        raise DegenerateInputError("max-attaining set of the zero vector")
    return tuple(i for i in sorted(norms) if norms[i] >= top * (1.0 - GEOMETRIC_TOL))


@dataclass(frozen=True, eq=False)
class SumSupportSet:
    """Exact description of J(x) for a nonzero x, per exponent:

    * 1 < p < inf: on the support, f_n is (||x_n|| / ||x||)^(p-1) times a
      member of J(x_n); off the support f_n = 0.  ``parts`` carries the
      scales and component support sets.
    * p = 1: f_n in J(x_n) on the support; off the support the whole
      component dual ball is free (``free_indices``).
    * p = 0: convex combinations sum_n lam_n g_n over the max-attaining
      indices with lam_n >= 0 summing to one and g_n in J(x_n); the
      closed hull is taken, so weights may vanish.
    """

    space: SumSpace
    x: SumVector
    parts: tuple[tuple[int, float, SupportSet], ...]
    free_indices: tuple[int, ...] = ()

    @property
    def p(self) -> float:
        return self.space.p

    def canonical(self) -> SumFunctional:
        """Deterministic member: lexicographically smallest extreme
        functional per component (the duality map at smooth points),
        zero on free coordinates, weight concentrated on the smallest
        max-attaining index for p = 0."""
        if self.p == 0.0:
            i, scale, sset = self.parts[0]
            return SumFunctional([(i, scale * sset.canonical())])
        return SumFunctional([(i, scale * sset.canonical()) for i, scale, sset in self.parts])

    def contains(self, f: SumFunctional, tol: float = GEOMETRIC_TOL) -> bool:
        """Membership of ``f`` in J(x) by the structural description."""
        validate_element(self.space, f)
        part_index = {i: (scale, sset) for i, scale, sset in self.parts}
        norms = component_norms(self.space, self.x)
        if self.p == 0.0:
            lam_total = 0.0
            for i, fv in f.entries:
                if not np.any(fv != 0.0):
                    continue
                if i not in part_index:
                    return False
                lam = comp.dual_norm(self.space.component(i), fv)
                lam_total += lam
                if not comp.in_support_set(self.space.component(i), self.x.entry(i), fv / lam, tol):
                    return False
            return abs(lam_total - 1.0) <= tol
        for i, fv in f.entries:
            if i in part_index or not np.any(fv != 0.0):
                continue
            if i in self.free_indices:
                if comp.dual_norm(self.space.component(i), fv) > 1.0 + tol:
                    return False
            else:
                return False
        for i, (scale, _) in part_index.items():
            fv = f.entry(i)
            if fv is None:
                fv = np.zeros(self.space.component(i).dim)
            g = fv / scale
            if not comp.in_support_set(self.space.component(i), self.x.entry(i), g, tol):
                return False
        return True


def support_functionals(space: SumSpace, x: SumVector) -> SumSupportSet:
    """The support-functional set J(x) of a nonzero x."""
    validate_element(space, x)
    if x.is_zero:
        raise DegenerateInputError("support functionals of the zero vector")
    if space.p == math.inf:
        raise ValidationError("support sets in the sup container are out of scope")
    if space.p == 0.0:
        parts = tuple(
            (i, 1.0, comp.support_set(space.component(i), x.entry(i)))
            for i in max_attaining_indices(space, x)
        )
        return SumSupportSet(space, x, parts)
    supp = x.support()
    if space.p == 1.0:
        parts = tuple(
            (i, 1.0, comp.support_set(space.component(i), x.entry(i))) for i in supp
        )
        free = tuple(i for i in space.indices if i not in supp)
        return SumSupportSet(space, x, parts, free)
    total = sum_norm(space, x)
    norms = component_norms(space, x)
    parts = tuple(
        (
            i,
            (norms[i] / total) ** (space.p - 1.0),
            comp.support_set(space.component(i), x.entry(i)),
        )
        for i in supp
    )
    return SumSupportSet(space, x, parts)


def is_support(space: SumSpace, x: SumVector, f: SumFunctional,
               tol: float = GEOMETRIC_TOL) -> bool:
    """Definitional check: ||f||_q = 1 and f(x) = ||x|| within ``tol``."""
    validate_element(space, x)
    validate_element(space, f)
    if x.is_zero:
        raise DegenerateInputError("support functionals of the zero vector")
    nx = sum_norm(space, x)
    nf = functional_norm(space, f)
    return abs(nf - 1.0) <= tol and apply_functional(f, x) >= nx - tol * max(nx, 1.0)


def _component_extremes(space: SumSpace, i: int, x: SumVector) -> list[np.ndarray]:
    return list(comp.support_set(space.component(i), x.entry(i)).functionals)


def support_extreme_points(space: SumSpace, x: SumVector,
                           max_count: int = 100_000) -> list[SumFunctional]:
    """The extreme points of J(x).

    * 1 < p < inf: products over the support of the scaled component
      extreme sets.
    * p = 1: products of component extreme sets on the support with
      dual-ball vertices on every free coordinate; smooth components off
      the support make the set non-enumerable (their dual spheres are
      all extreme).
    * p = 0: single-index functionals g * e_n over max-attaining n with
      g extreme in J(x_n).
    """
    sset = support_functionals(space, x)
    if space.p == 0.0:
        out = []
        for i, scale, part in sset.parts:
            for g in part.functionals:
                out.append(SumFunctional([(i, scale * g)]))
        return out
    factors: list[tuple[int, list[np.ndarray]]] = []
    for i, scale, part in sset.parts:
        factors.append((i, [scale * g for g in part.functionals]))
    for i in sset.free_indices:
        verts = comp.dual_ball_vertices(space.component(i))
        if verts is None:
            raise NotEnumerableError(
                f"component {i} is smooth with an infinite dual-ball extreme set"
            )
        factors.append((i, [np.asarray(g) for g in verts]))
    count = 1
    for _, choices in factors:
        count *= len(choices)
        if count > max_count:
            raise NotEnumerableError(
                f"extreme-point product exceeds the cap ({max_count})"
            )
    factors.sort(key=lambda pair: pair[0])
    out = []
    for combo in itertools.product(*(choices for _, choices in factors)):
        out.append(SumFunctional([(i, g) for (i, _), g in zip(factors, combo)]))
    return out


def support_diameter(space: SumSpace, x: SumVector) -> float:
    """The dual-norm diameter of J(x).

    For 1 < p < inf this is the weighted q-mean of the component
    diameters, (sum_n (||x_n||/||x||)^p D_n^q)^(1/q).  For p = 1 it is
    sup_n D_n when every declared coordinate is supported and exactly 2
    otherwise; for p = 0 it is D at the unique max-attaining coordinate
    and exactly 2 when the max is attained more than once.
    """
    validate_element(space, x)
    if x.is_zero:
        raise DegenerateInputError("diameter of J at the zero vector")
    if space.p == math.inf:
        raise ValidationError("diameters in the sup container are out of scope")
    if space.p == 0.0:
        attain = max_attaining_indices(space, x)
        if len(attain) > 1:
            return 2.0
        i = attain[0]
        return comp.support_diameter(space.component(i), x.entry(i))
    supp = x.support()
    diams = {i: comp.support_diameter(space.component(i), x.entry(i)) for i in supp}
    if space.p == 1.0:
        if len(supp) < len(space.components):
            return 2.0
        return max(diams.values())
    q = space.q
    total = sum_norm(space, x)
    norms = component_norms(space, x)
    acc = sum((norms[i] / total) ** space.p * diams[i] ** q for i in supp)
    return float(acc ** (1.0 / q))


def sum_max_support_diameter(space: SumSpace) -> float:
    """sup over nonzero x of the J(x) diameter: the component-wise
    supremum for 1 < p < inf, and exactly 2 for p in {1, 0}."""
    if space.p in (0.0, 1.0):
        return 2.0
    if space.p == math.inf:
        raise ValidationError("the sup container is out of scope as a primal space")
    return max(comp.max_support_diameter(c) for c in space.components)


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    eps_smooth: bool
    diameter: float


def smoothness_report(space: SumSpace, x: SumVector, eps: float) -> SmoothnessReport:
    """Smoothness classification of a nonzero x.

    ``smooth`` holds iff the J(x) diameter vanishes; the structural
    characterisation (all supported components smooth, plus full
    support for p = 1, plus a unique max index for p = 0) is evaluated
    independently and must agree.
    """
    if not (0.0 <= eps < 2.0):
        raise ValidationError("eps must lie in [0, 2)")
    d = support_diameter(space, x)
    supp = x.support()
    all_smooth = all(
        comp.is_smooth_point(space.component(i), x.entry(i)) for i in supp
    )
    if space.p == 1.0:
        structural = all_smooth and len(supp) == len(space.components)
    elif space.p == 0.0:
        attain = max_attaining_indices(space, x)
        structural = len(attain) == 1 and comp.is_smooth_point(
            space.component(attain[0]), x.entry(attain[0])
        )
    else:
        structural = all_smooth
    if structural != (d == 0.0):
        raise LpsumsError(
            f"smoothness cross-check failed: structural={structural}, diameter={d}"
        )
    return SmoothnessReport(smooth=d == 0.0, eps_smooth=d <= eps, diameter=d)
