"""Birkhoff-James orthogonality, semi-inner products, and pointwise
symmetry in direct sums.

x is Birkhoff-James orthogonal to y (x B-perp y) when
||x + lambda y|| >= ||x|| for every real lambda; equivalently (James)
when some support functional of x annihilates y.  Because J(x) is
compact and convex, {f(y) : f in J(x)} is a closed interval, which
turns every decision here into interval arithmetic over the component
support sets:

* 1 < p < inf: x B-perp y iff 0 lies in the sum over the support of the
  intervals ||x_n||^(p-1) * {g(y_n) : g in J(x_n)} (the hull of a sum of
  independently ranging terms is the sum of the hulls).
* p = 1: the support interval may miss zero by up to the mass
  sum ||y_n|| carried on the unsupported declared coordinates, where
  the dual ball is free.
* p = 0: zero must lie in the hull of the per-index intervals over the
  max-attaining coordinates.

A semi-inner product arises from a selector assigning one support
functional to each line; ranging over selectors, [x, y] sweeps exactly
||x|| * {f(y) : f in J(x)}, which is what the symmetry and commuting
decisions below consume.  Everything is a pure function; the
falsification sweeps use the deterministic grids.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import components as comp
from . import oracles, sums
from .components import GEOMETRIC_TOL, ComponentSpace, Interval
from .errors import DegenerateInputError, LpsumsError, ValidationError
from .grids import sphere_grid
from .sums import SumFunctional, SumSpace, SumVector


class TriBool(enum.Enum):
    """Decision value for the symmetry predicates: ``UNKNOWN`` is used
    when no implemented procedure can decide (never as a hedge where a
    theorem gives the answer)."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def _tri_and(*values: TriBool) -> TriBool:
    if TriBool.NO in values:
        return TriBool.NO
    if TriBool.UNKNOWN in values:
        return TriBool.UNKNOWN
    return TriBool.YES


def _tri_or(*values: TriBool) -> TriBool:
    if TriBool.YES in values:
        return TriBool.YES
    if TriBool.UNKNOWN in values:
        return TriBool.UNKNOWN
    return TriBool.NO


# ---------------------------------------------------------------------------
# orthogonality decisions
# ---------------------------------------------------------------------------


def bj_orthogonal_oracle(space: SumSpace, x: SumVector, y: SumVector,
                         tol: float = 1e-7,
                         config: oracles.OracleConfig = oracles.DEFAULT_CONFIG) -> bool:
    """Definition-based decision: minimise ||x + lambda y|| by golden
    section and compare with ||x||."""
    if tol <= 0:
        raise ValidationError("tol must be positive")
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        return True
    if y.is_zero:
        return True
    result = oracles.oracle_min_norm(space, x, y, config)
    return result.value >= sums.sum_norm(space, x) - tol


def _entry_or_zero(space: SumSpace, z: SumVector, i: int) -> np.ndarray:
    v = z.entry(i)
    if v is None:
        return np.zeros(space.component(i).dim)
    return v


def bj_orthogonal(space: SumSpace, x: SumVector, y: SumVector,
                  tol: float = GEOMETRIC_TOL) -> bool:
    """Characterisation-based decision (see module docstring)."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        return True
    norms = sums.component_norms(space, x)
    if space.p == 0.0:
        endpoints = []
        for i in sums.max_attaining_indices(space, x):
            iv = comp.support_values(space.component(i), x.entry(i),
                                     _entry_or_zero(space, y, i))
            endpoints.extend((iv.lo, iv.hi))
        hull = Interval(min(endpoints), max(endpoints))
        return hull.contains(0.0, tol * (1.0 + abs(hull.lo) + abs(hull.hi)))
    if space.p == 1.0:
        total = comp.ZERO_INTERVAL
        for i in x.support():
            total = total + comp.support_values(space.component(i), x.entry(i),
                                                _entry_or_zero(space, y, i))
        supp = set(x.support())
        tail = sum(
            comp.norm(space.component(i), v)
            for i, v in y.entries if i not in supp
        )
        scale = 1.0 + abs(total.lo) + abs(total.hi) + tail
        return total.min_abs() <= tail + tol * scale
    total = comp.ZERO_INTERVAL
    for i in x.support():
        iv = comp.support_values(space.component(i), x.entry(i),
                                 _entry_or_zero(space, y, i))
        total = total + iv.scaled(norms[i] ** (space.p - 1.0))
    return total.contains(0.0, tol * (1.0 + abs(total.lo) + abs(total.hi)))


def achievable_values(space: SumSpace, x: SumVector, y: SumVector) -> Interval:
    """The closed interval {f(y) : f in J(x)} for a nonzero x."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        raise DegenerateInputError("J(x) is undefined for x = 0")
    if space.p == 0.0:
        endpoints = []
        for i in sums.max_attaining_indices(space, x):
            iv = comp.support_values(space.component(i), x.entry(i),
                                     _entry_or_zero(space, y, i))
            endpoints.extend((iv.lo, iv.hi))
        return Interval(min(endpoints), max(endpoints))
    total = comp.ZERO_INTERVAL
    if space.p == 1.0:
        for i in x.support():
            total = total + comp.support_values(space.component(i), x.entry(i),
                                                _entry_or_zero(space, y, i))
        supp = set(x.support())
        tail = sum(
            comp.norm(space.component(i), v)
            for i, v in y.entries if i not in supp
        )
        return total + Interval(-tail, tail)
    nx = sums.sum_norm(space, x)
    norms = sums.component_norms(space, x)
    for i in x.support():
        iv = comp.support_values(space.component(i), x.entry(i),
                                 _entry_or_zero(space, y, i))
        total = total + iv.scaled((norms[i] / nx) ** (space.p - 1.0))
    return total


def _realize_component_value(space: ComponentSpace, v: np.ndarray, w: np.ndarray,
                             target: float) -> np.ndarray:
    """A g in J(v) with g(w) = target (target clipped into the
    achievable interval); a convex combination of the two extreme
    functionals attaining the endpoints."""
    sset = comp.support_set(space, v)
    scored = sorted(((float(np.dot(g, w)), tuple(g)) for g in sset.functionals))
    lo_val, lo_g = scored[0]
    hi_val, hi_g = scored[-1]
    if hi_val <= lo_val:
        return np.array(lo_g)
    theta = min(max((target - lo_val) / (hi_val - lo_val), 0.0), 1.0)
    return (1.0 - theta) * np.array(lo_g) + theta * np.array(hi_g)


def _allocate_targets(intervals: list[Interval], total_target: float) -> list[float]:
    """Split ``total_target`` into per-interval values c_k in I_k with
    sum c_k = total_target, assuming the target lies in the interval sum."""
    values = []
    remaining = total_target
    rest_lo = sum(iv.lo for iv in intervals)
    rest_hi = sum(iv.hi for iv in intervals)
    for iv in intervals:
        rest_lo -= iv.lo
        rest_hi -= iv.hi
        # c must leave the remainder reachable by the later intervals
        lo = max(iv.lo, remaining - rest_hi)
        hi = min(iv.hi, remaining - rest_lo)
        c = min(max(0.5 * (lo + hi), iv.lo), iv.hi)
        values.append(c)
        remaining -= c
    return values


def orthogonality_witness(space: SumSpace, x: SumVector,
                          y: SumVector) -> SumFunctional | None:
    """A concrete f in J(x) with f(y) = 0 when x B-perp y, else None."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        raise DegenerateInputError("J(x) is undefined for x = 0")
    tol = GEOMETRIC_TOL
    if space.p == 0.0:
        attain = sums.max_attaining_indices(space, x)
        ivs = {
            i: comp.support_values(space.component(i), x.entry(i),
                                   _entry_or_zero(space, y, i))
            for i in attain
        }
        scale = 1.0 + max(abs(v.lo) + abs(v.hi) for v in ivs.values())
        for i, iv in ivs.items():
            if iv.contains(0.0, tol * scale):
                g = _realize_component_value(space.component(i), x.entry(i),
                                             _entry_or_zero(space, y, i), 0.0)
                return SumFunctional([(i, g)])
        pos = [(i, iv.lo) for i, iv in ivs.items() if iv.lo > 0.0]
        neg = [(i, iv.hi) for i, iv in ivs.items() if iv.hi < 0.0]
        if not pos or not neg:
            return None
        i, vp = min(pos, key=lambda t: t[1])
        j, vn = max(neg, key=lambda t: t[1])
        lam = -vn / (vp - vn)
        gi = _realize_component_value(space.component(i), x.entry(i),
                                      _entry_or_zero(space, y, i), vp)
        gj = _realize_component_value(space.component(j), x.entry(j),
                                      _entry_or_zero(space, y, j), vn)
        return SumFunctional(sorted([(i, lam * gi), (j, (1.0 - lam) * gj)]))
    supp = list(x.support())
    ivs = [
        comp.support_values(space.component(i), x.entry(i),
                            _entry_or_zero(space, y, i))
        for i in supp
    ]
    if space.p == 1.0:
        total = comp.ZERO_INTERVAL
        for iv in ivs:
            total = total + iv
        supp_set = set(supp)
        tail_entries = [(i, v) for i, v in y.entries
                        if i not in supp_set and np.any(v != 0.0)]
        tail = sum(comp.norm(space.component(i), v) for i, v in tail_entries)
        scale = 1.0 + abs(total.lo) + abs(total.hi) + tail
        if total.min_abs() > tail + tol * scale:
            return None
        t_star = min(max(0.0, total.lo), total.hi)
        targets = _allocate_targets(ivs, t_star)
        entries = [
            (i, _realize_component_value(space.component(i), x.entry(i),
                                         _entry_or_zero(space, y, i), c))
            for i, c in zip(supp, targets)
        ]
        if tail > 0.0:
            c = -t_star / tail
            c = min(max(c, -1.0), 1.0)
            for i, v in tail_entries:
                psi = comp.support_set(space.component(i), v).canonical()
                entries.append((i, c * psi))
        return SumFunctional(sorted(entries))
    nx = sums.sum_norm(space, x)
    norms = sums.component_norms(space, x)
    scales = [(norms[i] / nx) ** (space.p - 1.0) for i in supp]
    scaled = [iv.scaled(s) for iv, s in zip(ivs, scales)]
    total = comp.ZERO_INTERVAL
    for iv in scaled:
        total = total + iv
    if not total.contains(0.0, tol * (1.0 + abs(total.lo) + abs(total.hi))):
        return None
    targets = _allocate_targets(scaled, 0.0)
    entries = []
    for i, s, c in zip(supp, scales, targets):
        g = _realize_component_value(space.component(i), x.entry(i),
                                     _entry_or_zero(space, y, i), c / s)
        entries.append((i, s * g))
    return SumFunctional(entries)


@dataclass(frozen=True)
class RankOneResult:
    x_perp_y: bool
    y_perp_x: bool


def rank_one_orthogonality(space: SumSpace, x: SumVector, y: SumVector,
                           tol: float = GEOMETRIC_TOL) -> RankOneResult:
    """Both orthogonality directions for an x concentrated at a single
    coordinate, by the per-exponent reduction to component conditions."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    supp = x.support()
    if len(supp) != 1:
        raise ValidationError("x must have exactly one nonzero entry")
    n0 = supp[0]
    s0 = space.component(n0)
    x0 = x.entry(n0)
    y0 = _entry_or_zero(space, y, n0)
    y0_zero = not np.any(y0 != 0.0)

    def component_perp(v, w) -> bool:
        iv = comp.support_values(s0, v, w)
        return iv.contains(0.0, tol * (1.0 + abs(iv.lo) + abs(iv.hi)))

    if space.p == 1.0:
        iv = comp.support_values(s0, x0, y0)
        tail = sum(comp.norm(space.component(i), v)
                   for i, v in y.entries if i != n0)
        scale = 1.0 + abs(iv.lo) + abs(iv.hi) + tail
        x_perp_y = iv.min_abs() <= tail + tol * scale
        y_perp_x = True if y0_zero else component_perp(y0, x0)
        return RankOneResult(x_perp_y, y_perp_x)
    if space.p == 0.0:
        x_perp_y = component_perp(x0, y0)
        if y.is_zero:
            y_perp_x = True
        elif any(i != n0 for i in sums.max_attaining_indices(space, y)):
            y_perp_x = True
        else:
            y_perp_x = component_perp(y0, x0)
        return RankOneResult(x_perp_y, y_perp_x)
    x_perp_y = component_perp(x0, y0)
    y_perp_x = True if y0_zero else component_perp(y0, x0)
    return RankOneResult(x_perp_y, y_perp_x)


def orthogonal_completion(space: SumSpace, x: SumVector, y: SumVector) -> float:
    """A scalar t with x B-perp (y + t x).

    Every f in J(x) has f(y + t x) = f(y) + t ||x||, so the achievable
    interval [A, B] of f(y) makes every t in [-B/||x||, -A/||x||] work;
    the midpoint is returned.
    """
    if x.is_zero:
        raise DegenerateInputError("cannot complete against x = 0")
    iv = achievable_values(space, x, y)
    nx = sums.sum_norm(space, x)
    return -(iv.lo + iv.hi) / (2.0 * nx)


# ---------------------------------------------------------------------------
# semi-inner products
# ---------------------------------------------------------------------------


def canonical_representative(space: SumSpace, x: SumVector) -> tuple[SumVector, float]:
    """The unit representative of the line [x] whose first nonzero
    coordinate (component order, then coordinate order) is positive,
    together with lambda such that x = lambda * rep."""
    if x.is_zero:
        raise DegenerateInputError("the zero vector spans no line")
    first = None
    for _, v in x.entries:
        nz = np.nonzero(v)[0]
        if nz.size:
            first = float(v[nz[0]])
            break
    lam = math.copysign(sums.sum_norm(space, x), first)
    return x.scaled(1.0 / lam), lam


def _same_entries(a, b) -> bool:
    if len(a.entries) != len(b.entries):
        return False
    return all(
        i == j and np.array_equal(u, v)
        for (i, u), (j, v) in zip(a.entries, b.entries)
    )


class SipSelector:
    """A deterministic support-functional selector on lines.

    The base rule picks the canonical member of J(rep) for the
    canonical unit representative of each line; ``with_choice`` layers
    an override for one specific line (matched by exact equality of the
    canonical representative).
    """

    def __init__(self, overrides=()):
        self._overrides = tuple(overrides)

    def choose(self, space: SumSpace, rep: SumVector) -> SumFunctional:
        for stored, f in self._overrides:
            if _same_entries(stored, rep):
                return f
        return sums.support_functionals(space, rep).canonical()

    def with_choice(self, space: SumSpace, x: SumVector,
                    functional: SumFunctional) -> "SipSelector":
        """Override the line through x with a given member of J(x)."""
        if not sums.is_support(space, x, functional, tol=1e-6):
            raise ValidationError("override functional does not support the line")
        rep, lam = canonical_representative(space, x)
        stored = functional if lam > 0 else functional.scaled(-1.0)
        return SipSelector(self._overrides + ((rep, stored),))


CANONICAL_SELECTOR = SipSelector()


def sip(space: SumSpace, selector: SipSelector, x: SumVector, y: SumVector) -> float:
    """The semi-inner product [x, y] induced by the selector."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        return 0.0
    rep, lam = canonical_representative(space, x)
    f = selector.choose(space, rep)
    return lam * sums.apply_functional(f, y)


def _collinear_factor(space: SumSpace, x: SumVector, y: SumVector) -> float | None:
    """alpha with y = alpha x, or None (x must be nonzero)."""
    pairs = []
    indices = sorted({i for i, _ in x.entries} | {i for i, _ in y.entries})
    for i in indices:
        pairs.append((_entry_or_zero(space, x, i), _entry_or_zero(space, y, i)))
    xs = np.concatenate([u for u, _ in pairs]) if pairs else np.zeros(0)
    ys = np.concatenate([v for _, v in pairs]) if pairs else np.zeros(0)
    scale_x = float(np.max(np.abs(xs))) if xs.size else 0.0
    if scale_x == 0.0:
        return None
    k = int(np.argmax(np.abs(xs)))
    alpha = float(ys[k] / xs[k])
    resid = float(np.max(np.abs(ys - alpha * xs))) if xs.size else 0.0
    scale = float(np.max(np.abs(ys))) + abs(alpha) * scale_x + 1.0
    return alpha if resid <= 1e-12 * scale else None


def sip_value_interval(space: SumSpace, x: SumVector, y: SumVector) -> Interval:
    """The values [x, y] can take over all semi-inner products:
    ||x|| * {f(y) : f in J(x)}.  Collinear pairs are a point interval
    alpha ||x||^2 by the homogeneity axioms."""
    sums.validate_element(space, x)
    sums.validate_element(space, y)
    if x.is_zero:
        raise DegenerateInputError("sip values need a nonzero first argument")
    nx = sums.sum_norm(space, x)
    alpha = _collinear_factor(space, x, y)
    if alpha is not None:
        v = alpha * nx * nx
        return Interval(v, v)
    return achievable_values(space, x, y).scaled(nx)


def sip_orthogonality_selectors(space: SumSpace, x: SumVector,
                                y: SumVector) -> dict[int, np.ndarray]:
    """For 1 < p < inf and x B-perp y: per-component support
    functionals g_n in J(x_n) whose semi-inner products satisfy
    sum_n ||x_n||^(p-2) [x_n, y_n]_n = 0 (i.e. the scaled values
    ||x_n||^(p-1) g_n(y_n) sum to zero)."""
    if not (1.0 < space.p < math.inf):
        raise ValidationError("selector construction applies to 1 < p < inf")
    if x.is_zero:
        raise DegenerateInputError("x must be nonzero")
    supp = list(x.support())
    norms = sums.component_norms(space, x)
    ivs = [
        comp.support_values(space.component(i), x.entry(i),
                            _entry_or_zero(space, y, i)).scaled(
                                norms[i] ** (space.p - 1.0))
        for i in supp
    ]
    total = comp.ZERO_INTERVAL
    for iv in ivs:
        total = total + iv
    if not total.contains(0.0, GEOMETRIC_TOL * (1.0 + abs(total.lo) + abs(total.hi))):
        raise ValidationError("x is not orthogonal to y; no selector exists")
    targets = _allocate_targets(ivs, 0.0)
    out = {}
    for i, c in zip(supp, targets):
        out[i] = _realize_component_value(
            space.component(i), x.entry(i), _entry_or_zero(space, y, i),
            c / norms[i] ** (space.p - 1.0))
    return out


# ---------------------------------------------------------------------------
# s.i.p. commuting and pointwise symmetry
# ---------------------------------------------------------------------------


def _power_map(v: float, denom: float, p: float) -> float:
    """|v/denom|^(p-2) * v, extended continuously by 0 at v = 0."""
    if v == 0.0:
        return 0.0
    return abs(v / denom) ** (p - 2.0) * v


def component_sip_values(space: ComponentSpace, v, w) -> Interval:
    """Component-level analogue of sip_value_interval."""
    v = comp.as_vector(space, v)
    w = comp.as_vector(space, w)
    nv = comp.norm(space, v)
    if nv == 0.0:
        raise DegenerateInputError("sip values need a nonzero first argument")
    xs = v[np.abs(v).argmax()]
    if xs != 0.0:
        alpha = float(w[np.abs(v).argmax()] / xs)
        scale = float(np.max(np.abs(w))) + abs(alpha) * float(np.max(np.abs(v))) + 1.0
        if float(np.max(np.abs(w - alpha * v))) <= 1e-12 * scale:
            val = alpha * nv * nv
            return Interval(val, val)
    return comp.support_values(space, v, w).scaled(nv)


def p_sip_commuting(space, x, y, p: float, side: str) -> bool:
    """Whether x is p-left (p-right) s.i.p. commuting with y.

    Over the reals the achievable values of [x, y] and [y, x] across
    all semi-inner products are intervals V_xy and V_yx (selectors on
    distinct lines are independent), so the defining identity becomes
    interval containment of the monotone image
    T(v) = |v/(||x|| ||y||)|^(p-2) v: the left side requires
    T(V_xy) within V_yx, the right side the mirror inclusion.
    Collinear pairs commute identically.
    """
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")
    if p <= 1.0:
        raise ValidationError("the commuting exponent needs p > 1")
    if isinstance(space, ComponentSpace):
        v = comp.as_vector(space, x)
        w = comp.as_vector(space, y)
        nv, nw = comp.norm(space, v), comp.norm(space, w)
        if nv == 0.0 or nw == 0.0:
            raise DegenerateInputError("commuting needs nonzero x and y")
        vxy = component_sip_values(space, v, w)
        vyx = component_sip_values(space, w, v)
    else:
        sums.validate_element(space, x)
        sums.validate_element(space, y)
        if x.is_zero or y.is_zero:
            raise DegenerateInputError("commuting needs nonzero x and y")
        nv, nw = sums.sum_norm(space, x), sums.sum_norm(space, y)
        if _collinear_factor(space, x, y) is not None:
            return True
        vxy = sip_value_interval(space, x, y)
        vyx = sip_value_interval(space, y, x)
    denom = nv * nw
    image = Interval(_power_map(vxy.lo, denom, p), _power_map(vxy.hi, denom, p))
    if side == "left":
        inner, outer = image, vyx
    else:
        inner, outer = vyx, image
    tol = GEOMETRIC_TOL * (1.0 + abs(inner.lo) + abs(inner.hi)
                           + abs(outer.lo) + abs(outer.hi))
    return outer.lo - tol <= inner.lo and inner.hi <= outer.hi + tol


def component_p_sip_symmetric(space: ComponentSpace, v, p: float, side: str,
                              n_directions: int = 1024) -> TriBool:
    """Is v p-left/right s.i.p. commuting with every partner?

    Exact for the euclidean kind: the unique s.i.p. is the inner
    product, so p = 2 (or dimension one) commutes with everything and
    any other exponent fails as soon as a partner is neither orthogonal
    nor collinear.  Elsewhere a deterministic direction sweep can only
    falsify; surviving the sweep reports UNKNOWN, never YES.
    """
    v = comp.as_vector(space, v)
    if comp.norm(space, v) == 0.0:
        raise DegenerateInputError("symmetry of the zero vector is undefined")
    if space.kind == "euclidean":
        if p == 2.0 or space.dim == 1:
            return TriBool.YES
        return TriBool.NO
    for w in sphere_grid(space.dim, n_directions):
        if not p_sip_commuting(space, v, w, p, side):
            return TriBool.NO
    return TriBool.UNKNOWN


def component_symmetric_point(space: ComponentSpace, v, side: str,
                              n_directions: int = 1024) -> TriBool:
    """Left/right symmetry of a point inside its component space.

    Euclidean spaces have symmetric orthogonality, so the answer is YES
    there.  Otherwise each grid direction is completed to an
    orthogonal partner (left: James completion along v; right: metric
    projection onto the span of v) and the reverse relation is checked;
    a solid violation decides NO, a clean sweep only UNKNOWN.
    """
    v = comp.as_vector(space, v)
    nv = comp.norm(space, v)
    if nv == 0.0:
        raise DegenerateInputError("symmetry of the zero vector is undefined")
    if space.kind == "euclidean":
        return TriBool.YES
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")

    def perp_margin(a, b) -> float:
        return comp.support_values(space, a, b).min_abs()

    margin = 1e-6 * (1.0 + nv)
    for u in sphere_grid(space.dim, n_directions):
        if side == "left":
            iv = comp.support_values(space, v, u)
            for t in (-iv.hi / nv, -(iv.lo + iv.hi) / (2.0 * nv), -iv.lo / nv):
                w = u + t * v
                if comp.norm(space, w) <= 1e-9:
                    continue
                # x perp w by construction; does w perp x fail solidly?
                if perp_margin(w, v) > margin:
                    return TriBool.NO
        else:
            nu = comp.norm(space, u)
            lam, _ = oracles.golden_section_min(
                lambda t: comp.norm(space, u + t * v),
                -2.0 * nu / nv, 2.0 * nu / nv, 1e-12)
            w = u + lam * v
            if comp.norm(space, w) <= 1e-9:
                continue
            if perp_margin(w, v) > 1e-9 * (1.0 + nv):
                continue  # projection not certified orthogonal; skip
            if perp_margin(v, w) > margin:
                return TriBool.NO
    return TriBool.UNKNOWN


def _unbalanced_prefix_split(norms: list[float], tol: float) -> int | None:
    """First M with sum(norms[:M]) != sum(norms[M:]) (relative ``tol``),
    or None.  For three or more positive entries some prefix split is
    always unbalanced."""
    total = sum(norms)
    acc = 0.0
    for m in range(1, len(norms)):
        acc += norms[m - 1]
        if abs(2.0 * acc - total) > tol * total:
            return m
    return None


def symmetric_point(space: SumSpace, x: SumVector, side: str) -> TriBool:
    """Left/right symmetry of x inside the sum, per exponent.

    The l1-sum admits no left-symmetric point and the c0-sum no
    right-symmetric point whenever the constructions behind those
    theorems apply; in this finite model of the ambient sequence the
    degenerate cases they cannot reach (a single declared component, a
    fully supported two-component l1-sum with equal norms, a c0-sum
    whose every coordinate attains the max) fall back to component
    analysis or UNKNOWN.
    """
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")
    sums.validate_element(space, x)
    if x.is_zero:
        raise DegenerateInputError("symmetry of the zero vector is undefined")
    supp = x.support()
    n_declared = len(space.components)
    norms = sums.component_norms(space, x)

    def comp_point(i: int) -> TriBool:
        return component_symmetric_point(space.component(i), x.entry(i), side)

    if space.p == 1.0:
        if side == "right":
            if len(supp) >= 2:
                return TriBool.NO
            return comp_point(supp[0])
        if len(supp) < n_declared:
            return TriBool.NO
        if n_declared == 1:
            return comp_point(supp[0])
        split = _unbalanced_prefix_split([norms[i] for i in sorted(supp)],
                                         GEOMETRIC_TOL)
        if split is not None:
            return TriBool.NO
        return TriBool.UNKNOWN
    if space.p == 0.0:
        if side == "right":
            attain = sums.max_attaining_indices(space, x)
            if len(attain) < n_declared:
                return TriBool.NO
            if n_declared == 1:
                return comp_point(supp[0])
            return TriBool.UNKNOWN
        if len(supp) >= 2:
            return TriBool.NO
        return comp_point(supp[0])
    if space.p == 2.0:
        whole = _tri_and(*(
            component_p_sip_symmetric(space.component(i), x.entry(i), 2.0, side)
            for i in supp
        ))
        single = comp_point(supp[0]) if len(supp) == 1 else TriBool.NO
        return _tri_or(whole, single)
    # 1 < p < inf, p != 2
    if len(supp) == 1:
        return comp_point(supp[0])
    if len(supp) >= 3:
        return TriBool.NO
    a, b = sorted(supp)
    scale = max(norms[a], norms[b])
    if abs(norms[a] - norms[b]) > GEOMETRIC_TOL * scale:
        return TriBool.NO
    if side == "left":
        # the two-entry case additionally forces both entries smooth
        if not all(comp.is_smooth_point(space.component(i), x.entry(i))
                   for i in (a, b)):
            return TriBool.NO
    return _tri_and(*(
        component_p_sip_symmetric(space.component(i), x.entry(i), space.p, side)
        for i in (a, b)
    ))


def falsify_symmetry(space: SumSpace, x: SumVector, side: str,
                     tol: float = 1e-7) -> SumVector | None:
    """Emit and verify an explicit counterexample to left/right symmetry
    of x, following the constructions that establish the symmetry
    theorems; None when no construction applies.

    Left: a witness z with x B-perp z but not z B-perp x.
    Right: a witness y with y B-perp x but not x B-perp y.
    The witness is confirmed with the definition-based oracle before it
    is returned.
    """
    if side not in ("left", "right"):
        raise ValidationError("side must be 'left' or 'right'")
    sums.validate_element(space, x)
    if x.is_zero:
        raise DegenerateInputError("symmetry of the zero vector is undefined")
    supp = sorted(x.support())
    norms = sums.component_norms(space, x)
    witness = None
    if space.p == 1.0 and side == "left":
        off = [i for i in space.indices if i not in supp]
        if off:
            n_star = off[0]
            target = space.component(n_star)
            e1 = np.zeros(target.dim)
            e1[0] = 1.0
            height = sums.sum_norm(space, x) + 1.0
            entry = (height / comp.norm(target, e1)) * e1
            witness = x.plus(SumVector([(n_star, entry)]))
        elif len(supp) >= 2:
            split = _unbalanced_prefix_split([norms[i] for i in supp], GEOMETRIC_TOL)
            if split is not None:
                head, tail = supp[:split], supp[split:]
                gamma = len(head) / len(tail)
                entries = [(i, x.entry(i) / norms[i]) for i in head]
                entries += [(i, -gamma * x.entry(i) / norms[i]) for i in tail]
                witness = SumVector(sorted(entries))
    elif space.p == 1.0 and side == "right":
        if len(supp) >= 2:
            a = min(supp, key=lambda i: (norms[i], i))
            witness = SumVector([(a, x.entry(a))])
    elif space.p == 0.0 and side == "right":
        attain = sums.max_attaining_indices(space, x)
        below = [i for i in space.indices if i not in attain]
        if below:
            m = below[0]
            target = space.component(m)
            xm = x.entry(m)
            if xm is not None and np.any(xm != 0.0):
                um = -xm / comp.norm(target, xm)
            else:
                e1 = np.zeros(target.dim)
                e1[0] = 1.0
                um = e1 / comp.norm(target, e1)
            entries = [(m, um)]
            entries += [(i, x.entry(i) / norms[i]) for i in attain]
            witness = SumVector(sorted(entries))
    elif space.p == 0.0 and side == "left":
        if len(supp) >= 2:
            n0 = sums.max_attaining_indices(space, x)[0]
            m = min(i for i in supp if i != n0)
            witness = SumVector([(m, -2.0 * x.entry(m) / norms[m])])
    elif 1.0 < space.p < math.inf and space.p != 2.0 and len(supp) >= 2:
        hi = max(supp, key=lambda i: (norms[i], -i))
        lo = min(supp, key=lambda i: (norms[i], i))
        p = space.p
        if norms[hi] - norms[lo] > GEOMETRIC_TOL * norms[hi]:
            ratio = (norms[hi] / norms[lo]) ** p
            factor = ratio if side == "left" else ratio ** (1.0 / (p - 1.0))
            witness = SumVector(sorted([(hi, x.entry(hi)),
                                        (lo, -factor * x.entry(lo))]))
        elif len(supp) >= 3:
            a, b, c = supp[:3]
            if side == "left":
                witness = SumVector([(a, x.entry(a)), (b, -0.5 * x.entry(b)),
                                     (c, -0.5 * x.entry(c))])
            else:
                s = -(0.5 ** (1.0 / (p - 1.0)))
                witness = SumVector([(a, x.entry(a)), (b, s * x.entry(b)),
                                     (c, s * x.entry(c))])
    if witness is None:
        return None
    if side == "left":
        ok = bj_orthogonal_oracle(space, x, witness, tol) and \
            not bj_orthogonal_oracle(space, witness, x, tol)
    else:
        ok = bj_orthogonal_oracle(space, witness, x, tol) and \
            not bj_orthogonal_oracle(space, x, witness, tol)
    if not ok:
        raise LpsumsError("constructed witness failed its oracle confirmation")
    return witness
