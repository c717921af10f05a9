"""Harder-Narasimhan combinatorics at the level of dimension vectors.

HN types and tuples are tuples of dimension vectors. All recursive
quantities are memoised on ``(Q, S, d)``; ``functools.lru_cache`` is safe to
share across threads, so no extra locking is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence, Tuple

from .errors import ZeroDimVector
from .qseries import RationalFunctionQ
from .quiver import (
    DimVector,
    Quiver,
    StabilityData,
    dim,
    dv_add,
    dv_sub,
    euler_form,
    is_zero,
    r_over_g,
    slope,
)

HNType = Tuple[DimVector, ...]
TupleD = Tuple[DimVector, ...]


def _require_nonzero(d: DimVector):
    if is_zero(d):
        raise ZeroDimVector("dimension vector must be nonzero")


@lru_cache(maxsize=None)
def subvectors(d: DimVector) -> Tuple[DimVector, ...]:
    """All nonzero e <= d, in lexicographic order."""
    return tuple(e for e in product(*(range(x + 1) for x in d)) if any(e))


def theta_constant_on_support(S: StabilityData, d: DimVector) -> bool:
    return len({S.theta[i] for i, x in enumerate(d) if x}) <= 1


@lru_cache(maxsize=None)
def is_semistable_dimvec(Q: Quiver, S: StabilityData, d: DimVector) -> bool:
    """True iff some representation of dimension d is semistable.

    d fails to be semistable exactly when a proper HN type of weight d has a
    dense stratum, i.e. all its pairwise Euler brackets vanish.
    """
    _require_nonzero(d)
    return semistability_witness(Q, S, d) is None


def semistability_witness(Q: Quiver, S: StabilityData, d: DimVector) -> Optional[HNType]:
    """A proper HN type of weight d with vanishing brackets, or None."""
    _require_nonzero(d)
    d = tuple(d)
    if theta_constant_on_support(S, d):
        return None
    for dstar in enumerate_hn_types(Q, S, d, proper_only=True):
        if hn_codim(Q, dstar) == 0:
            return dstar
    return None


@lru_cache(maxsize=None)
def _hn_tails(Q: Quiver, S: StabilityData, rem: DimVector, bound: Optional[Fraction]) -> Tuple[HNType, ...]:
    # HN types of weight rem whose first slope is < bound
    out = []
    for e in subvectors(rem):
        mu = slope(S, e)
        if bound is not None and mu >= bound:
            continue
        if e == rem:
            if is_semistable_dimvec(Q, S, e):
                out.append((e,))
            continue
        rest = dv_sub(rem, e)
        if slope(S, rest) >= mu:
            continue
        if not is_semistable_dimvec(Q, S, e):
            continue
        for tail in _hn_tails(Q, S, rest, mu):
            out.append((e,) + tail)
    return tuple(out)


def enumerate_hn_types(Q: Quiver, S: StabilityData, d: DimVector, proper_only: bool = False) -> Tuple[HNType, ...]:
    """All HN types of weight d, sorted lexicographically."""
    _require_nonzero(d)
    d = tuple(d)
    types = _proper_hn_types(Q, S, d)
    if not proper_only and is_semistable_dimvec(Q, S, d):
        types = tuple(sorted(types + ((d,),)))
    return types


@lru_cache(maxsize=None)
def _proper_hn_types(Q: Quiver, S: StabilityData, d: DimVector) -> Tuple[HNType, ...]:
    out = []
    for e in subvectors(d):
        if e == d:
            continue
        rest = dv_sub(d, e)
        mu = slope(S, e)
        if slope(S, rest) >= mu or not is_semistable_dimvec(Q, S, e):
            continue
        for tail in _hn_tails(Q, S, rest, mu):
            out.append((e,) + tail)
    return tuple(sorted(out))


def hn_codim(Q: Quiver, dstar: Sequence[DimVector]) -> int:
    """Codimension -sum_{k<l} <d^k, d^l> of the stratum of an HN type."""
    val = -sum(euler_form(Q, a, b) for a, b in combinations(dstar, 2))
    assert val >= 0, f"negative codimension for {dstar}"
    return val


def bracket_type(Q: Quiver, dstar: Sequence[DimVector]) -> int:
    """sum_{k<l} <d^l, d^k>  (note the reversed order)."""
    return sum(euler_form(Q, b, a) for a, b in combinations(dstar, 2))


def _stratum_term(Q: Quiver, S: StabilityData, dstar: HNType) -> RationalFunctionQ:
    term = RationalFunctionQ.monomial(-bracket_type(Q, dstar))
    for part in dstar:
        term = term * ev_semistable(Q, S, part)
    return term


@lru_cache(maxsize=None)
def ev_semistable(Q: Quiver, S: StabilityData, d: DimVector) -> RationalFunctionQ:
    """#R_d^ss / #G_d via the HN recursion."""
    _require_nonzero(d)
    d = tuple(d)
    value = r_over_g(Q, d)
    if theta_constant_on_support(S, d):
        return value
    for dstar in enumerate_hn_types(Q, S, d, proper_only=True):
        value = value - _stratum_term(Q, S, dstar)
    return value


def hn_partition_sum(Q: Quiver, S: StabilityData, d: DimVector) -> RationalFunctionQ:
    """Sum over all HN types of weight d of the stratum contributions.

    Must equal count_R(d)/count_G(d), since the strata partition R_d.
    """
    total = RationalFunctionQ(0)
    for dstar in enumerate_hn_types(Q, S, d):
        total = total + _stratum_term(Q, S, dstar)
    return total


def clear_caches():
    for fn in (subvectors, is_semistable_dimvec, _hn_tails, _proper_hn_types, ev_semistable):
        fn.cache_clear()


# coarsenings and polygons


def weight(dstar: Sequence[DimVector]) -> DimVector:
    out = tuple(0 for _ in dstar[0])
    for part in dstar:
        out = dv_add(out, part)
    return out


def coarsen(dstar: Sequence[DimVector], cuts: Iterable[int]) -> TupleD:
    """Sum consecutive blocks of ``dstar``, cutting after each index in ``cuts``.

    ``cuts`` is a subset of {1, ..., s-1} (1-based, as positions between
    parts). The full set returns ``dstar``; the empty set returns (|dstar|,).
    """
    s = len(dstar)
    cuts = sorted(set(cuts))
    if any(c < 1 or c > s - 1 for c in cuts):
        raise ValueError(f"cut positions must lie in 1..{s - 1}")
    bounds = [0] + cuts + [s]
    return tuple(weight(dstar[a:b]) for a, b in zip(bounds, bounds[1:]))


def polygon(S: StabilityData, dstar: Sequence[DimVector]):
    pts = [(0, 0)]
    x = y = 0
    for part in dstar:
        x += dim(part)
        y += S(part)
        pts.append((x, y))
    return pts


def _height(pts, x) -> Fraction:
    # value of the piecewise-linear function through pts at x
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if x0 <= x <= x1:
            if x1 == x0:
                return Fraction(y0)
            return Fraction(y0) + Fraction((y1 - y0) * (x - x0), x1 - x0)
    raise ValueError("x outside the polygon")


def polygon_leq(S: StabilityData, dstar: Sequence[DimVector], estar: Sequence[DimVector]) -> bool:
    """True iff the polygon of dstar lies on or below that of estar."""
    if weight(dstar) != weight(estar):
        raise ValueError("tuples have different weights")
    p, q = polygon(S, dstar), polygon(S, estar)
    xs = {x for x, _ in p} | {x for x, _ in q}
    return all(_height(p, x) <= _height(q, x) for x in xs)


def polygon_lt(S: StabilityData, dstar: Sequence[DimVector], estar: Sequence[DimVector]) -> bool:
    """Strictly below: on or below, touching only at the endpoints."""
    if weight(dstar) != weight(estar):
        raise ValueError("tuples have different weights")
    p, q = polygon(S, dstar), polygon(S, estar)
    end = p[-1][0]
    xs = ({x for x, _ in p} | {x for x, _ in q}) - {0, end}
    return all(_height(p, x) < _height(q, x) for x in xs)


def is_convex(S: StabilityData, dstar: Sequence[DimVector]) -> bool:
    """Segment slopes weakly decreasing (collinear vertices allowed)."""
    slopes = [slope(S, part) for part in dstar]
    return all(a >= b for a, b in zip(slopes, slopes[1:]))


def is_admissible(S: StabilityData, dstar: Sequence[DimVector], cuts: Iterable[int]) -> bool:
    """Coarsening is convex and every block lies on or above its own sum."""
    cuts = sorted(set(cuts))
    if not is_convex(S, coarsen(dstar, cuts)):
        return False
    bounds = [0] + cuts + [len(dstar)]
    for a, b in zip(bounds, bounds[1:]):
        block = tuple(dstar[a:b])
        if not polygon_leq(S, (weight(block),), block):
            return False
    return True


def is_above_total(S: StabilityData, dstar: Sequence[DimVector]) -> bool:
    """dstar == (d) or dstar > (d): every proper partial sum has slope > mu(d)."""
    if len(dstar) == 1:
        return True
    mu = slope(S, weight(dstar))
    acc = tuple(0 for _ in dstar[0])
    for part in dstar[:-1]:
        acc = dv_add(acc, part)
        if slope(S, acc) <= mu:
            return False
    return True


def admissible_subsets(S: StabilityData, dstar: Sequence[DimVector]):
    s = len(dstar)
    for k in range(s):
        for cuts in combinations(range(1, s), k):
            if is_admissible(S, dstar, cuts):
                yield cuts


def coarsening_euler_sum(S: StabilityData, dstar: Sequence[DimVector]) -> int:
    """Alternating count sum_{I admissible} (-1)^{#I}."""
    if any(is_zero(p) for p in dstar):
        raise ValueError("tuple parts must be nonzero")
    if not is_above_total(S, dstar):
        raise ValueError("tuple must be (d) or lie strictly above (d)")
    return sum((-1) ** len(cuts) for cuts in admissible_subsets(S, dstar))
