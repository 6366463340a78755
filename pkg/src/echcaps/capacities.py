"""Capacity sequences: the weight knapsack, closed forms, and the dispatcher.

c_k of a finite ball collection is a triangular-budget knapsack: choose a
nonnegative integer d_i per weight, pay (d_i^2+d_i)/2 against the budget k,
collect a_i*d_i.  Ellipsoids have the sorted-combination closed form, Z(a,b)
a one-parameter maximum, disjoint unions a max-plus convolution.  Unbounded
domains are truncated to a bounded profile wide enough that the answer has
stabilized for every index up to kmax.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .domains import (
    Ball,
    ConcaveProfile,
    DomainExpr,
    Ellipsoid,
    Polygon,
    Scale,
    Union,
    ZCyl,
    ZEC,
    inscribed_simplex_size,
    to_profile,
)
from .errors import ClosedFormError, ParameterError
from .geometry import Vec2, as_rational
from .weights import DEFAULT_MAX_STEPS, WeightMultiset, weight_expansion


@dataclass(frozen=True)
class CapacitySequence:
    """c_0..c_kmax as exact rationals; starts at zero and never decreases."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_rational(v) for v in self.values)
        if not values:
            raise ParameterError("capacity sequence needs at least c_0")
        if values[0] != 0:
            raise ParameterError("c_0 must be zero")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ParameterError("capacities must be nondecreasing")
        object.__setattr__(self, "values", values)

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def scaled(self, factor) -> CapacitySequence:
        r = as_rational(factor)
        if r <= 0:
            raise ParameterError("scale factor must be positive")
        return CapacitySequence(tuple(v * r for v in self.values))


def _check_kmax(kmax: int) -> None:
    if not isinstance(kmax, int) or isinstance(kmax, bool) or kmax < 0:
        raise ParameterError("kmax must be a nonnegative integer")


def triangular(d: int) -> int:
    return d * (d + 1) // 2


def caps_from_weights(weights, kmax: int) -> CapacitySequence:
    """Knapsack over the weight multiset.

    Only the kmax largest weights matter: any solution touches at most k
    weights (each d_i >= 1 costs at least one unit of budget), and an exchange
    argument moves them onto the largest entries.  Each weight contributes one
    DP pass; budgets run downward so a weight is used once.
    """
    _check_kmax(kmax)
    if not isinstance(weights, WeightMultiset):
        weights = WeightMultiset.from_iterable(weights)
    best = [Fraction(0)] * (kmax + 1)
    for weight in weights.entries[:kmax]:
        for budget in range(kmax, 0, -1):
            d = 1
            while triangular(d) <= budget:
                candidate = best[budget - triangular(d)] + weight * d
                if candidate > best[budget]:
                    best[budget] = candidate
                d += 1
    return CapacitySequence(tuple(best))


def caps_ellipsoid(a, b, kmax: int) -> CapacitySequence:
    """The kmax+1 smallest values of {m*a + n*b : m, n >= 0}, with multiplicity.

    Lazy merge over the grid: (m, n) is reached once, from (m-1, n) when m > 0
    and from (m, n-1) otherwise, so memory stays proportional to kmax.
    """
    _check_kmax(kmax)
    a, b = as_rational(a), as_rational(b)
    if a <= 0 or b <= 0:
        raise ParameterError("ellipsoid parameters must be positive")
    frontier: list[tuple[Fraction, int, int]] = [(Fraction(0), 0, 0)]
    out: list[Fraction] = []
    while len(out) <= kmax:
        value, m, n = heapq.heappop(frontier)
        out.append(value)
        heapq.heappush(frontier, (value + a, m + 1, n))
        if m == 0:
            heapq.heappush(frontier, (value + b, 0, n + 1))
    return CapacitySequence(tuple(out))


def caps_ball(a, kmax: int) -> CapacitySequence:
    return caps_ellipsoid(a, a, kmax)


def caps_disjoint_union(seqs, kmax: int) -> CapacitySequence:
    """Max-plus convolution: c_k = max over k_1+...+k_n = k of the summed parts."""
    _check_kmax(kmax)
    seqs = list(seqs)
    if not seqs:
        raise ParameterError("disjoint union needs at least one sequence")
    for seq in seqs:
        if seq.kmax < kmax:
            raise ParameterError("every input must be defined up to kmax")
    acc = list(seqs[0].values[: kmax + 1])
    for seq in seqs[1:]:
        acc = [
            max(acc[i] + seq[k - i] for i in range(k + 1))
            for k in range(kmax + 1)
        ]
    return CapacitySequence(tuple(acc))


def caps_zcyl(a, b, kmax: int) -> CapacitySequence:
    """Ball-union-cylinder closed form: max over d(d+1) <= 2k of d*b + a*(k - d(d+1)/2)."""
    _check_kmax(kmax)
    a, b = as_rational(a), as_rational(b)
    if not 0 < a < b:
        raise ParameterError("zcyl capacities need 0 < a < b")
    values = []
    for k in range(kmax + 1):
        best = Fraction(0)
        d = 0
        while triangular(d) <= k:
            candidate = d * b + a * (k - triangular(d))
            if candidate > best:
                best = candidate
            d += 1
        values.append(best)
    return CapacitySequence(tuple(values))


def caps_zec_closed(a: int, b, c) -> Fraction:
    """c_a of the cylinder-union-ellipsoid Z(1, b, c) where a closed form is known.

    For a <= b/c the first a peels are balls of size c, giving a*c.  For
    a >= b/c the value is a + b(c-1)/c provided either a = floor(b/c) + 1 or
    b <= c/(c-1); outside those regimes callers must fall back to the
    truncation route.
    """
    if not isinstance(a, int) or isinstance(a, bool) or a < 1:
        raise ParameterError("index a must be a positive integer")
    b, c = as_rational(b), as_rational(c)
    if b <= 0 or c <= 1:
        raise ParameterError("need b > 0 and c > 1")
    if a <= b / c:
        return a * c
    if a == b // c + 1 or b <= c / (c - 1):
        return a + b * (c - 1) / c
    raise ClosedFormError(
        f"no closed form for c_{a}(Z(1,{b},{c})); use the truncation route"
    )


def truncate_tail(profile: ConcaveProfile, tail_balls: int) -> ConcaveProfile:
    """Replace the infinite tail by a finite wedge worth ``tail_balls`` tail-height balls.

    The wedge is the edge from the last vertex (x*, h) to (x* + m*h, 0) with
    slope -1/m; peeling it yields m - 1 balls of size h, so m = tail_balls + 1
    (raised if needed to keep slopes strictly increasing).  Widening further
    never changes c_k for k < tail_balls.
    """
    if not profile.infinite_tail:
        return profile
    if tail_balls < 1:
        raise ParameterError("tail_balls must be positive")
    last = profile.vertices[-1]
    m = tail_balls + 1
    if len(profile.vertices) >= 2:
        before = profile.vertices[-2]
        slope = (last.y - before.y) / (last.x - before.x)
        m = max(m, int(1 / -slope) + 1)
    return ConcaveProfile(
        profile.vertices + (Vec2(last.x + m * last.y, 0),), infinite_tail=False
    )


def caps_profile(
    profile: ConcaveProfile, kmax: int, max_steps: int = DEFAULT_MAX_STEPS
) -> CapacitySequence:
    """Weight-expansion route for any profile; unbounded tails are truncated first."""
    _check_kmax(kmax)
    bounded = truncate_tail(profile, kmax + 1)
    if bounded.is_empty:
        return CapacitySequence((Fraction(0),) * (kmax + 1))
    return caps_from_weights(weight_expansion(bounded, max_steps), kmax)


def caps_domain(
    expr: DomainExpr, kmax: int, max_steps: int = DEFAULT_MAX_STEPS
) -> CapacitySequence:
    """Capacity dispatcher: closed forms where exact ones exist, weights elsewhere."""
    _check_kmax(kmax)
    if isinstance(expr, Ball):
        return caps_ellipsoid(expr.a, expr.a, kmax)
    if isinstance(expr, Ellipsoid):
        return caps_ellipsoid(expr.a, expr.b, kmax)
    if isinstance(expr, ZCyl):
        return caps_zcyl(expr.a, expr.b, kmax)
    if isinstance(expr, Scale):
        return caps_domain(expr.inner, kmax, max_steps).scaled(expr.factor)
    if isinstance(expr, Union):
        return caps_disjoint_union(
            [caps_domain(member, kmax, max_steps) for member in expr.members], kmax
        )
    if isinstance(expr, (Polygon, ZEC)):
        return caps_profile(to_profile(expr), kmax, max_steps)
    raise ParameterError(f"unsupported domain expression {expr!r}")


def caps_closed(expr: DomainExpr, kmax: int) -> CapacitySequence:
    """Closed forms only; raises where none is known for the whole sequence."""
    _check_kmax(kmax)
    if isinstance(expr, Ball):
        return caps_ellipsoid(expr.a, expr.a, kmax)
    if isinstance(expr, Ellipsoid):
        return caps_ellipsoid(expr.a, expr.b, kmax)
    if isinstance(expr, ZCyl):
        return caps_zcyl(expr.a, expr.b, kmax)
    if isinstance(expr, Scale):
        return caps_closed(expr.inner, kmax).scaled(expr.factor)
    if isinstance(expr, Union):
        return caps_disjoint_union([caps_closed(m, kmax) for m in expr.members], kmax)
    raise ClosedFormError(f"no closed-form capacity sequence for {expr.text()}")


def gromov_width(expr: DomainExpr) -> Fraction:
    """Size of the largest ball embedding into a single concave toric domain (= c_1)."""
    if isinstance(expr, Union):
        raise ParameterError("Gromov width is defined here for a single domain")
    return inscribed_simplex_size(to_profile(expr))


def ball_capacity(a, k: int) -> Fraction:
    """c_k of the ball B(a): a*d for the unique d with d(d+1)/2 <= k <= (d^2+3d)/2."""
    a = as_rational(a)
    if a <= 0:
        raise ParameterError("ball size must be positive")
    _check_kmax(k)
    d = (isqrt(8 * k + 1) - 1) // 2
    return a * d
