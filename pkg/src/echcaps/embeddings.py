"""Embedding obstructions from capacity ratios, inclusion thresholds, ball packings.

Monotonicity plus conformality turn every capacity index into a lower bound on
the scale factor needed to embed one domain into another; the packing
construction realizes that bound for balls going into a cylinder-union-
ellipsoid target whenever the sharpness hypothesis holds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .capacities import caps_domain
from .domains import ConcaveProfile, DomainExpr, profile_contains_polygon
from .errors import ObstructionError, ParameterError
from .geometry import AffineLatticeMap, Vec2, as_rational, convex_interiors_disjoint
from .weights import PlacedTriangle


@dataclass(frozen=True)
class ObstructionResult:
    """Least scale factor not excluded by capacities, with the index that binds."""

    lambda_min: Fraction
    argmax_k: int
    ratios: tuple[Fraction, ...]  # ratios[i] is the bound from index k = i + 1


def obstruction(source: DomainExpr, target: DomainExpr, kmax: int) -> ObstructionResult:
    """max over 1 <= k <= kmax of c_k(source)/c_k(target); ties take the smallest k.

    A necessary condition only: no embedding of ``source`` into
    ``lambda * target`` exists for lambda below the returned value.  The bound
    is nondecreasing in kmax.
    """
    if not isinstance(kmax, int) or kmax < 1:
        raise ParameterError("kmax must be a positive integer")
    source_caps = caps_domain(source, kmax)
    target_caps = caps_domain(target, kmax)
    ratios: list[Fraction] = []
    for k in range(1, kmax + 1):
        if target_caps[k] == 0:
            if source_caps[k] > 0:
                raise ObstructionError(
                    f"target capacity vanishes at k={k} while the source's does not"
                )
            ratios.append(Fraction(0))
        else:
            ratios.append(source_caps[k] / target_caps[k])
    lambda_min = max(ratios)
    argmax_k = ratios.index(lambda_min) + 1
    return ObstructionResult(lambda_min, argmax_k, tuple(ratios))


def obstruction_lambda(source: DomainExpr, target: DomainExpr, kmax: int) -> Fraction:
    return obstruction(source, target, kmax).lambda_min


def inclusion_threshold(a, b, c) -> Fraction:
    """Least lambda with E(a,1) inside Z(lambda, lambda*b, lambda*c).

    Valid for c > 1 with a >= b/c (there the corner constraint binds and the
    threshold is ac/(ac + b(c-1))), and in the degenerate pure-cylinder case
    b = c = 1 where it returns 1.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise ParameterError("parameters must be positive")
    if not (c > 1 or b == c == 1):
        raise ParameterError("threshold formula needs c > 1 (or the cylinder case b = c = 1)")
    if a < b / c:
        raise ParameterError("threshold formula needs a >= b/c")
    return a * c / (a * c + b * (c - 1))


def _sorted_weights(weights) -> tuple[tuple[Fraction, ...], tuple[int, ...]]:
    values = [as_rational(w) for w in weights]
    if not values:
        raise ParameterError("need at least one ball")
    if any(w <= 0 for w in values):
        raise ParameterError("ball sizes must be positive")
    order = tuple(sorted(range(len(values)), key=lambda i: values[i], reverse=True))
    return tuple(values[i] for i in order), order


def _thresholds(sorted_weights: tuple[Fraction, ...], b: Fraction, c: Fraction) -> list[Fraction]:
    tail_term = b * (c - 1) / c
    running = Fraction(0)
    out = []
    for k, w in enumerate(sorted_weights, start=1):
        running += w
        out.append(running / (k + tail_term))
    return out


def _check_target_params(b, c) -> tuple[Fraction, Fraction]:
    b, c = as_rational(b), as_rational(c)
    if b <= 0:
        raise ParameterError("b must be positive")
    if c < 1:
        raise ParameterError("packing target needs c >= 1")
    return b, c


def packing_threshold(weights, b, c) -> Fraction:
    """max{w_1/c, lambda_1, ..., lambda_n} with lambda_k = (sum of k largest)/(k + b(c-1)/c).

    Always sufficient for packing; also necessary (sharp) when b <= c/(c-1).
    """
    b, c = _check_target_params(b, c)
    w, _ = _sorted_weights(weights)
    return max([w[0] / c] + _thresholds(w, b, c))


@dataclass(frozen=True)
class PackingPlan:
    """Explicit disjoint triangles carrying each ball into the scaled target."""

    lambda_star: Fraction
    k_star: int
    thresholds: tuple[Fraction, ...]
    triangles: tuple[PlacedTriangle, ...]
    target: ConcaveProfile
    weights: tuple[Fraction, ...]  # sorted nonincreasing
    order: tuple[int, ...]  # order[i] = index into the caller's list


def _target_profile(lam: Fraction, b: Fraction, c: Fraction) -> ConcaveProfile:
    if c == 1:
        # The ellipsoid part sits inside the cylinder; the target is the strip.
        return ConcaveProfile((Vec2(0, lam),), infinite_tail=True)
    corner = Vec2(b / c * (c - 1) * lam, lam)
    return ConcaveProfile((Vec2(0, lam * c), corner), infinite_tail=True)


def pack_balls(weights, b, c) -> PackingPlan:
    """Construct the packing realizing the threshold.

    The first k* balls become sheared triangles laid left to right along the
    x-axis (the shear for the l-th is [[1, -(l-1)], [0, 1]], translated right
    by the size prefix sum); each later ball fits under the tail as a plain
    translated corner triangle because lambda* dominates its size.
    """
    b, c = _check_target_params(b, c)
    w, order = _sorted_weights(weights)
    thresholds = _thresholds(w, b, c)
    lambda_star = max([w[0] / c] + thresholds)
    k_star = max(range(len(w)), key=lambda i: (thresholds[i], -i)) + 1

    target = _target_profile(lambda_star, b, c)
    triangles: list[PlacedTriangle] = []
    prefix = Fraction(0)
    for ell in range(1, k_star + 1):
        size = w[ell - 1]
        placement = AffineLatticeMap(1, -(ell - 1), 0, 1, Vec2(prefix, 0))
        model = (Vec2(0, 0), Vec2(size, 0), Vec2(0, size))
        triangles.append(
            PlacedTriangle(tuple(placement.apply(p) for p in model), size, placement)
        )
        prefix += size
    cursor = max(prefix, target.vertices[-1].x) + 1
    for ell in range(k_star + 1, len(w) + 1):
        size = w[ell - 1]
        placement = AffineLatticeMap.translate(Vec2(cursor, 0))
        model = (Vec2(0, 0), Vec2(size, 0), Vec2(0, size))
        triangles.append(
            PlacedTriangle(tuple(placement.apply(p) for p in model), size, placement)
        )
        cursor += size + 1

    return PackingPlan(
        lambda_star=lambda_star,
        k_star=k_star,
        thresholds=tuple(thresholds),
        triangles=tuple(triangles),
        target=target,
        weights=w,
        order=order,
    )


def verify_packing(plan: PackingPlan) -> bool:
    """Exact check of a plan: areas match, open triangles disjoint, all inside the target."""
    if len(plan.triangles) != len(plan.weights):
        return False
    for triangle, size in zip(plan.triangles, plan.weights):
        if triangle.size != size:
            return False
        if triangle.area() != size * size / 2:
            return False
        if not profile_contains_polygon(plan.target, triangle.vertices):
            return False
    for i in range(len(plan.triangles)):
        for j in range(i + 1, len(plan.triangles)):
            if not convex_interiors_disjoint(
                plan.triangles[i].vertices, plan.triangles[j].vertices
            ):
                return False
    return True
