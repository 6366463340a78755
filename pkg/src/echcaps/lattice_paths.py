"""Concave integral lattice paths: the independent capacity oracle.

A path is a convex chain of integer edge vectors (dx >= 1, dy <= -1, slopes
strictly increasing) from (0, B) down to (A, 0); the empty path is the origin.
The capacity of a domain is the maximum, over paths enclosing at most k
lattice points, of the path's length measured against the domain: each edge
contributes its cross product with a supporting boundary point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterator

from .capacities import CapacitySequence
from .domains import ConcaveProfile
from .errors import ParameterError, PathLimitError
from .geometry import Vec2

DEFAULT_ENUMERATION_LIMIT = 12


def _slope(edge: tuple[int, int]) -> Fraction:
    return Fraction(edge[1], edge[0])


@dataclass(frozen=True)
class ConcaveIntegralPath:
    """Edge vectors of a concave integral path, canonicalized.

    Edges are sorted into strictly increasing slope order and collinear edges
    are merged, so equal paths compare equal.  The empty tuple is the
    single-point path at the origin.
    """

    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        cleaned: list[tuple[int, int]] = []
        for dx, dy in self.edges:
            if not isinstance(dx, int) or not isinstance(dy, int):
                raise ParameterError("path edges must be integer vectors")
            if dx < 1 or dy > -1:
                raise ParameterError("path edges must point right and strictly down")
            cleaned.append((dx, dy))
        cleaned.sort(key=_slope)
        merged: list[tuple[int, int]] = []
        for dx, dy in cleaned:
            if merged and _slope(merged[-1]) == Fraction(dy, dx):
                dx += merged[-1][0]
                dy += merged[-1][1]
                merged.pop()
            merged.append((dx, dy))
        object.__setattr__(self, "edges", tuple(merged))

    @property
    def width(self) -> int:
        return sum(dx for dx, _ in self.edges)

    @property
    def height(self) -> int:
        return -sum(dy for _, dy in self.edges)

    @property
    def start(self) -> tuple[int, int]:
        return (0, self.height)

    @property
    def end(self) -> tuple[int, int]:
        return (self.width, 0)

    def vertices(self) -> list[tuple[int, int]]:
        points = [self.start]
        x, y = points[0]
        for dx, dy in self.edges:
            x, y = x + dx, y + dy
            points.append((x, y))
        return points


EMPTY_PATH = ConcaveIntegralPath()


def _count_under_edges(edges: tuple[tuple[int, int], ...]) -> int:
    # Column sums of floor(height) + 1 over x = 0..A, minus points on the path.
    y = -sum(dy for _, dy in edges)
    total = 0
    on_path = 1
    for dx, dy in edges:
        for t in range(dx):
            total += y + (dy * t) // dx + 1
        y += dy
        on_path += gcd(dx, -dy)
    total += 1  # final column x = A has height 0
    return total - on_path


def lattice_count(path: ConcaveIntegralPath) -> int:
    """Lattice points under the path and on the axes, excluding the path itself."""
    return _count_under_edges(path.edges)


def support_point(profile: ConcaveProfile, edge: tuple[int, int]) -> Vec2:
    """A boundary vertex whose line parallel to the edge supports the region from below.

    The boundary lies in the closed half-plane above that line, which makes the
    support point the cross-product minimizer; ties (boundary edge parallel to
    the path edge) give the same contribution either way.
    """
    dx, dy = edge
    return min(profile.vertices, key=lambda v: dx * v.y - dy * v.x)


def omega_length(path: ConcaveIntegralPath, profile: ConcaveProfile) -> Fraction:
    """Sum over path edges of the cross product with the edge's support point.

    Works for infinite-tail profiles as well: tail points beyond the last
    vertex only increase the cross product of a right-and-down edge, so the
    minimum over the stored vertices is already the true support value.
    """
    total = Fraction(0)
    for dx, dy in path.edges:
        support = support_point(profile, (dx, dy))
        total += dx * support.y - dy * support.x
    return total


def _enumerate_edge_lists(kmax: int) -> Iterator[tuple[tuple[tuple[int, int], ...], int]]:
    # A nondegenerate path covers the A + B - 1 axis points below it, so
    # A + B <= kmax + 1; appending a shallower edge lifts the old chain and
    # never decreases the count, which justifies the subtree prune.
    yield (), 0
    budget = kmax + 1

    def extend(edges, width, height, last_slope):
        room = budget - width - height
        for dx in range(1, room):
            for rise in range(1, room - dx + 1):
                slope = Fraction(-rise, dx)
                if last_slope is not None and slope <= last_slope:
                    continue
                candidate = edges + (((dx, -rise)),)
                count = _count_under_edges(candidate)
                if count > kmax:
                    continue
                yield candidate, count
                yield from extend(candidate, width + dx, height + rise, slope)

    yield from extend((), 0, 0, None)


def enumerate_paths(kmax: int) -> Iterator[ConcaveIntegralPath]:
    """Every canonical path enclosing at most ``kmax`` lattice points, each once."""
    if not isinstance(kmax, int) or kmax < 0:
        raise ParameterError("kmax must be a nonnegative integer")
    for edges, _ in _enumerate_edge_lists(kmax):
        yield ConcaveIntegralPath(edges)


@lru_cache(maxsize=None)
def _paths_with_counts(kmax: int) -> tuple[tuple[tuple[tuple[int, int], ...], int], ...]:
    return tuple(_enumerate_edge_lists(kmax))


def caps_from_paths(
    profile: ConcaveProfile,
    kmax: int,
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> CapacitySequence:
    """Capacities by exhaustive path maximization.

    c_k is the maximum length over paths with count <= k; by monotonicity of
    the sequence this equals the maximum over count = k exactly.  Enumeration
    cost grows super-polynomially, hence the configurable limit: this route is
    the oracle, not the workhorse.
    """
    if not isinstance(kmax, int) or kmax < 0:
        raise ParameterError("kmax must be a nonnegative integer")
    if kmax > enumeration_limit:
        raise PathLimitError(
            f"kmax={kmax} exceeds the path-enumeration limit {enumeration_limit}"
        )
    if profile.is_empty:
        return CapacitySequence((Fraction(0),) * (kmax + 1))
    # Scale coordinates to integers once; path sums then stay in plain ints.
    scale = lcm(*(f.denominator for v in profile.vertices for f in (v.x, v.y)))
    points = [(int(v.x * scale), int(v.y * scale)) for v in profile.vertices]
    supports: dict[tuple[int, int], int] = {}
    best = [0] * (kmax + 1)
    for edges, count in _paths_with_counts(kmax):
        total = 0
        for edge in edges:
            value = supports.get(edge)
            if value is None:
                dx, dy = edge
                value = min(dx * py - dy * px for px, py in points)
                supports[edge] = value
            total += value
        if total > best[count]:
            best[count] = total
    for k in range(1, kmax + 1):
        if best[k] < best[k - 1]:
            best[k] = best[k - 1]
    return CapacitySequence(tuple(Fraction(v, scale) for v in best))
