"""Weight expansion of a concave toric domain and its open-triangle decomposition.

One step peels the largest corner triangle (0,0)-(a,0)-(0,a), then straightens
the two remaining caps with unimodular shears: the left cap is translated down
by a and sheared by [[1,0],[1,1]], the right cap is translated left by a and
sheared by [[1,1],[0,1]].  Recursing to plain triangles yields the weight
multiset; tracking the inverse maps yields disjoint open triangles tiling the
region up to measure zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .domains import ConcaveProfile, inscribed_simplex_size
from .errors import (
    BaseCaseProfileError,
    ExpansionLimitError,
    ParameterError,
    UnboundedProfileError,
)
from .geometry import AffineLatticeMap, Vec2, as_rational, cross, shear_add_x_to_y, shear_add_y_to_x

DEFAULT_MAX_STEPS = 10_000


@dataclass(frozen=True)
class WeightMultiset:
    """Finite multiset of positive sizes, stored sorted nonincreasing."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(sorted((as_rational(e) for e in self.entries), reverse=True))
        if any(e <= 0 for e in entries):
            raise ParameterError("weights must be positive")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_iterable(cls, values: Iterable) -> WeightMultiset:
        return cls(tuple(values))

    def union(self, other: WeightMultiset) -> WeightMultiset:
        return WeightMultiset(self.entries + other.entries)

    def scaled(self, factor) -> WeightMultiset:
        r = as_rational(factor)
        return WeightMultiset(tuple(e * r for e in self.entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class PlacedTriangle:
    """An open triangle together with the unimodular-affine map that placed it.

    ``model_map`` sends the model triangle (0,0)-(size,0)-(0,size) onto
    ``vertices``, in that vertex order.
    """

    vertices: tuple[Vec2, Vec2, Vec2]
    size: Fraction
    model_map: AffineLatticeMap

    def __post_init__(self):
        object.__setattr__(self, "size", as_rational(self.size))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.size <= 0:
            raise ParameterError("triangle size must be positive")
        model = (Vec2(0, 0), Vec2(self.size, 0), Vec2(0, self.size))
        if tuple(self.model_map.apply(p) for p in model) != self.vertices:
            raise ParameterError("model_map does not place the model triangle on vertices")

    def area(self) -> Fraction:
        v0, v1, v2 = self.vertices
        return abs(cross(v1 - v0, v2 - v0)) / 2


def decompose_step(
    profile: ConcaveProfile,
) -> tuple[Fraction, ConcaveProfile | None, ConcaveProfile | None]:
    """Peel the corner triangle; return (a, left remainder, right remainder).

    The contact of the line x + y = a with the boundary runs from x2 to x3;
    the left remainder is empty iff x2 = 0, the right iff x3 = a.  Because
    x + f(x) is convex with strictly increasing edge slopes, the contact set
    is a single vertex or one slope -1 edge, so x2 and x3 are vertices.
    """
    if profile.infinite_tail:
        raise UnboundedProfileError("cannot decompose an infinite-tail profile")
    if profile.is_empty:
        raise ParameterError("cannot decompose the empty profile")
    if profile.triangle_size() is not None:
        raise BaseCaseProfileError("profile is already a corner triangle")
    verts = profile.vertices
    size = inscribed_simplex_size(profile)
    contact = [i for i, v in enumerate(verts) if v.x + v.y == size]
    i2, i3 = contact[0], contact[-1]
    assert len(contact) <= 2 and i3 - i2 <= 1, "contact set must be a vertex or one edge"

    left = None
    if verts[i2].x != 0:
        left = ConcaveProfile(
            tuple(Vec2(v.x, v.x + v.y - size) for v in verts[: i2 + 1])
        )
    right = None
    if verts[i3].x != size:
        right = ConcaveProfile(
            tuple(Vec2(v.x + v.y - size, v.y) for v in verts[i3:])
        )
    return size, left, right


def _check_expandable(profile: ConcaveProfile) -> None:
    if profile.infinite_tail:
        raise UnboundedProfileError("weight expansion needs a bounded profile")


def weight_expansion(
    profile: ConcaveProfile, max_steps: int = DEFAULT_MAX_STEPS
) -> WeightMultiset:
    """Full recursive weight expansion of a bounded rational profile.

    Rational inputs always terminate (each corner runs a continued fraction
    and side caps lose boundary edges), but denominators can make the
    recursion long; after ``max_steps`` peels the expansion fails loudly.
    """
    _check_expandable(profile)
    entries: list[Fraction] = []
    stack = [profile]
    steps = 0
    while stack:
        current = stack.pop()
        if current.is_empty:
            continue
        base = current.triangle_size()
        if base is not None:
            entries.append(base)
            continue
        if steps >= max_steps:
            raise ExpansionLimitError(max_steps, current)
        steps += 1
        size, left, right = decompose_step(current)
        entries.append(size)
        if right is not None:
            stack.append(right)
        if left is not None:
            stack.append(left)
    return WeightMultiset(tuple(entries))


def weight_expansion_truncated(
    profile: ConcaveProfile, depth: int, max_steps: int = DEFAULT_MAX_STEPS
) -> WeightMultiset:
    """Weights from the first ``depth`` levels of the expansion.

    Depth 0 is empty; a corner triangle contributes its full singleton at any
    positive depth; otherwise each level spends one unit of depth on both
    remainders.
    """
    if depth < 0:
        raise ParameterError("depth must be nonnegative")
    _check_expandable(profile)
    entries: list[Fraction] = []
    stack = [(profile, depth)]
    steps = 0
    while stack:
        current, budget = stack.pop()
        if budget <= 0 or current.is_empty:
            continue
        base = current.triangle_size()
        if base is not None:
            entries.append(base)
            continue
        if steps >= max_steps:
            raise ExpansionLimitError(max_steps, current)
        steps += 1
        size, left, right = decompose_step(current)
        entries.append(size)
        if right is not None:
            stack.append((right, budget - 1))
        if left is not None:
            stack.append((left, budget - 1))
    return WeightMultiset(tuple(entries))


def triangle_decomposition(
    profile: ConcaveProfile, max_steps: int = DEFAULT_MAX_STEPS
) -> list[PlacedTriangle]:
    """Disjoint open triangles tiling the region, one per weight entry.

    Each recursion level composes the inverse of its straightening map, so a
    sub-profile's corner triangle can be pulled back to original coordinates.
    """
    _check_expandable(profile)
    placed: list[PlacedTriangle] = []
    stack: list[tuple[ConcaveProfile, AffineLatticeMap]] = [
        (profile, AffineLatticeMap.identity())
    ]
    steps = 0
    while stack:
        current, back = stack.pop()
        if current.is_empty:
            continue
        base = current.triangle_size()
        if base is not None:
            placed.append(_place_corner(back, base))
            continue
        if steps >= max_steps:
            raise ExpansionLimitError(max_steps, current)
        steps += 1
        size, left, right = decompose_step(current)
        placed.append(_place_corner(back, size))
        if right is not None:
            to_right = shear_add_y_to_x(Vec2(-size, 0))
            stack.append((right, back.compose(to_right.inverse())))
        if left is not None:
            to_left = shear_add_x_to_y(Vec2(0, -size))
            stack.append((left, back.compose(to_left.inverse())))
    return placed


def _place_corner(back: AffineLatticeMap, size: Fraction) -> PlacedTriangle:
    model = (Vec2(0, 0), Vec2(size, 0), Vec2(0, size))
    return PlacedTriangle(tuple(back.apply(p) for p in model), size, back)
