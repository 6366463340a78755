"""Exact planar primitives: rational scalars, points/vectors, unimodular affine maps.

Every coordinate in this package is a ``fractions.Fraction``; floats are
rejected at the door.  The only place decimals ever appear is the SVG
renderer, which draws but never computes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ParameterError

Rational = Fraction

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading minus."""
    s = text.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParameterError(f"not a rational literal: {text!r}")
    numerator, _, denominator = s.partition("/")
    if denominator:
        if int(denominator) == 0:
            raise ParameterError(f"zero denominator: {text!r}")
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(numerator))


def format_rational(value: Fraction) -> str:
    """Render in the same ``"p/q"`` / ``"p"`` form that :func:`parse_rational` reads."""
    return str(Fraction(value))


def as_rational(value) -> Fraction:
    """Coerce int/str/Fraction to Fraction.  Floats are an error, not a warning."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParameterError("expected an exact rational, got a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ParameterError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Vec2:
    """Exact point or displacement in the plane."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def scaled(self, factor) -> Vec2:
        r = as_rational(factor)
        return Vec2(self.x * r, self.y * r)


Point2 = Vec2

ORIGIN = Vec2(0, 0)


def cross(v: Vec2, w: Vec2) -> Fraction:
    """v.x*w.y - v.y*w.x, exactly."""
    return v.x * w.y - v.y * w.x


def dot(v: Vec2, w: Vec2) -> Fraction:
    return v.x * w.x + v.y * w.y


@dataclass(frozen=True)
class AffineLatticeMap:
    """``p -> matrix @ (p + translation)`` with an integer determinant-one matrix.

    The translation is applied *first*, then the matrix; that is the order in
    which the corner decomposition and the packing construction use these maps.
    Matrix rows are ``[[m00, m01], [m10, m11]]``.
    """

    m00: int
    m01: int
    m10: int
    m11: int
    translation: Vec2 = ORIGIN

    def __post_init__(self):
        for entry in (self.m00, self.m01, self.m10, self.m11):
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise ParameterError("matrix entries must be plain integers")
        if self.m00 * self.m11 - self.m01 * self.m10 != 1:
            raise ParameterError("matrix determinant must be exactly 1")
        if not isinstance(self.translation, Vec2):
            object.__setattr__(self, "translation", Vec2(*self.translation))

    @staticmethod
    def identity() -> AffineLatticeMap:
        return AffineLatticeMap(1, 0, 0, 1)

    @staticmethod
    def translate(offset: Vec2) -> AffineLatticeMap:
        return AffineLatticeMap(1, 0, 0, 1, offset)

    def _matrix_apply(self, v: Vec2) -> Vec2:
        return Vec2(self.m00 * v.x + self.m01 * v.y, self.m10 * v.x + self.m11 * v.y)

    def _matrix_unapply(self, v: Vec2) -> Vec2:
        # det == 1, so the inverse matrix is the integer adjugate.
        return Vec2(self.m11 * v.x - self.m01 * v.y, -self.m10 * v.x + self.m00 * v.y)

    def apply(self, p: Vec2) -> Vec2:
        return self._matrix_apply(p + self.translation)

    def compose(self, inner: AffineLatticeMap) -> AffineLatticeMap:
        """The map applying ``inner`` first, then ``self``."""
        # self(inner(p)) = Ms Mi (p + ti + Mi^-1 ts)
        return AffineLatticeMap(
            self.m00 * inner.m00 + self.m01 * inner.m10,
            self.m00 * inner.m01 + self.m01 * inner.m11,
            self.m10 * inner.m00 + self.m11 * inner.m10,
            self.m10 * inner.m01 + self.m11 * inner.m11,
            inner.translation + inner._matrix_unapply(self.translation),
        )

    def inverse(self) -> AffineLatticeMap:
        return AffineLatticeMap(
            self.m11, -self.m01, -self.m10, self.m00,
            -self._matrix_apply(self.translation),
        )


def shear_add_x_to_y(translation: Vec2 = ORIGIN) -> AffineLatticeMap:
    """(x, y) -> (x, x + y), after the given pre-translation."""
    return AffineLatticeMap(1, 0, 1, 1, translation)


def shear_add_y_to_x(translation: Vec2 = ORIGIN) -> AffineLatticeMap:
    """(x, y) -> (x + y, y), after the given pre-translation."""
    return AffineLatticeMap(1, 1, 0, 1, translation)


def _projection_interval(points: Sequence[Vec2], axis: Vec2) -> tuple[Fraction, Fraction]:
    values = [dot(p, axis) for p in points]
    return min(values), max(values)


def convex_interiors_disjoint(poly_a: Sequence[Vec2], poly_b: Sequence[Vec2]) -> bool:
    """Exact separating-axis test for two nondegenerate convex polygons.

    True iff the open interiors do not meet; touching along edges or at
    vertices still counts as disjoint.
    """
    for poly in (poly_a, poly_b):
        n = len(poly)
        for i in range(n):
            edge = poly[(i + 1) % n] - poly[i]
            axis = Vec2(-edge.y, edge.x)
            lo_a, hi_a = _projection_interval(poly_a, axis)
            lo_b, hi_b = _projection_interval(poly_b, axis)
            if hi_a <= lo_b or hi_b <= lo_a:
                return True
    return False
