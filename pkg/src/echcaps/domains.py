"""Concave toric domains: the expression DSL and canonical boundary profiles.

A domain is described by the region under the graph of a convex, decreasing,
piecewise linear function joining the positive y-axis to the positive x-axis
(optionally continuing as an infinite horizontal tail for Z-type domains).
Only the upper boundary is stored; the axes are implicit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ParameterError, ParseError, UnboundedProfileError
from .geometry import Vec2, as_rational, cross, format_rational


def _coerce_vertex(v) -> Vec2:
    if isinstance(v, Vec2):
        return v
    return Vec2(*v)


@dataclass(frozen=True)
class ConcaveProfile:
    """Canonical upper boundary of a concave toric domain.

    Vertices run from the y-axis vertex to the x-axis vertex with strictly
    increasing x and strictly increasing negative slopes (convexity).  With
    ``infinite_tail`` the last vertex sits at positive height and continues as
    a horizontal ray.  Construction normalizes: consecutive collinear vertices
    are merged and a terminal horizontal run at height zero is absorbed.  The
    single vertex (0, 0) is the degenerate empty domain.
    """

    vertices: tuple[Vec2, ...]
    infinite_tail: bool = False

    def __post_init__(self):
        verts = [_coerce_vertex(v) for v in self.vertices]
        if not verts:
            raise ParameterError("profile needs at least one vertex")
        if not self.infinite_tail:
            # Terminal horizontal edges at height zero add nothing to the region.
            while len(verts) >= 2 and verts[-1].y == 0 and verts[-2].y == 0:
                verts.pop()
        merged = [verts[0]]
        for v in verts[1:]:
            if len(merged) >= 2 and cross(merged[-1] - merged[-2], v - merged[-1]) == 0:
                merged.pop()
            merged.append(v)
        self._validate(merged)
        object.__setattr__(self, "vertices", tuple(merged))

    def _validate(self, verts: list[Vec2]) -> None:
        first, last = verts[0], verts[-1]
        if first.x != 0:
            raise ParameterError("profile must start on the y-axis")
        if len(verts) == 1:
            if self.infinite_tail:
                if first.y <= 0:
                    raise ParameterError("tail height must be positive")
            elif first.y != 0:
                raise ParameterError("a single-vertex bounded profile must be the origin")
            return
        if first.y <= 0:
            raise ParameterError("profile must start at positive height")
        if self.infinite_tail:
            if last.y <= 0:
                raise ParameterError("tail height must be positive")
        elif last.y != 0:
            raise ParameterError("bounded profile must end on the x-axis")
        previous_slope = None
        for p, q in zip(verts, verts[1:]):
            run = q.x - p.x
            if run <= 0:
                raise ParameterError("vertex x-coordinates must strictly increase")
            if q.y < 0:
                raise ParameterError("vertices must stay in the first quadrant")
            slope = (q.y - p.y) / run
            if slope >= 0:
                raise ParameterError("edge slopes must be negative")
            if previous_slope is not None and slope <= previous_slope:
                raise ParameterError("edge slopes must strictly increase (convexity)")
            previous_slope = slope

    @property
    def is_empty(self) -> bool:
        return not self.infinite_tail and len(self.vertices) == 1

    @property
    def width(self) -> Fraction:
        return self.vertices[-1].x

    def edges(self) -> Iterator[tuple[Vec2, Vec2]]:
        return zip(self.vertices, self.vertices[1:])

    def triangle_size(self) -> Fraction | None:
        """The ``a`` for which this profile is exactly the triangle (0,a)-(a,0), else None."""
        if self.infinite_tail or len(self.vertices) != 2:
            return None
        if self.vertices[0].y == self.vertices[1].x:
            return self.vertices[0].y
        return None

    def scaled(self, factor) -> ConcaveProfile:
        r = as_rational(factor)
        if r <= 0:
            raise ParameterError("scale factor must be positive")
        return ConcaveProfile(tuple(v.scaled(r) for v in self.vertices), self.infinite_tail)

    def height_at(self, x) -> Fraction:
        """Boundary height f(x); on the tail this is the tail height."""
        x = as_rational(x)
        if x < 0:
            raise ParameterError("x out of range")
        for p, q in self.edges():
            if x <= q.x:
                if x < p.x:
                    break
                return p.y + (q.y - p.y) * (x - p.x) / (q.x - p.x)
        last = self.vertices[-1]
        if self.infinite_tail and x >= last.x:
            return last.y
        if x == last.x:
            return last.y
        raise ParameterError("x out of range")

    def to_polygon_text(self) -> str:
        if self.infinite_tail:
            raise UnboundedProfileError("infinite-tail profiles have no polygon form")
        pairs = ",".join(
            f"({format_rational(v.x)},{format_rational(v.y)})" for v in self.vertices
        )
        return f"polygon({pairs})"


def _positive(value, name: str) -> Fraction:
    r = as_rational(value)
    if r <= 0:
        raise ParameterError(f"{name} must be positive, got {r}")
    return r


@dataclass(frozen=True)
class Ball:
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _positive(self.a, "ball size"))

    def text(self) -> str:
        return f"ball({format_rational(self.a)})"


@dataclass(frozen=True)
class Ellipsoid:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _positive(self.a, "ellipsoid a"))
        object.__setattr__(self, "b", _positive(self.b, "ellipsoid b"))

    def text(self) -> str:
        return f"ellipsoid({format_rational(self.a)},{format_rational(self.b)})"


@dataclass(frozen=True)
class ZCyl:
    """Union of the ball B(b) with the height-a cylinder; needs 0 < a < b."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _positive(self.a, "cylinder height a"))
        object.__setattr__(self, "b", _positive(self.b, "ball size b"))
        if self.a >= self.b:
            raise ParameterError("zcyl requires a < b")

    def text(self) -> str:
        return f"zcyl({format_rational(self.a)};{format_rational(self.b)})"


@dataclass(frozen=True)
class ZEC:
    """Union of the height-a cylinder with the ellipsoid E(b, c); needs c > a."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _positive(self.a, "cylinder height a"))
        object.__setattr__(self, "b", _positive(self.b, "ellipsoid b"))
        object.__setattr__(self, "c", _positive(self.c, "ellipsoid c"))
        if self.c <= self.a:
            raise ParameterError("zec requires c > a")

    def text(self) -> str:
        return (
            f"zec({format_rational(self.a)};{format_rational(self.b)};"
            f"{format_rational(self.c)})"
        )


@dataclass(frozen=True)
class Polygon:
    profile: ConcaveProfile

    def __post_init__(self):
        if not isinstance(self.profile, ConcaveProfile):
            object.__setattr__(self, "profile", ConcaveProfile(tuple(self.profile)))
        if self.profile.infinite_tail:
            raise ParameterError("polygon domains are bounded")

    def text(self) -> str:
        return self.profile.to_polygon_text()


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    inner: "DomainExpr"

    def __post_init__(self):
        object.__setattr__(self, "factor", _positive(self.factor, "scale factor"))

    def text(self) -> str:
        return f"scale({format_rational(self.factor)},{self.inner.text()})"


@dataclass(frozen=True)
class Union:
    """Disjoint union: capacities combine by max-plus convolution."""

    members: tuple["DomainExpr", ...]

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise ParameterError("union needs at least one member")
        object.__setattr__(self, "members", members)

    def text(self) -> str:
        return "union(" + ",".join(m.text() for m in self.members) + ")"


DomainExpr = Ball | Ellipsoid | ZCyl | ZEC | Polygon | Scale | Union


def domain_to_text(expr: DomainExpr) -> str:
    return expr.text()


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>-?\d+(?:/\d+)?)|(?P<name>[A-Za-z_]+)|(?P<punct>[(),;]))"
)


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise ParseError(f"unexpected character {stripped[0]!r}", pos)
            kind = m.lastgroup
            self.items.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.index = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.items[self.index] if self.index < len(self.items) else None

    def next(self, kind: str, value: str | None = None) -> str:
        item = self.peek()
        if item is None:
            raise ParseError(f"unexpected end of input, expected {value or kind}", len(self.text))
        got_kind, got_value, pos = item
        if got_kind != kind or (value is not None and got_value != value):
            raise ParseError(f"expected {value or kind}, found {got_value!r}", pos)
        self.index += 1
        return got_value


def _parse_number(tokens: _Tokens) -> Fraction:
    return as_rational(tokens.next("number"))


def _parse_point(tokens: _Tokens) -> Vec2:
    tokens.next("punct", "(")
    x = _parse_number(tokens)
    tokens.next("punct", ",")
    y = _parse_number(tokens)
    tokens.next("punct", ")")
    return Vec2(x, y)


def _parse_expr(tokens: _Tokens) -> DomainExpr:
    item = tokens.peek()
    if item is None:
        raise ParseError("unexpected end of input, expected a domain", len(tokens.text))
    kind, name, pos = item
    if kind != "name":
        raise ParseError(f"expected a domain constructor, found {name!r}", pos)
    tokens.index += 1
    tokens.next("punct", "(")
    if name == "ball":
        expr: DomainExpr = Ball(_parse_number(tokens))
    elif name == "ellipsoid":
        a = _parse_number(tokens)
        tokens.next("punct", ",")
        expr = Ellipsoid(a, _parse_number(tokens))
    elif name == "zcyl":
        a = _parse_number(tokens)
        tokens.next("punct", ";")
        expr = ZCyl(a, _parse_number(tokens))
    elif name == "zec":
        a = _parse_number(tokens)
        tokens.next("punct", ";")
        b = _parse_number(tokens)
        tokens.next("punct", ";")
        expr = ZEC(a, b, _parse_number(tokens))
    elif name == "polygon":
        points = [_parse_point(tokens)]
        while tokens.peek() and tokens.peek()[1] == ",":
            tokens.next("punct", ",")
            points.append(_parse_point(tokens))
        expr = Polygon(ConcaveProfile(tuple(points)))
    elif name == "scale":
        factor = _parse_number(tokens)
        tokens.next("punct", ",")
        expr = Scale(factor, _parse_expr(tokens))
    elif name == "union":
        members = [_parse_expr(tokens)]
        while tokens.peek() and tokens.peek()[1] == ",":
            tokens.next("punct", ",")
            members.append(_parse_expr(tokens))
        expr = Union(tuple(members))
    else:
        raise ParseError(f"unknown domain constructor {name!r}", pos)
    tokens.next("punct", ")")
    return expr


def parse_domain(text: str) -> DomainExpr:
    """Parse the domain DSL.

    Grammar (whitespace-insensitive, rationals as ``p/q``)::

        ball(a) | ellipsoid(a,b) | zcyl(a;b) | zec(a;b;c)
        | polygon((x0,y0),(x1,y1),...) | scale(r, EXPR) | union(EXPR, EXPR, ...)

    ``polygon`` lists the upper boundary from the y-axis vertex to the x-axis
    vertex.  Syntax problems raise :class:`ParseError` with a position;
    out-of-range values raise :class:`ParameterError`.
    """
    tokens = _Tokens(text)
    expr = _parse_expr(tokens)
    trailing = tokens.peek()
    if trailing is not None:
        raise ParseError(f"trailing input {trailing[1]!r}", trailing[2])
    return expr


def to_profile(expr: DomainExpr) -> ConcaveProfile:
    """Canonical profile of a single (non-union) domain expression."""
    if isinstance(expr, Ball):
        return ConcaveProfile((Vec2(0, expr.a), Vec2(expr.a, 0)))
    if isinstance(expr, Ellipsoid):
        return ConcaveProfile((Vec2(0, expr.b), Vec2(expr.a, 0)))
    if isinstance(expr, ZCyl):
        return ConcaveProfile(
            (Vec2(0, expr.b), Vec2(expr.b - expr.a, expr.a)), infinite_tail=True
        )
    if isinstance(expr, ZEC):
        corner_x = expr.b / expr.c * (expr.c - expr.a)
        return ConcaveProfile(
            (Vec2(0, expr.c), Vec2(corner_x, expr.a)), infinite_tail=True
        )
    if isinstance(expr, Polygon):
        return expr.profile
    if isinstance(expr, Scale):
        return to_profile(expr.inner).scaled(expr.factor)
    if isinstance(expr, Union):
        raise ParameterError("a union has no single profile; handle members separately")
    raise ParameterError(f"unsupported domain expression {expr!r}")


def inscribed_simplex_size(profile: ConcaveProfile) -> Fraction:
    """Largest a with the triangle (0,0)-(a,0)-(0,a) inside the region.

    x + f(x) is convex and piecewise linear, so its minimum over the whole
    boundary is attained at a vertex (tail points only grow the sum).
    """
    return min(v.x + v.y for v in profile.vertices)


def area(profile: ConcaveProfile) -> Fraction:
    """Exact area between the boundary chain and the axes."""
    if profile.infinite_tail:
        raise UnboundedProfileError("area of an infinite-tail domain")
    total = Fraction(0)
    for p, q in profile.edges():
        total += (q.x - p.x) * (p.y + q.y)
    return total / 2


def _clip_halfplane(points: list[Vec2], inside, intersect) -> list[Vec2]:
    result: list[Vec2] = []
    n = len(points)
    for i in range(n):
        current, following = points[i], points[(i + 1) % n]
        current_in, following_in = inside(current), inside(following)
        if current_in:
            result.append(current)
        if current_in != following_in:
            result.append(intersect(current, following))
    return result


def _clip_to_x_range(points: Sequence[Vec2], x_lo, x_hi) -> list[Vec2]:
    def cut(p: Vec2, q: Vec2, x0) -> Vec2:
        t = (x0 - p.x) / (q.x - p.x)
        return Vec2(x0, p.y + (q.y - p.y) * t)

    clipped = list(points)
    if x_lo is not None:
        clipped = _clip_halfplane(clipped, lambda p: p.x >= x_lo, lambda p, q: cut(p, q, x_lo))
    if clipped and x_hi is not None:
        clipped = _clip_halfplane(clipped, lambda p: p.x <= x_hi, lambda p, q: cut(p, q, x_hi))
    return clipped


def profile_contains_polygon(profile: ConcaveProfile, points: Sequence[Vec2]) -> bool:
    """Exact test that a convex polygon lies in the closed region of the profile.

    The region below a convex boundary is not itself convex, so the polygon is
    clipped to each edge's vertical slab and checked against that edge's line;
    within a slab the constraint is a single half-plane, so clipped vertices
    decide it.
    """
    pts = [_coerce_vertex(p) for p in points]
    if profile.is_empty:
        return False
    for p in pts:
        if p.x < 0 or p.y < 0:
            return False
        if not profile.infinite_tail and p.x > profile.width:
            return False
    for p0, p1 in profile.edges():
        direction = p1 - p0
        for q in _clip_to_x_range(pts, p0.x, p1.x):
            if cross(direction, q - p0) > 0:
                return False
    last = profile.vertices[-1]
    if profile.infinite_tail:
        for q in _clip_to_x_range(pts, last.x, None):
            if q.y > last.y:
                return False
    return True
