import random
from fractions import Fraction

import pytest

from echcaps import (
    Ball,
    ConcaveProfile,
    Ellipsoid,
    ParameterError,
    ParseError,
    Polygon,
    Scale,
    UnboundedProfileError,
    Union,
    Vec2,
    ZCyl,
    ZEC,
    area,
    inscribed_simplex_size,
    parse_domain,
    profile_contains_polygon,
    to_profile,
)
from conftest import random_profile

F = Fraction


def _profile(*pts, tail=False):
    return ConcaveProfile(tuple(Vec2(*p) for p in pts), infinite_tail=tail)


# --- DSL ---------------------------------------------------------------


def test_parse_ball():
    assert parse_domain("ball(2)") == Ball(2)


def test_parse_zec():
    assert parse_domain("zec(1;3/2;3)") == ZEC(1, F(3, 2), 3)


def test_parse_polygon_reversed_order_is_parameter_error():
    with pytest.raises(ParameterError):
        parse_domain("polygon((1,0),(1/2,1/2),(0,3/2))")


def test_parse_is_whitespace_insensitive():
    assert parse_domain(" scale( 2 , union( ball(1) , zcyl(1 ; 2) ) ) ") == Scale(
        2, Union((Ball(1), ZCyl(1, 2)))
    )


def test_parse_reports_syntax_positions():
    with pytest.raises(ParseError) as err:
        parse_domain("ball(2")
    assert err.value.position == 6
    with pytest.raises(ParseError):
        parse_domain("ball(2,3)")
    with pytest.raises(ParseError):
        parse_domain("zcyl(1,2)")  # needs a semicolon
    with pytest.raises(ParseError):
        parse_domain("ball(2) trailing")
    with pytest.raises(ParseError):
        parse_domain("orb(1)")


@pytest.mark.parametrize(
    "bad",
    ["ball(0)", "ball(-1)", "ellipsoid(1,0)", "zcyl(2;1)", "zcyl(2;2)", "zec(3;1;2)", "scale(0,ball(1))"],
)
def test_parse_parameter_errors(bad):
    with pytest.raises(ParameterError):
        parse_domain(bad)


def test_text_round_trip():
    rng = random.Random(11)
    samples = [
        Ball(F(3, 2)),
        Ellipsoid(F(5, 3), 2),
        ZCyl(1, F(7, 4)),
        ZEC(1, F(3, 2), 3),
        Scale(F(1, 2), Ball(4)),
        Union((Ball(1), Scale(2, Ellipsoid(1, 3)))),
    ]
    samples += [Polygon(random_profile(rng)) for _ in range(10)]
    for expr in samples:
        assert parse_domain(expr.text()) == expr


# --- profiles ----------------------------------------------------------


def test_zec_profile_matches_corner_formula():
    assert to_profile(ZEC(1, F(3, 2), 3)) == _profile((0, 3), (1, 1), tail=True)


def test_ball_profile():
    assert to_profile(Ball(1)) == _profile((0, 1), (1, 0))


def test_scale_profile_multiplies_coordinates():
    assert to_profile(Scale(2, Ball(1))) == _profile((0, 2), (2, 0))
    rng = random.Random(12)
    for _ in range(20):
        p = random_profile(rng)
        r = F(rng.randint(1, 9), rng.randint(1, 9))
        scaled = to_profile(Scale(r, Polygon(p)))
        assert scaled.vertices == tuple(v.scaled(r) for v in p.vertices)


def test_zcyl_profile():
    assert to_profile(ZCyl(1, 2)) == _profile((0, 2), (1, 1), tail=True)


def test_union_has_no_profile():
    with pytest.raises(ParameterError):
        to_profile(Union((Ball(1), Ball(2))))


def test_collinear_vertices_merge():
    assert _profile((0, 2), (1, 1), (2, 0)) == _profile((0, 2), (2, 0))


def test_terminal_zero_height_run_is_absorbed():
    assert _profile((0, 1), (1, 0), (2, 0)) == _profile((0, 1), (1, 0))


@pytest.mark.parametrize(
    "pts,tail",
    [
        (((0, 2), (0, 1), (1, 0)), False),  # vertical edge
        (((0, 1), (1, 2), (2, 0)), False),  # positive slope
        (((0, 2), (1, F(3, 2)), (2, 0)), False),  # slopes decrease: nonconvex
        (((1, 1), (2, 0)), False),  # starts off the y-axis
        (((0, 1), (1, F(1, 2))), False),  # bounded but never reaches the axis
        (((0, 1), (1, 0)), True),  # tail at height zero
        (((0, 1), (1, 1)), True),  # horizontal edge inside the chain
        ((), False),
    ],
)
def test_invalid_profiles_rejected(pts, tail):
    with pytest.raises(ParameterError):
        _profile(*pts, tail=tail)


def test_single_vertex_profiles():
    empty = _profile((0, 0))
    assert empty.is_empty
    strip = _profile((0, 3), tail=True)
    assert not strip.is_empty
    with pytest.raises(ParameterError):
        _profile((0, 1))  # positive height needs a tail or a descent


def test_profile_round_trip_through_polygon_text():
    rng = random.Random(13)
    for _ in range(50):
        p = random_profile(rng)
        assert to_profile(parse_domain(p.to_polygon_text())) == p


def test_tail_profile_has_no_polygon_text():
    with pytest.raises(UnboundedProfileError):
        to_profile(ZCyl(1, 2)).to_polygon_text()


# --- inscribed triangle and area ----------------------------------------


def test_inscribed_size_wide_ellipse():
    assert inscribed_simplex_size(_profile((0, 1), (2, 0))) == 1


def test_inscribed_size_quadrilateral():
    assert inscribed_simplex_size(_profile((0, F(3, 2)), (F(1, 2), F(1, 2)), (1, 0))) == 1


def test_inscribed_size_ball():
    rng = random.Random(14)
    for _ in range(10):
        a = F(rng.randint(1, 30), rng.randint(1, 10))
        assert inscribed_simplex_size(to_profile(Ball(a))) == a


def test_inscribed_size_bounds_and_scaling():
    rng = random.Random(15)
    for _ in range(50):
        p = random_profile(rng)
        size = inscribed_simplex_size(p)
        first, last = p.vertices[0], p.vertices[-1]
        assert size <= min(first.y, last.x + last.y)
        r = F(rng.randint(1, 9), rng.randint(1, 9))
        assert inscribed_simplex_size(p.scaled(r)) == r * size


def test_area_examples():
    assert area(_profile((0, 1), (2, 0))) == 1
    assert area(_profile((0, F(3, 2)), (F(1, 2), F(1, 2)), (1, 0))) == F(5, 8)
    assert area(_profile((0, 0))) == 0


def test_area_unbounded_rejected():
    with pytest.raises(UnboundedProfileError):
        area(to_profile(ZCyl(1, 2)))


def test_height_at():
    p = _profile((0, F(3, 2)), (F(1, 2), F(1, 2)), (1, 0))
    assert p.height_at(0) == F(3, 2)
    assert p.height_at(F(1, 4)) == 1
    assert p.height_at(1) == 0
    with pytest.raises(ParameterError):
        p.height_at(2)
    tailed = to_profile(ZCyl(1, 2))
    assert tailed.height_at(100) == 1


# --- containment --------------------------------------------------------


def test_containment_inside_quadrilateral():
    p = _profile((0, F(3, 2)), (F(1, 2), F(1, 2)), (1, 0))
    assert profile_contains_polygon(p, (Vec2(0, 0), Vec2(1, 0), Vec2(0, 1)))
    # pokes above the middle edge even though every vertex is inside
    assert not profile_contains_polygon(
        p, (Vec2(0, 0), Vec2(1, 0), Vec2(0, F(11, 8)))
    )


def test_containment_respects_width_and_tail():
    soup = _profile((0, 1), (1, 0))
    assert not profile_contains_polygon(soup, (Vec2(1, 0), Vec2(2, 0), Vec2(1, 1)))
    tailed = to_profile(ZCyl(1, 2))
    assert profile_contains_polygon(
        tailed, (Vec2(50, 0), Vec2(51, 0), Vec2(50, 1))
    )
    assert not profile_contains_polygon(
        tailed, (Vec2(50, 0), Vec2(51, 0), Vec2(50, F(3, 2)))
    )
