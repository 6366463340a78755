import random
from fractions import Fraction

import pytest

from echcaps import (
    ConcaveIntegralPath,
    ConcaveProfile,
    EMPTY_PATH,
    Ellipsoid,
    ParameterError,
    PathLimitError,
    Vec2,
    ZCyl,
    caps_from_paths,
    caps_profile,
    caps_zcyl,
    enumerate_paths,
    lattice_count,
    omega_length,
    support_point,
    to_profile,
)
from conftest import brute_lattice_count, rand_fraction, random_profile

F = Fraction


def _profile(*pts, tail=False):
    return ConcaveProfile(tuple(Vec2(*p) for p in pts), infinite_tail=tail)


QUAD = _profile((0, F(3, 2)), (F(1, 2), F(1, 2)), (1, 0))
UNIT = _profile((0, 1), (1, 0))


def test_lattice_count_point_and_small_edges():
    assert lattice_count(EMPTY_PATH) == 0
    assert lattice_count(ConcaveIntegralPath(((1, -1),))) == 1
    assert lattice_count(ConcaveIntegralPath(((2, -2),))) == 3


def test_lattice_count_straight_runs_are_triangular():
    for n in range(1, 12):
        path = ConcaveIntegralPath(((n, -n),))
        assert lattice_count(path) == n * (n + 1) // 2


def test_lattice_count_matches_point_by_point_oracle():
    rng = random.Random(51)
    for _ in range(60):
        edges = []
        slope_pool = set()
        for _ in range(rng.randint(1, 4)):
            dx, dy = rng.randint(1, 4), -rng.randint(1, 4)
            if F(dy, dx) not in slope_pool:
                slope_pool.add(F(dy, dx))
                edges.append((dx, dy))
        path = ConcaveIntegralPath(tuple(edges))
        assert lattice_count(path) == brute_lattice_count(path.edges)


def test_path_canonicalization():
    merged = ConcaveIntegralPath(((1, -1), (1, -1), (1, -2)))
    assert merged.edges == ((1, -2), (2, -2))
    assert merged.start == (0, 4)
    assert merged.end == (3, 0)
    assert merged.vertices() == [(0, 4), (1, 2), (3, 0)]
    with pytest.raises(ParameterError):
        ConcaveIntegralPath(((0, -1),))
    with pytest.raises(ParameterError):
        ConcaveIntegralPath(((1, 0),))
    with pytest.raises(ParameterError):
        ConcaveIntegralPath(((1, F(-1)),))


def test_omega_length_against_unit_triangle():
    path = ConcaveIntegralPath(((1, -1),))
    assert omega_length(path, UNIT) == 1
    assert omega_length(EMPTY_PATH, UNIT) == 0


def test_omega_length_support_choice():
    path = ConcaveIntegralPath(((1, -1),))
    wide = _profile((0, 1), (F(3, 2), 0))
    assert omega_length(path, wide) == 1
    assert support_point(wide, (1, -1)) == Vec2(0, 1)


def test_omega_length_additive_over_collinear_refinement():
    rng = random.Random(52)
    for _ in range(30):
        p = random_profile(rng)
        path = ConcaveIntegralPath(((2, -2), (3, -1)))
        split = [(1, -1), (1, -1), (3, -1)]
        manual = Fraction(0)
        for dx, dy in split:
            s = support_point(p, (dx, dy))
            manual += dx * s.y - dy * s.x
        assert omega_length(path, p) == manual


def test_omega_length_scales_with_profile():
    rng = random.Random(53)
    path = ConcaveIntegralPath(((1, -2), (2, -1)))
    for _ in range(20):
        p = random_profile(rng)
        r = rand_fraction(rng, F(0), F(4))
        assert omega_length(path, p.scaled(r)) == r * omega_length(path, p)


def test_enumeration_counts_for_small_budgets():
    assert [sum(1 for _ in enumerate_paths(k)) for k in range(4)] == [1, 2, 4, 7]
    two = {p.edges for p in enumerate_paths(2)}
    assert two == {(), ((1, -1),), ((1, -2),), ((2, -1),)}


def test_enumeration_is_exact_and_unique():
    seen = set()
    for path in enumerate_paths(6):
        assert path.edges not in seen
        seen.add(path.edges)
        count = lattice_count(path)
        assert count <= 6
        assert path.width + path.height <= 7
    # nothing with a small count is missing: spot-check against a free search
    for edges in [((3, -1),), ((1, -3),), ((1, -2), (2, -1)), ((2, -2),)]:
        assert edges in seen


def test_caps_from_paths_unit_triangle():
    assert caps_from_paths(UNIT, 3).values == (0, 1, 1, 2)


def test_caps_from_paths_quadrilateral():
    assert caps_from_paths(QUAD, 2)[2] == F(3, 2)


def test_caps_from_paths_narrow_ellipse():
    assert caps_from_paths(_profile((0, 1), (F(3, 2), 0)), 2)[2] == F(3, 2)


def test_max_over_exact_count_equals_max_over_at_most():
    rng = random.Random(54)
    kmax = 6
    paths = [(p, lattice_count(p)) for p in enumerate_paths(kmax)]
    for _ in range(10):
        profile = random_profile(rng)
        seq = caps_from_paths(profile, kmax)
        for k in range(kmax + 1):
            exact = [omega_length(p, profile) for p, c in paths if c == k]
            assert exact, f"no path with count {k}"
            assert max(exact) == seq[k]


def test_ellipsoid_smallest_enclosing_line():
    rng = random.Random(55)
    for _ in range(10):
        a = rand_fraction(rng, F(0), F(3))
        b = rand_fraction(rng, F(0), F(3))
        profile = to_profile(Ellipsoid(a, b))
        seq = caps_from_paths(profile, 6)
        # brute force: k-th value is the (k+1)-smallest b*x + a*y over the grid
        levels = sorted(
            b * x + a * y for x in range(8) for y in range(8)
        )[:7]
        assert list(seq) == levels


def test_path_route_equals_weight_route():
    rng = random.Random(56)
    for _ in range(30):
        p = random_profile(rng)
        assert caps_from_paths(p, 8).values == caps_profile(p, 8).values


def test_path_route_handles_infinite_tails_directly():
    for a, b in ((F(1), F(2)), (F(3, 2), F(7, 4))):
        profile = to_profile(ZCyl(a, b))
        assert caps_from_paths(profile, 10).values == caps_zcyl(a, b, 10).values


def test_enumeration_limit_guard():
    with pytest.raises(PathLimitError):
        caps_from_paths(UNIT, 13)
    assert caps_from_paths(UNIT, 13, enumeration_limit=13)[13] == 4
    with pytest.raises(ParameterError):
        caps_from_paths(UNIT, -1)
