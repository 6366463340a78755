"""Shared generators and independent brute-force oracles for the tests.

Oracles here deliberately avoid the library's algorithms: capacities are
recomputed by exhaustive enumeration, lattice counts by testing every box
point, so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction

from echcaps import ConcaveProfile, Vec2


def random_profile(
    rng: random.Random, max_edges: int = 6, max_den: int = 12
) -> ConcaveProfile:
    """Random bounded concave profile with coordinate denominators <= max_den.

    Built as an integer convex chain (distinct negative slopes, sorted) scaled
    by 1/den, so validity is by construction and denominators stay small.
    """
    den = rng.randint(1, max_den)
    n_edges = rng.randint(1, max_edges)
    by_slope: dict[Fraction, tuple[int, int]] = {}
    while len(by_slope) < n_edges:
        dx = rng.randint(1, 4)
        dy = -rng.randint(1, 4)
        by_slope[Fraction(dy, dx)] = (dx, dy)
    vecs = [by_slope[s] for s in sorted(by_slope)]
    height = -sum(dy for _, dy in vecs)
    verts = [(0, height)]
    x, y = 0, height
    for dx, dy in vecs:
        x, y = x + dx, y + dy
        verts.append((x, y))
    return ConcaveProfile(
        tuple(Vec2(Fraction(vx, den), Fraction(vy, den)) for vx, vy in verts)
    )


def stretched(profile: ConcaveProfile, sx: Fraction, sy: Fraction) -> ConcaveProfile:
    """Anisotropic stretch by factors >= 1; the result contains the original region."""
    assert sx >= 1 and sy >= 1
    return ConcaveProfile(
        tuple(Vec2(v.x * sx, v.y * sy) for v in profile.vertices), profile.infinite_tail
    )


def rand_fraction(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 12) -> Fraction:
    """Uniform-ish rational strictly inside (lo, hi] with denominator <= max_den."""
    den = rng.randint(1, max_den)
    lo_num = int(lo * den) + 1
    hi_num = int(hi * den)
    if hi_num < lo_num:
        return Fraction(hi)
    return Fraction(rng.randint(lo_num, hi_num), den)


def brute_ellipsoid_caps(a: Fraction, b: Fraction, kmax: int) -> list[Fraction]:
    """Sort the combination grid {m*a + n*b} directly; m, n <= kmax suffices."""
    values = sorted(
        m * a + n * b for m in range(kmax + 1) for n in range(kmax + 1)
    )
    return values[: kmax + 1]


def brute_weight_caps(weights, kmax: int) -> list[Fraction]:
    """Exhaustive search over multiplicity vectors for the triangular-budget knapsack."""
    weights = [Fraction(w) for w in weights]

    def best(index: int, budget: int) -> Fraction:
        if index == len(weights) or budget == 0:
            return Fraction(0)
        top = best(index + 1, budget)
        d = 1
        while d * (d + 1) // 2 <= budget:
            candidate = weights[index] * d + best(index + 1, budget - d * (d + 1) // 2)
            if candidate > top:
                top = candidate
            d += 1
        return top

    return [best(0, k) for k in range(kmax + 1)]


def brute_maxplus(sequences, kmax: int) -> list[Fraction]:
    out = []
    for k in range(kmax + 1):

        def assign(index: int, remaining: int) -> Fraction:
            if index == len(sequences) - 1:
                return sequences[index][remaining]
            return max(
                sequences[index][j] + assign(index + 1, remaining - j)
                for j in range(remaining + 1)
            )

        out.append(assign(0, k))
    return out


def brute_lattice_count(edges) -> int:
    """Count box lattice points strictly under the path by testing each one."""
    height = -sum(dy for _, dy in edges)
    width = sum(dx for dx, _ in edges)
    verts = [(0, height)]
    x, y = 0, height
    for dx, dy in edges:
        x, y = x + dx, y + dy
        verts.append((x, y))

    def path_height(px: int) -> Fraction:
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x0 <= px <= x1:
                return Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (px - x0)
        return Fraction(height)

    def on_path(px: int, py: int) -> bool:
        if (px, py) == (0, height):
            return True
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if x0 <= px <= x1 and (x1 - x0) * (py - y0) == (y1 - y0) * (px - x0):
                return True
        return False

    count = 0
    for px in range(width + 1):
        top = path_height(px)
        for py in range(int(top) + 1):
            if Fraction(py) <= top and not on_path(px, py):
                count += 1
    return count
