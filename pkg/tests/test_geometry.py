import math

import numpy as np
import pytest

from network_recovery.models import Domain, Point2
from network_recovery.services import coverage_fraction, distance, min_enclosing_radius


def _brute_enclosing_radius(points, steps: int = 400) -> float:
    """Smallest max-distance over a fine grid of candidate centres"""
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    gx, gy = np.meshgrid(
        np.linspace(min(xs), max(xs), steps),
        np.linspace(min(ys), max(ys), steps),
    )
    worst = np.zeros_like(gx)
    for p in points:
        worst = np.maximum(worst, np.hypot(gx - p.x, gy - p.y))
    return float(worst.min())


def test_distance() -> None:
    assert distance(Point2(0, 0), Point2(0, 0)) == 0
    assert distance(Point2(0, 0), Point2(3, 4)) == 5
    assert distance(Point2(0, 0), Point2(1, 1)) == pytest.approx(math.sqrt(2))


def test_enclosing_radius_of_equilateral_triangle_is_circumradius() -> None:
    p = (Point2(0, 0), Point2(1, 0), Point2(0.5, math.sqrt(3) / 2))
    assert min_enclosing_radius(*p) == pytest.approx(1 / math.sqrt(3))


def test_enclosing_radius_of_collinear_points() -> None:
    assert min_enclosing_radius(Point2(0, 0), Point2(1, 0), Point2(2, 0)) == pytest.approx(1.0)
    assert min_enclosing_radius(Point2(0, 0), Point2(0, 0), Point2(0, 0)) == 0.0


def test_enclosing_radius_of_obtuse_triangle_uses_longest_side() -> None:
    p = (Point2(0, 0), Point2(2, 0), Point2(1, 0.1))
    assert min_enclosing_radius(*p) == pytest.approx(1.0)
    assert min_enclosing_radius(*p) == pytest.approx(_brute_enclosing_radius(p), abs=5e-3)


@pytest.mark.parametrize("seed", range(5))
def test_enclosing_radius_matches_brute_force(seed: int) -> None:
    rng = np.random.default_rng(seed)
    p = [Point2(float(x), float(y)) for x, y in rng.uniform(0, 1, size=(3, 2))]
    assert min_enclosing_radius(*p) == pytest.approx(_brute_enclosing_radius(p), abs=5e-3)


def test_coverage_of_no_points_is_zero(unit_domain) -> None:
    assert coverage_fraction([], 0.25, unit_domain) == 0.0


def test_large_disk_covers_square(unit_domain) -> None:
    assert coverage_fraction([Point2(0.5, 0.5)], 0.75, unit_domain) == 1.0


def test_interior_disk_coverage_matches_area(unit_domain) -> None:
    covered = coverage_fraction([Point2(0.5, 0.5)], 0.25, unit_domain, resolution=200)
    assert covered == pytest.approx(math.pi * 0.0625, abs=0.005)


def test_coverage_rejects_coarse_resolution(unit_domain) -> None:
    with pytest.raises(ValueError):
        coverage_fraction([Point2(0.5, 0.5)], 0.25, unit_domain, resolution=1)


def test_domain_and_point_validation() -> None:
    with pytest.raises(ValueError):
        Domain(0.0)
    with pytest.raises(ValueError):
        Point2(float("nan"), 0.0)
    domain = Domain(2.0)
    assert domain.contains(Point2(2.0, 0.0))
    assert not domain.contains(Point2(2.1, 0.0))


def test_distance_satisfies_triangle_inequality() -> None:
    rng = np.random.default_rng(11)
    for _ in range(500):
        p, q, s = (Point2(*xy) for xy in rng.uniform(-2.0, 2.0, size=(3, 2)))
        assert distance(p, s) <= distance(p, q) + distance(q, s) + 1e-12
        assert distance(p, q) == distance(q, p)


def test_coverage_grows_with_radius_and_points(unit_domain) -> None:
    rng = np.random.default_rng(5)
    for _ in range(20):
        points = [Point2(*xy) for xy in rng.uniform(0.0, 1.0, size=(6, 2))]
        radii = sorted(rng.uniform(0.02, 0.4, size=3))
        by_radius = [coverage_fraction(points, r, unit_domain, resolution=60) for r in radii]
        assert by_radius == sorted(by_radius)
        by_prefix = [coverage_fraction(points[:k], 0.2, unit_domain, resolution=60) for k in range(7)]
        assert by_prefix == sorted(by_prefix)
