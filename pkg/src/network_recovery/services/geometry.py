"""
Geometry Service - Distances, smallest enclosing circles and coverage estimates
"""
import math
from typing import Sequence

import numpy as np
from scipy.spatial import cKDTree

from ..models import Domain, Point2, as_array

# Relative slack for threshold comparisons on lattice-aligned inputs
GEOM_EPS = 1e-9


def distance(p: Point2, q: Point2) -> float:
    """Euclidean distance"""
    return math.hypot(p.x - q.x, p.y - q.y)


def min_enclosing_radius(p: Point2, q: Point2, s: Point2) -> float:
    """Radius of the smallest circle containing three points

    Three radius-r balls share a point iff this radius is <= r. For right,
    obtuse and degenerate triangles the circle is the diameter circle of
    the longest side; otherwise it is the circumcircle.
    """
    sides = sorted([
        (p.x - q.x) ** 2 + (p.y - q.y) ** 2,
        (q.x - s.x) ** 2 + (q.y - s.y) ** 2,
        (s.x - p.x) ** 2 + (s.y - p.y) ** 2,
    ])
    shortest, middle, longest = sides
    if longest == 0:
        return 0.0

    cross = (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x)
    degenerate = abs(cross) <= 1e-12 * longest
    if degenerate or longest >= shortest + middle:
        return math.sqrt(longest) / 2

    area = abs(cross) / 2
    return math.sqrt(shortest * middle * longest) / (4 * area)


def lattice_samples(domain: Domain, resolution: int) -> np.ndarray:
    """Cell-centred resolution x resolution sample lattice over the domain"""
    step = domain.side_length / resolution
    axis = (np.arange(resolution) + 0.5) * step
    xx, yy = np.meshgrid(axis, axis, indexing="ij")
    return np.column_stack([xx.ravel(), yy.ravel()])


def coverage_fraction(
    points: Sequence,
    r: float,
    domain: Domain,
    resolution: int = 200
) -> float:
    """Fraction of the domain lattice within distance r of some point

    Accepts Point2 or TaggedPoint values. Deterministic for fixed inputs.
    """
    if resolution < 2:
        raise ValueError(f"Coverage resolution must be >= 2, got {resolution}")
    if len(points) == 0:
        return 0.0

    tree = cKDTree(as_array(points))
    samples = lattice_samples(domain, resolution)
    dist, _ = tree.query(samples, k=1, distance_upper_bound=r * (1 + GEOM_EPS))
    return float(np.count_nonzero(np.isfinite(dist))) / len(samples)
