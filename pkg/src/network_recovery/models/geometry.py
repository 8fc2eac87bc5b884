"""
Geometry Model - Domain square, planar points and tagged network vertices
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence

import numpy as np

# Serialized coordinates keep 12 significant digits
COORD_DIGITS = 12


def round_coord(value: float) -> float:
    """Round a coordinate to its serialized precision"""
    return float(f"{value:.{COORD_DIGITS}g}")


class PointTag(Enum):
    """Role of a vertex in the network state"""
    EXISTING = "existing"
    ADDED = "added"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class Domain:
    """Square [0, a]^2 with its origin at (0, 0)"""
    side_length: float = 1.0

    def __post_init__(self):
        if not (self.side_length > 0 and math.isfinite(self.side_length)):
            raise ValueError(f"Domain side must be positive, got {self.side_length}")

    @property
    def area(self) -> float:
        return self.side_length ** 2

    @property
    def circumradius(self) -> float:
        """Radius of the circle circumscribing the square"""
        return self.side_length * math.sqrt(2) / 2

    def contains(self, p: "Point2", tol: float = 1e-12) -> bool:
        return (
            -tol <= p.x <= self.side_length + tol
            and -tol <= p.y <= self.side_length + tol
        )


@dataclass(frozen=True)
class Point2:
    """Planar point"""
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def to_list(self) -> List[float]:
        return [round_coord(self.x), round_coord(self.y)]


@dataclass(frozen=True)
class TaggedPoint:
    """Network vertex: a position plus its immutable role"""
    position: Point2
    tag: PointTag = PointTag.EXISTING


def tag_points(points: Sequence[Point2], tag: PointTag) -> List[TaggedPoint]:
    return [TaggedPoint(p, tag) for p in points]


def as_array(points: Sequence) -> np.ndarray:
    """Stack Point2 or TaggedPoint values into an (n, 2) float array"""
    if not points:
        return np.empty((0, 2), dtype=float)
    coords = [
        (p.position.x, p.position.y) if isinstance(p, TaggedPoint) else (p.x, p.y)
        for p in points
    ]
    return np.asarray(coords, dtype=float)


def from_array(coords: np.ndarray) -> List[Point2]:
    return [Point2(float(x), float(y)) for x, y in np.asarray(coords).reshape(-1, 2)]
