"""
Grid Placement Provider - Centered square lattices
"""
import math
from typing import Any, Dict, List, Sequence

import numpy as np

from ...models import ComplexKind, Domain, Point2, TaggedPoint
from ..base import PlacementProvider

# Absorbs rounding when a / spacing is an integer
_FLOOR_SLACK = 1e-9


def lattice_spacing(r: float, kind: ComplexKind, level: int = 0) -> float:
    """Spacing of the lattice used at a given addition-loop level

    Level 0 is the lattice of the complex kind (sqrt(2) r for Cech, 2r for
    Rips). Later levels use the covering sqrt(2) r lattice and then halve
    it, skipping spacings already tried.
    """
    if r <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    if level < 0:
        raise ValueError(f"Lattice level must be >= 0, got {level}")
    covering = math.sqrt(2) * r
    if level == 0:
        return covering if kind is ComplexKind.CECH else 2 * r
    refinements = level if kind is ComplexKind.CECH else level - 1
    return covering / 2 ** refinements


def lattice_axis(a: float, spacing: float) -> np.ndarray:
    """m = floor(a / s) + 1 coordinates with equal margins on both sides"""
    m = math.floor(a / spacing + _FLOOR_SLACK) + 1
    offset = (a - (m - 1) * spacing) / 2
    return offset + np.arange(m) * spacing


def lattice_points(domain: Domain, spacing: float) -> List[Point2]:
    axis = lattice_axis(domain.side_length, spacing)
    # Clip rounding noise so border points stay in the closed square
    axis = np.clip(axis, 0.0, domain.side_length)
    return [Point2(float(x), float(y)) for x in axis for y in axis]


class GridPlacementProvider(PlacementProvider):
    """Lattice layout; the vertex count is fixed by the domain and radius"""

    def __init__(self, config: Dict[str, Any]):
        """Initialize grid provider

        Config should include:
        - complex_kind: 'rips' or 'cech', selects the level-0 spacing (default: 'rips')
        """
        super().__init__(config)
        self.complex_kind = ComplexKind(config.get("complex_kind", "rips"))

    def place(
        self,
        n: int,
        existing: Sequence[TaggedPoint],
        domain: Domain,
        r: float,
        seed: int,
        level: int = 0
    ) -> List[Point2]:
        """Full lattice of the given level; n, existing and seed are ignored"""
        return lattice_points(domain, lattice_spacing(r, self.complex_kind, level))

    def get_strategy_name(self) -> str:
        return "grid"

    @property
    def uses_budget(self) -> bool:
        return False
