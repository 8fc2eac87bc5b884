"""
Placement Provider implementations
"""

from .determinantal import DeterminantalPlacementProvider
from .grid import GridPlacementProvider, lattice_axis, lattice_points, lattice_spacing
from .uniform import UniformPlacementProvider, uniform_draw

__all__ = [
    "DeterminantalPlacementProvider",
    "GridPlacementProvider",
    "UniformPlacementProvider",
    "lattice_axis",
    "lattice_points",
    "lattice_spacing",
    "uniform_draw",
]
