"""
Provider implementations for network recovery
"""
from .base import (
    PlacementProvider,
    ResultStore
)

# Placement Providers
from .placement.grid import GridPlacementProvider
from .placement.uniform import UniformPlacementProvider
from .placement.determinantal import DeterminantalPlacementProvider

# Storage Providers
from .storage.local import LocalResultStore

__all__ = [
    # Base classes
    "PlacementProvider",
    "ResultStore",

    # Placement implementations
    "GridPlacementProvider",
    "UniformPlacementProvider",
    "DeterminantalPlacementProvider",

    # Storage implementations
    "LocalResultStore",
]
