"""
Network Recovery - Coverage restoration for damaged planar wireless networks

Adds vertices to a damaged network until its Rips or Cech complex is
connected and hole-free, then removes the added vertices the homology
does not need.
"""

__version__ = "0.1.0"

# Make key components available at package level
from .models import (
    BettiPair,
    ComplexKind,
    Domain,
    NetworkFile,
    Point2,
    RecoveryConfig,
    RecoveryResult,
    TaggedPoint
)

from .services import (
    RecoveryOrchestrator,
    StrategyFactory,
    greedy_cover,
    run_benchmark,
    run_recovery
)

__all__ = [
    # Models
    "BettiPair",
    "ComplexKind",
    "Domain",
    "NetworkFile",
    "Point2",
    "RecoveryConfig",
    "RecoveryResult",
    "TaggedPoint",

    # Services
    "RecoveryOrchestrator",
    "StrategyFactory",
    "greedy_cover",
    "run_benchmark",
    "run_recovery",
]
