"""
Strategy Model - Vertex addition strategies, addition budget and greedy baseline settings
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .complex import ComplexKind
from .geometry import Domain

# CLI name of the set-cover baseline, which bypasses the homology machinery
GREEDY = "greedy"


class StrategyKind(Enum):
    """Vertex addition methods"""
    GRID = "grid"
    UNIFORM = "uniform"
    DETERMINANTAL = "dpp"

    @property
    def is_random(self) -> bool:
        return self is not StrategyKind.GRID


@dataclass(frozen=True)
class AdditionStrategy:
    """Addition method plus the complex kinds it feeds

    ``complex_kind`` is the complex that is reduced (and selects the grid
    spacing). ``verify_kind``, when set, is the complex whose Betti numbers
    end the addition loop; a Cech check certifies disk coverage, and a hole
    free Cech complex leaves the Rips complex on the same points hole free.
    """
    kind: StrategyKind = StrategyKind.DETERMINANTAL
    complex_kind: ComplexKind = ComplexKind.RIPS
    verify_kind: Optional[ComplexKind] = None

    def __post_init__(self):
        if self.verify_kind is ComplexKind.RIPS and self.complex_kind is ComplexKind.CECH:
            raise ValueError("A Rips check does not certify a Cech complex; use verify_kind=cech or none")

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def loop_kind(self) -> ComplexKind:
        """Complex checked after each addition pass"""
        return self.verify_kind or self.complex_kind


@dataclass
class AdditionBudget:
    """Number of vertices to add and the increment of the next loop iteration"""
    n_a: int = 0
    u: int = 1

    def __post_init__(self):
        if self.n_a < 0:
            raise ValueError(f"Addition budget must be >= 0, got {self.n_a}")
        if self.u < 1:
            raise ValueError(f"Budget increment must be >= 1, got {self.u}")

    def grow(self) -> int:
        """Apply one loop step: N_a += u, then u doubles"""
        self.n_a += self.u
        self.u *= 2
        return self.n_a


@dataclass(frozen=True)
class GreedyConfig:
    """Settings of the furthest-point set-cover baseline

    A candidate is settled once it lies within ``stop_radius`` of an
    existing vertex or within ``added_stop_radius`` of a selected one.
    """
    domain: Domain = field(default_factory=Domain)
    radius: float = 0.25
    stop_radius: Optional[float] = None  # defaults to radius
    added_stop_radius: Optional[float] = None  # defaults to the stop radius
    lattice_kind: ComplexKind = ComplexKind.CECH

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"Coverage radius must be positive, got {self.radius}")
        if self.stop_radius is not None and self.stop_radius <= 0:
            raise ValueError(f"Stop radius must be positive, got {self.stop_radius}")
        if self.added_stop_radius is not None and self.added_stop_radius <= 0:
            raise ValueError(f"Added stop radius must be positive, got {self.added_stop_radius}")

    @property
    def effective_stop_radius(self) -> float:
        return self.radius if self.stop_radius is None else self.stop_radius

    @property
    def effective_added_stop_radius(self) -> float:
        return self.effective_stop_radius if self.added_stop_radius is None else self.added_stop_radius
