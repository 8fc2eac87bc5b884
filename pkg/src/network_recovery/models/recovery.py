"""
Recovery Model - Inputs, per-vertex indices, traces and results of a recovery run
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional

from .complex import BettiPair, SimplicialComplex2
from .geometry import Domain, Point2, PointTag, TaggedPoint
from .kernel import SamplerSettings
from .strategy import AdditionStrategy

UNREMOVABLE = -1


class VertexIndex:
    """Per-vertex reduction index; a negative value flags the vertex as unremovable"""

    def __init__(self, values: Optional[Dict[int, int]] = None):
        self._values: Dict[int, int] = dict(values or {})

    @classmethod
    def for_complex(cls, x: SimplicialComplex2) -> "VertexIndex":
        """Flag every Existing and Boundary vertex, leave Added vertices at 0"""
        return cls({
            v: (0 if x.points[v].tag is PointTag.ADDED else UNREMOVABLE)
            for v in x.vertex_ids
        })

    def __getitem__(self, v: int) -> int:
        return self._values.get(v, 0)

    def __setitem__(self, v: int, value: int) -> None:
        self._values[v] = value

    def __contains__(self, v: int) -> bool:
        return v in self._values

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def flag(self, v: int) -> None:
        self._values[v] = UNREMOVABLE

    def is_flagged(self, v: int) -> bool:
        return self._values.get(v, 0) < 0

    def discard(self, v: int) -> None:
        self._values.pop(v, None)

    def removable(self) -> List[int]:
        return [v for v in sorted(self._values) if self._values[v] >= 0]

    def copy(self) -> "VertexIndex":
        return VertexIndex(self._values)


@dataclass(frozen=True)
class ReductionStep:
    """One tentative removal of the reduction loop"""
    vertex: int
    position: Point2
    index: int
    accepted: bool
    betti: BettiPair
    check: str = "global"  # "local" when decided by the link test

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex,
            "position": self.position.to_list(),
            "index": self.index,
            "accepted": self.accepted,
            "betti": self.betti.to_list(),
            "check": self.check,
        }


@dataclass(frozen=True)
class AdditionRound:
    """One pass of the addition loop"""
    iteration: int
    n_added: int
    betti: BettiPair

    def to_dict(self) -> Dict[str, Any]:
        return {"iteration": self.iteration, "n_added": self.n_added, "betti": self.betti.to_list()}


@dataclass
class RecoveryConfig:
    """Everything a single recovery run needs besides the existing vertices"""
    radius: float = 0.25
    domain: Domain = field(default_factory=Domain)
    strategy: AdditionStrategy = field(default_factory=AdditionStrategy)
    seed: int = 7
    max_iterations: int = 30
    boundary: Optional[List[TaggedPoint]] = None
    sampler: SamplerSettings = field(default_factory=SamplerSettings)

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError(f"Coverage radius must be positive, got {self.radius}")
        if self.max_iterations < 1:
            raise ValueError(f"Loop cap must be >= 1, got {self.max_iterations}")


@dataclass
class RecoveryResult:
    """Kept added vertices L_a plus everything needed to audit the run"""
    kept: List[Point2] = field(default_factory=list)
    removed: List[Point2] = field(default_factory=list)
    betti: BettiPair = field(default_factory=lambda: BettiPair(1, 0))
    additions: List[AdditionRound] = field(default_factory=list)
    steps: List[ReductionStep] = field(default_factory=list)
    seed: int = 0
    strategy: str = ""
    n_existing: int = 0
    n_boundary: int = 0
    complex: Optional[SimplicialComplex2] = field(default=None, repr=False, compare=False)

    @property
    def n_added(self) -> int:
        """Vertices placed by the last addition pass, before reduction"""
        return self.additions[-1].n_added if self.additions else 0

    @property
    def n_kept(self) -> int:
        return len(self.kept)

    @property
    def iterations(self) -> int:
        return len(self.additions)

    def to_dict(self, include_trace: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kept": [p.to_list() for p in self.kept],
            "removed": [p.to_list() for p in self.removed],
            "betti": self.betti.to_list(),
        }
        if include_trace:
            data["trace"] = {
                "seed": self.seed,
                "strategy": self.strategy,
                "n_existing": self.n_existing,
                "n_boundary": self.n_boundary,
                "additions": [a.to_dict() for a in self.additions],
                "reduction": [s.to_dict() for s in self.steps],
            }
        return data


@dataclass
class ReductionResult:
    """Reduced complex, removed vertex ids in removal order, and the step trace"""
    complex: SimplicialComplex2
    removed: List[int] = field(default_factory=list)
    steps: List[ReductionStep] = field(default_factory=list)
    flags: VertexIndex = field(default_factory=VertexIndex)

    @property
    def accepted(self) -> int:
        return sum(1 for s in self.steps if s.accepted)

    @property
    def rejected(self) -> int:
        return sum(1 for s in self.steps if not s.accepted)
