"""
Benchmark Model - Scenarios, per-run records and aggregated table rows
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .geometry import Domain

CSV_HEADER = ["scenario", "strategy", "reps", "mean_added", "mean_final", "stderr"]
ROBUSTNESS_HEADER = ["scenario", "strategy", "sigma", "trials", "hole_free_fraction"]


@dataclass(frozen=True)
class Scenario:
    """Damaged-network draw defined by its target initial coverage"""
    target: float = 0.2
    band: float = 0.025
    domain: Domain = field(default_factory=Domain)
    radius: float = 0.25
    replications: int = 200
    base_seed: int = 7
    resolution: int = 200

    def __post_init__(self):
        if not 0 < self.target < 1:
            raise ValueError(f"Scenario target must lie in (0, 1), got {self.target}")
        if self.band <= 0:
            raise ValueError(f"Coverage band must be positive, got {self.band}")
        if self.radius <= 0:
            raise ValueError(f"Coverage radius must be positive, got {self.radius}")

    @property
    def label(self) -> str:
        return f"{round(self.target * 100)}%"


@dataclass
class RunRecord:
    """Outcome of one strategy on one scenario replication"""
    scenario: str
    target: float
    strategy: str
    replication: int
    seed: int
    n_existing: int = 0
    coverage: float = 0.0
    added: int = 0
    final: int = 0
    iterations: int = 0
    failed: bool = False
    error: Optional[str] = None
    jitter_trials: int = 0
    hole_free: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "target": self.target,
            "strategy": self.strategy,
            "replication": self.replication,
            "seed": self.seed,
            "n_existing": self.n_existing,
            "coverage": self.coverage,
            "added": self.added,
            "final": self.final,
            "iterations": self.iterations,
            "failed": self.failed,
            "error": self.error,
            "jitter_trials": self.jitter_trials,
            "hole_free": self.hole_free,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunRecord":
        return cls(**{k: v for k, v in data.items() if k in cls.__dataclass_fields__})


@dataclass
class BenchRow:
    """Aggregate of one (scenario, strategy) cell of the result tables"""
    scenario: str
    strategy: str
    reps: int = 0
    mean_added: float = 0.0
    mean_final: float = 0.0
    stderr: float = 0.0  # of mean_final
    stderr_added: float = 0.0
    mean_coverage: float = 0.0
    target: float = 0.0
    failed: int = 0

    def to_csv_row(self) -> List[str]:
        return [
            self.scenario,
            self.strategy,
            str(self.reps),
            f"{self.mean_added:.2f}",
            f"{self.mean_final:.2f}",
            f"{self.stderr:.4f}",
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "scenario": self.scenario,
            "strategy": self.strategy,
            "reps": self.reps,
            "mean_added": self.mean_added,
            "mean_final": self.mean_final,
            "stderr": self.stderr,
            "stderr_added": self.stderr_added,
            "mean_coverage": self.mean_coverage,
            "target": self.target,
            "failed": self.failed,
        }


@dataclass
class RobustnessRow:
    """Share of jittered placements that stay connected and hole-free"""
    scenario: str
    strategy: str
    sigma: float
    trials: int = 0
    hole_free: int = 0

    @property
    def hole_free_fraction(self) -> float:
        return self.hole_free / self.trials if self.trials else 0.0

    def to_csv_row(self) -> List[str]:
        return [
            self.scenario,
            self.strategy,
            f"{self.sigma:g}",
            str(self.trials),
            f"{self.hole_free_fraction:.4f}",
        ]
