"""
Base provider classes - Abstract interfaces for placement and result storage
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

from ..models import BenchRow, Domain, Point2, RobustnessRow, RunRecord, TaggedPoint


class PlacementProvider(ABC):
    """Abstract base class for vertex addition methods (grid, uniform, determinantal)"""

    def __init__(self, config: Dict[str, Any]):
        """Initialize with provider configuration"""
        self.config = config

    @abstractmethod
    def place(
        self,
        n: int,
        existing: Sequence[TaggedPoint],
        domain: Domain,
        r: float,
        seed: int,
        level: int = 0
    ) -> List[Point2]:
        """Positions of the vertices to add

        Args:
            n: Requested number of vertices (ignored by deterministic layouts)
            existing: Vertices already in the network
            domain: Target square
            r: Coverage radius
            seed: Seed of this draw
            level: Addition loop iteration, used by layouts that refine instead of redraw

        Returns:
            Positions inside the domain
        """
        pass

    @abstractmethod
    def get_strategy_name(self) -> str:
        """Get the CLI name of the addition method"""
        pass

    @property
    def uses_budget(self) -> bool:
        """Whether the output size follows the requested count"""
        return True


class ResultStore(ABC):
    """Abstract base class for result storage"""

    def __init__(self, config: Dict[str, Any]):
        """Initialize with storage configuration"""
        self.config = config

    @abstractmethod
    async def save_recovery(self, data: Dict[str, Any], key: str) -> str:
        """Save a recovery result document

        Args:
            data: Serialized RecoveryResult (or greedy output)
            key: Filename or path

        Returns:
            Path to the stored file
        """
        pass

    @abstractmethod
    async def save_bench_table(self, rows: Sequence[BenchRow], key: str) -> str:
        """Save aggregated benchmark rows as CSV

        Args:
            rows: Rows in emission order
            key: Filename or path

        Returns:
            Path to the stored file
        """
        pass

    @abstractmethod
    async def save_run_records(
        self,
        records: Sequence[RunRecord],
        key: str,
        metadata: Optional[Dict[str, Any]] = None
    ) -> str:
        """Save per-run benchmark records as JSON

        Args:
            records: Every run, failed ones included
            key: Filename or path
            metadata: Optional run parameters stored alongside

        Returns:
            Path to the stored file
        """
        pass

    @abstractmethod
    async def save_plot_data(self, rows: Sequence[BenchRow]) -> Dict[str, str]:
        """Save one plot-data file per strategy

        Args:
            rows: Aggregated rows

        Returns:
            Mapping of strategy name to file path
        """
        pass

    @abstractmethod
    async def save_robustness_table(self, rows: Sequence[RobustnessRow], key: str) -> str:
        """Save jitter robustness rows as CSV"""
        pass

    @abstractmethod
    async def save_points(self, points: Sequence[Point2], key: str) -> str:
        """Save sampled points as a JSON list of [x, y]"""
        pass

    @abstractmethod
    def get_storage_type(self) -> str:
        """Get the type of storage"""
        pass
