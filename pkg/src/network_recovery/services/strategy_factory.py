"""
Strategy Factory - Creates placement providers and result stores from configuration
"""
from dataclasses import asdict
from typing import Optional

from ..config.config import Config
from ..models import AdditionStrategy, ComplexKind, SamplerSettings, StrategyKind
from ..providers import (
    DeterminantalPlacementProvider,
    GridPlacementProvider,
    LocalResultStore,
    PlacementProvider,
    ResultStore,
    UniformPlacementProvider,
)


class StrategyFactory:
    """Factory class for creating provider instances"""

    @staticmethod
    def parse_strategy(name: str, complex_kind: ComplexKind = ComplexKind.RIPS) -> AdditionStrategy:
        """Turn a CLI strategy name into an AdditionStrategy

        Raises:
            ValueError: If the name is not a homology-driven addition method
        """
        try:
            kind = StrategyKind(name.lower())
        except ValueError:
            raise ValueError(f"Unsupported placement strategy: {name}") from None
        return AdditionStrategy(kind=kind, complex_kind=complex_kind)

    @staticmethod
    def create_placement_provider(
        strategy: AdditionStrategy,
        sampler: Optional[SamplerSettings] = None
    ) -> PlacementProvider:
        """Create placement provider for an addition strategy

        Args:
            strategy: Addition method and complex kind
            sampler: Determinantal sampler tuning (defaults when omitted)

        Returns:
            PlacementProvider instance

        Raises:
            ValueError: If the strategy kind is not supported
        """
        if strategy.kind is StrategyKind.GRID:
            return GridPlacementProvider({"complex_kind": strategy.complex_kind.value})
        elif strategy.kind is StrategyKind.UNIFORM:
            return UniformPlacementProvider({})
        elif strategy.kind is StrategyKind.DETERMINANTAL:
            return DeterminantalPlacementProvider(asdict(sampler or SamplerSettings()))
        else:
            raise ValueError(f"Unsupported placement strategy: {strategy.kind}")

    @staticmethod
    def create_result_store(config: Config) -> ResultStore:
        """Create result store based on configuration

        Args:
            config: Application configuration

        Returns:
            ResultStore instance

        Raises:
            ValueError: If storage type is not supported
        """
        storage_type = config.storage.type.lower()

        if storage_type == 'local':
            return LocalResultStore(config.storage.local)
        else:
            raise ValueError(f"Unsupported storage type: {storage_type}")
