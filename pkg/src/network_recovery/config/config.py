"""
Configuration Management for Network Recovery
"""
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ..models import ComplexKind, Domain, SamplerSettings, Scenario

DEFAULT_CONFIG_FILE = "network_recovery.yaml"


@dataclass
class AppConfig:
    """Application configuration"""
    name: str = "Network Recovery"
    version: str = "0.1.0"
    log_level: str = "INFO"


@dataclass
class NetworkConfig:
    """Domain square, coverage radius and complex kind"""
    side_length: float = 1.0
    radius: float = 0.25
    complex_kind: str = "rips"  # rips, cech

    @property
    def domain(self) -> Domain:
        return Domain(self.side_length)

    @property
    def kind(self) -> ComplexKind:
        return ComplexKind(self.complex_kind)


@dataclass
class PlacementConfig:
    """Default addition method and determinantal sampler tuning"""
    strategy: str = "dpp"  # grid, uniform, dpp, greedy
    seed: int = 7
    margin: float = 0.25
    envelope_grid: int = 64
    safety_factor: float = 1.5
    max_proposals: int = 20000

    def sampler_settings(self) -> SamplerSettings:
        return SamplerSettings(
            margin=self.margin,
            envelope_grid=self.envelope_grid,
            safety_factor=self.safety_factor,
            max_proposals=self.max_proposals,
        )


@dataclass
class LoopConfig:
    """Addition loop safety cap"""
    max_iterations: int = 30


@dataclass
class BenchConfig:
    """Monte Carlo benchmark defaults"""
    replications: int = 200
    base_seed: int = 7
    band: float = 0.025
    targets: List[float] = field(default_factory=lambda: [0.2, 0.4, 0.6, 0.8])
    strategies: List[str] = field(default_factory=lambda: ["grid", "uniform", "dpp", "greedy"])
    greedy_stop_factor: float = 1.0  # greedy stop radius around existing vertices, in units of r
    greedy_added_factor: float = 2.0  # greedy stop radius around selected candidates, in units of r
    verify_kind: Optional[str] = "cech"  # cech, or null to check holes on the network's own complex
    resolution: int = 200
    jobs: int = 1

    @property
    def verify(self) -> Optional[ComplexKind]:
        return ComplexKind(self.verify_kind) if self.verify_kind else None

    def scenarios(self, network: NetworkConfig) -> List[Scenario]:
        return [
            Scenario(
                target=target,
                band=self.band,
                domain=network.domain,
                radius=network.radius,
                replications=self.replications,
                base_seed=self.base_seed,
                resolution=self.resolution,
            )
            for target in self.targets
        ]


@dataclass
class StorageConfig:
    """Storage configuration"""
    type: str = "local"
    local: Dict[str, Any] = field(default_factory=lambda: {
        "base_path": "results",
        "create_dirs": True
    })

    def rooted_at(self, base_path: str) -> "StorageConfig":
        """Same storage with relative keys resolved under base_path"""
        return replace(self, local={**self.local, "base_path": base_path})


@dataclass
class Config:
    """Main configuration class"""
    app: AppConfig = field(default_factory=AppConfig)
    network: NetworkConfig = field(default_factory=NetworkConfig)
    placement: PlacementConfig = field(default_factory=PlacementConfig)
    loop: LoopConfig = field(default_factory=LoopConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    storage: StorageConfig = field(default_factory=StorageConfig)

    _SECTIONS = {
        "app": AppConfig,
        "network": NetworkConfig,
        "placement": PlacementConfig,
        "loop": LoopConfig,
        "bench": BenchConfig,
        "storage": StorageConfig,
    }

    @classmethod
    def load_from_file(cls, config_path: Optional[str] = None) -> 'Config':
        """Load configuration from YAML file

        Args:
            config_path: Path to configuration file (defaults to network_recovery.yaml)

        Returns:
            Config object; sections missing from the file keep their defaults

        Raises:
            ValueError: If the file is not a mapping or a section has unknown keys
        """
        if config_path is None and Path(DEFAULT_CONFIG_FILE).exists():
            config_path = DEFAULT_CONFIG_FILE

        config = cls()
        if config_path is None:
            return config
        if not Path(config_path).exists():
            raise ValueError(f"Config file not found: {config_path}")

        with open(config_path, 'r') as f:
            yaml_data = yaml.safe_load(f)

        if not yaml_data:
            return config
        if not isinstance(yaml_data, dict):
            raise ValueError(f"Config file {config_path} must hold a mapping")

        for name, value in yaml_data.items():
            section = cls._SECTIONS.get(name)
            if section is None:
                raise ValueError(f"Unknown config section '{name}' in {config_path}")
            try:
                setattr(config, name, section(**(value or {})))
            except TypeError as e:
                raise ValueError(f"Invalid '{name}' section in {config_path}: {e}") from e

        return config

    @classmethod
    def load(cls, config_path: Optional[str] = None) -> 'Config':
        """Load configuration; command-line flags are applied by the caller"""
        return cls.load_from_file(config_path)

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {name: asdict(getattr(self, name)) for name in self._SECTIONS}

    def save_to_file(self, config_path: str):
        """Save configuration to YAML file

        Args:
            config_path: Path to save configuration
        """
        with open(config_path, 'w') as f:
            yaml.dump(self.to_dict(), f, default_flow_style=False, sort_keys=False)


# Global config instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get the global configuration instance

    Returns:
        Global Config object
    """
    global _config
    if _config is None:
        _config = Config.load()
    return _config


def set_config(config: Config):
    """Set the global configuration instance

    Args:
        config: Config object to set as global
    """
    global _config
    _config = config
