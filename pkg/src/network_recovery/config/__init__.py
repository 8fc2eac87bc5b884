"""
Configuration module for network recovery
"""

from .config import (
    DEFAULT_CONFIG_FILE,
    Config,
    AppConfig,
    NetworkConfig,
    PlacementConfig,
    LoopConfig,
    BenchConfig,
    StorageConfig,
    get_config,
    set_config
)

__all__ = [
    "DEFAULT_CONFIG_FILE",
    "Config",
    "AppConfig",
    "NetworkConfig",
    "PlacementConfig",
    "LoopConfig",
    "BenchConfig",
    "StorageConfig",
    "get_config",
    "set_config"
]
