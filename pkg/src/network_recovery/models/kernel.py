"""
Kernel Model - Truncated Ginibre kernel fitted to the domain square
"""
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import Domain


@dataclass(frozen=True)
class SamplerSettings:
    """Tuning of the conditioned rejection sampler"""
    margin: float = 0.25  # relative truncation headroom
    envelope_grid: int = 64  # per axis, for the envelope estimate
    safety_factor: float = 1.5
    max_proposals: int = 20000  # per drawn point

    def __post_init__(self):
        if self.margin < 0:
            raise ValueError(f"Truncation margin must be >= 0, got {self.margin}")
        if self.envelope_grid < 2:
            raise ValueError(f"Envelope grid must be >= 2, got {self.envelope_grid}")
        if self.safety_factor < 1:
            raise ValueError(f"Safety factor must be >= 1, got {self.safety_factor}")
        if self.max_proposals < 1:
            raise ValueError(f"Proposal cap must be >= 1, got {self.max_proposals}")


@dataclass(frozen=True)
class GinibreKernel:
    """Projection kernel built from the first ``truncation`` Ginibre basis functions

    The sampling disk of radius sqrt(N) is mapped onto the circle that
    circumscribes the domain square: a domain point p corresponds to the
    complex number (p - center) / scale.
    """
    truncation: int
    domain: Domain = field(default_factory=Domain)

    def __post_init__(self):
        if self.truncation < 1:
            raise ValueError(f"Kernel truncation must be >= 1, got {self.truncation}")

    @property
    def scale(self) -> float:
        return self.domain.circumradius / math.sqrt(self.truncation)

    @property
    def disk_radius(self) -> float:
        return math.sqrt(self.truncation)

    def to_disk(self, coords: np.ndarray) -> np.ndarray:
        """Map (n, 2) domain coordinates to complex disk coordinates"""
        coords = np.asarray(coords, dtype=float).reshape(-1, 2)
        c = self.domain.side_length / 2
        return ((coords[:, 0] - c) + 1j * (coords[:, 1] - c)) / self.scale

    def from_disk(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=complex).reshape(-1) * self.scale
        c = self.domain.side_length / 2
        return np.column_stack([z.real + c, z.imag + c])

    @classmethod
    def for_points(cls, n_points: int, domain: Domain, margin: float = 0.25) -> "GinibreKernel":
        """Kernel wide enough to hold n_points with a relative margin"""
        truncation = max(1, math.ceil(n_points * (1 + margin)))
        if truncation <= n_points:
            truncation = n_points + 1
        return cls(truncation=truncation, domain=domain)
