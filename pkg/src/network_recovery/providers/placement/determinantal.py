"""
Determinantal Placement Provider - Ginibre draws conditioned on the existing vertices
"""
from typing import Any, Dict, List, Sequence

from ...models import Domain, Point2, SamplerSettings, TaggedPoint
from ..base import PlacementProvider


class DeterminantalPlacementProvider(PlacementProvider):
    """Repulsive placement: existing vertices count as the first points drawn"""

    def __init__(self, config: Dict[str, Any]):
        """Initialize determinantal provider

        Config should include:
        - margin: Relative truncation headroom of the kernel (default: 0.25)
        - envelope_grid: Envelope lattice per axis (default: 64)
        - safety_factor: Envelope multiplier (default: 1.5)
        - max_proposals: Rejection budget per point (default: 20000)
        """
        super().__init__(config)
        self.settings = SamplerSettings(
            margin=config.get("margin", 0.25),
            envelope_grid=config.get("envelope_grid", 64),
            safety_factor=config.get("safety_factor", 1.5),
            max_proposals=config.get("max_proposals", 20000),
        )

    def place(
        self,
        n: int,
        existing: Sequence[TaggedPoint],
        domain: Domain,
        r: float,
        seed: int,
        level: int = 0
    ) -> List[Point2]:
        from ...services.ginibre import sample_conditioned

        return sample_conditioned(n, list(existing), domain, seed, self.settings)

    def get_strategy_name(self) -> str:
        return "dpp"
