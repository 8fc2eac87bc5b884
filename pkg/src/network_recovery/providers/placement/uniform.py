"""
Uniform Placement Provider - Independent uniform draws on the square
"""
from typing import List, Sequence

import numpy as np

from ...models import Domain, Point2, TaggedPoint, from_array
from ..base import PlacementProvider


def uniform_draw(n: int, domain: Domain, rng: np.random.Generator) -> List[Point2]:
    if n < 0:
        raise ValueError(f"Number of points must be >= 0, got {n}")
    return from_array(rng.uniform(0.0, domain.side_length, size=(n, 2)))


class UniformPlacementProvider(PlacementProvider):
    """Binomial point process: existing vertices are not looked at"""

    def place(
        self,
        n: int,
        existing: Sequence[TaggedPoint],
        domain: Domain,
        r: float,
        seed: int,
        level: int = 0
    ) -> List[Point2]:
        return uniform_draw(n, domain, np.random.default_rng(seed))

    def get_strategy_name(self) -> str:
        return "uniform"
