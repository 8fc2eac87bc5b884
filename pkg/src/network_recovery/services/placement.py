"""
Placement Service - Addition budget and the strategy-independent placement entry point
"""
import math
from typing import List, Optional, Sequence

import numpy as np

from ..models import (
    AdditionStrategy,
    ComplexKind,
    Domain,
    Point2,
    PointTag,
    SamplerSettings,
    TaggedPoint,
    tag_points,
)
from ..providers.placement import lattice_points, lattice_spacing, uniform_draw
from .strategy_factory import StrategyFactory


def required_additions(a: float, r: float, n_i: int) -> int:
    """max(0, ceil(a^2 / (pi r^2)) - N_i): disks needed by area, minus those present"""
    if a <= 0 or r <= 0:
        raise ValueError(f"Side and radius must be positive, got a={a}, r={r}")
    return max(0, math.ceil(a * a / (math.pi * r * r)) - n_i)


def grid_positions(
    domain: Domain,
    r: float,
    kind: ComplexKind = ComplexKind.RIPS,
    level: int = 0
) -> List[Point2]:
    """Centered m x m lattice; m = floor(a / s) + 1 with s = sqrt(2) r (Cech) or 2r (Rips)"""
    return lattice_points(domain, lattice_spacing(r, kind, level))


def uniform_positions(n: int, domain: Domain, seed: int) -> List[Point2]:
    return uniform_draw(n, domain, np.random.default_rng(seed))


def place(
    strategy: AdditionStrategy,
    n: int,
    existing: Sequence[TaggedPoint],
    domain: Domain,
    r: float,
    seed: int,
    level: int = 0,
    sampler: Optional[SamplerSettings] = None
) -> List[TaggedPoint]:
    """Vertices to add, tagged Added

    Grid returns the lattice of the given level whatever n; uniform draws n
    points ignoring ``existing``; determinantal draws n points conditioned
    on ``existing``.
    """
    if n < 0:
        raise ValueError(f"Number of points must be >= 0, got {n}")
    provider = StrategyFactory.create_placement_provider(strategy, sampler)
    points = provider.place(n, existing, domain, r, seed, level=level)
    return tag_points(points, PointTag.ADDED)
