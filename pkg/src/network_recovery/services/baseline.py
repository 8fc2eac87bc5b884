"""
Baseline Service - Greedy furthest-point set cover on a candidate lattice
"""
import logging
from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.spatial import cKDTree

from ..models import GreedyConfig, Point2, TaggedPoint, as_array
from .geometry import GEOM_EPS
from .placement import grid_positions

logger = logging.getLogger(__name__)

# Candidates whose distances differ by less than this are tied
TIE_TOLERANCE = 1e-12


def candidate_lattice(cfg: GreedyConfig) -> List[Point2]:
    """Centered lattice of potential new vertices"""
    return grid_positions(cfg.domain, cfg.radius, cfg.lattice_kind)


def greedy_cover(
    existing: Sequence[Union[Point2, TaggedPoint]],
    cfg: Optional[GreedyConfig] = None
) -> List[Point2]:
    """Add the open candidate furthest from all vertices until none is open

    A candidate is open while no existing vertex lies within the stop radius
    and no selected candidate within the added stop radius. With equal radii
    this is the plain rule: stop once the furthest candidate is within the
    stop radius. Returns the added candidates in selection order; ties go to
    the lowest candidate index.
    """
    cfg = cfg or GreedyConfig()
    candidates = candidate_lattice(cfg)
    coords = as_array(candidates)

    if len(existing):
        gap, _ = cKDTree(as_array(existing)).query(coords, k=1)
    else:
        gap = np.full(len(coords), np.inf)

    stop = cfg.effective_stop_radius * (1 + GEOM_EPS)
    added_stop = cfg.effective_added_stop_radius * (1 + GEOM_EPS)
    open_ = gap > stop
    chosen: List[int] = []
    while open_.any():
        furthest = float(gap[open_].max())
        pick = int(np.flatnonzero(open_ & (gap >= furthest - TIE_TOLERANCE))[0])
        chosen.append(pick)
        reach = np.hypot(*(coords - coords[pick]).T)
        gap = np.minimum(gap, reach)
        open_ &= reach > added_stop

    logger.debug("Greedy cover added %d of %d candidates", len(chosen), len(candidates))
    return [candidates[i] for i in chosen]
