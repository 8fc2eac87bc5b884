"""
Recovery Orchestrator Service - Addition loop, homology check and reduction
"""
import logging
import math
from typing import List, Optional, Sequence, Union

import numpy as np

from ..exceptions import LoopCapExceeded
from ..models import (
    AdditionBudget,
    AdditionRound,
    BettiPair,
    Domain,
    Point2,
    PointTag,
    RecoveryConfig,
    RecoveryResult,
    TaggedPoint,
    VertexIndex,
    tag_points,
)
from ..providers import PlacementProvider
from .placement import required_additions
from .reduction import HomologyGuard, reduce
from .simplicial import betti, build_complex
from .strategy_factory import StrategyFactory

logger = logging.getLogger(__name__)

# Seed stream keys
_PLACEMENT_STREAM = 0
_REDUCTION_STREAM = 1


def child_seed(base_seed: int, *keys: int) -> int:
    """Independent 32-bit seed derived from a base seed and integer keys"""
    if base_seed < 0 or any(k < 0 for k in keys):
        raise ValueError(f"Seeds and seed keys must be >= 0, got {base_seed}, {keys}")
    return int(np.random.SeedSequence([base_seed, *keys]).generate_state(1)[0])


def boundary_points(domain: Domain, r: float) -> List[TaggedPoint]:
    """Perimeter vertices at spacing <= r, corners included, tagged Boundary

    Each side is cut into ceil(a / r) equal segments; the 4 * ceil(a / r)
    points are listed counter-clockwise from the origin.
    """
    if r <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    a = domain.side_length
    segments = max(1, math.ceil(a / r - 1e-9))
    step = a / segments
    points = []
    for i in range(segments):
        points.append(Point2(i * step, 0.0))
    for i in range(segments):
        points.append(Point2(a, i * step))
    for i in range(segments):
        points.append(Point2(a - i * step, a))
    for i in range(segments):
        points.append(Point2(0.0, a - i * step))
    return tag_points(points, PointTag.BOUNDARY)


def _as_existing(points: Sequence[Union[Point2, TaggedPoint]]) -> List[TaggedPoint]:
    return [
        TaggedPoint(p.position if isinstance(p, TaggedPoint) else p, PointTag.EXISTING)
        for p in points
    ]


class RecoveryOrchestrator:
    """Runs the addition loop until one hole-free component, then reduces"""

    def __init__(
        self,
        placement: PlacementProvider,
        config: RecoveryConfig,
        guard: Optional[HomologyGuard] = None
    ):
        """Initialize orchestrator

        Args:
            placement: Provider for the vertices to add
            config: Radius, domain, seed and loop cap
            guard: Removal test used by the reduction
        """
        self.placement = placement
        self.config = config
        self.guard = guard

    def run(self, existing: Sequence[Union[Point2, TaggedPoint]]) -> RecoveryResult:
        """Recover coverage around the existing vertices

        Each pass is checked on the strategy's loop complex; the reduction
        runs on its complex kind. Providers that ignore the budget (grid)
        keep it at its initial value.

        Returns:
            RecoveryResult with the kept added vertices and the full trace

        Raises:
            ValueError: If an existing vertex lies outside the domain
            LoopCapExceeded: If no iteration reached (1, 0)
        """
        cfg = self.config
        domain = cfg.domain
        existing = _as_existing(existing)
        for p in existing:
            if not domain.contains(p.position):
                raise ValueError(f"Existing vertex ({p.position.x}, {p.position.y}) lies outside the domain")

        boundary = (
            tag_points([p.position for p in cfg.boundary], PointTag.BOUNDARY)
            if cfg.boundary is not None else boundary_points(domain, cfg.radius)
        )
        base = existing + boundary
        kinds = cfg.strategy
        budget = AdditionBudget(n_a=required_additions(domain.side_length, cfg.radius, len(existing)))

        additions: List[AdditionRound] = []
        last = BettiPair(0, 0)
        complex_ = None
        for iteration in range(cfg.max_iterations):
            if iteration > 0 and self.placement.uses_budget:
                budget.grow()
            added = self.placement.place(
                budget.n_a,
                existing,
                domain,
                cfg.radius,
                child_seed(cfg.seed, iteration, _PLACEMENT_STREAM),
                level=iteration,
            )
            points = base + tag_points(added, PointTag.ADDED)
            complex_ = build_complex(points, cfg.radius, kinds.loop_kind)
            last = betti(complex_)
            additions.append(AdditionRound(iteration=iteration, n_added=len(added), betti=last))
            logger.info(
                "Iteration %d: %d %s vertices added, betti %s",
                iteration, len(added), self.placement.get_strategy_name(), last.as_tuple(),
            )
            if last.is_recovered:
                break
        else:
            raise LoopCapExceeded(cfg.max_iterations, last.as_tuple())

        if kinds.loop_kind is not kinds.complex_kind:
            complex_ = build_complex(points, cfg.radius, kinds.complex_kind)

        reduction = reduce(
            complex_,
            VertexIndex.for_complex(complex_),
            seed=child_seed(cfg.seed, len(additions) - 1, _REDUCTION_STREAM),
            guard=self.guard,
        )
        final = reduction.complex
        kept = [final.points[v].position for v in final.ids_with_tag(PointTag.ADDED)]
        removed = [complex_.points[v].position for v in reduction.removed]
        logger.info(
            "Reduction kept %d of %d added vertices (%d steps)",
            len(kept), additions[-1].n_added, len(reduction.steps),
        )

        return RecoveryResult(
            kept=kept,
            removed=removed,
            betti=betti(final),
            additions=additions,
            steps=reduction.steps,
            seed=cfg.seed,
            strategy=self.placement.get_strategy_name(),
            n_existing=len(existing),
            n_boundary=len(boundary),
            complex=final,
        )


def run_recovery(
    existing: Sequence[Union[Point2, TaggedPoint]],
    cfg: Optional[RecoveryConfig] = None,
    guard: Optional[HomologyGuard] = None
) -> RecoveryResult:
    """Full recovery run with the placement provider of cfg.strategy"""
    cfg = cfg or RecoveryConfig()
    provider = StrategyFactory.create_placement_provider(cfg.strategy, cfg.sampler)
    return RecoveryOrchestrator(provider, cfg, guard).run(existing)
