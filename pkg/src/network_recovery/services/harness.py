"""
Benchmark Harness Service - Damaged-network scenarios and Monte Carlo comparison of strategies
"""
import asyncio
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import RecoveryError
from ..models import (
    GREEDY,
    AdditionStrategy,
    BenchRow,
    ComplexKind,
    Domain,
    GreedyConfig,
    Point2,
    PointTag,
    RecoveryConfig,
    RobustnessRow,
    RunRecord,
    SamplerSettings,
    Scenario,
    StrategyKind,
    TaggedPoint,
    as_array,
    from_array,
    tag_points,
)
from ..providers.placement import uniform_draw
from .baseline import greedy_cover
from .geometry import coverage_fraction
from .recovery import boundary_points, child_seed, run_recovery
from .simplicial import betti, build_complex

logger = logging.getLogger(__name__)

MAX_REJECTIONS = 1000
# Draws between adjustments of the scenario point count
_ADJUST_EVERY = 10

# Greedy stop radii in units of r: the coverage ball of an existing vertex,
# and the Rips neighbourhood of a selected candidate
GREEDY_STOP_FACTOR = 1.0
GREEDY_ADDED_FACTOR = 2.0

# Seed stream keys below the per-scenario key
_RECOVERY_STREAM = 1
_JITTER_STREAM = 2


def split_seed(base_seed: int, *keys: int) -> int:
    return child_seed(base_seed, *keys)


def _scenario_key(s: Scenario) -> int:
    return round(s.target * 10000)


def draw_scenario(s: Scenario, replication: int) -> Tuple[List[TaggedPoint], float]:
    """Existing vertices of one replication and their covered fraction

    Starts from the Boolean-model count n = -ln(1 - target) a^2 / (pi r^2)
    and redraws uniform sets until the coverage falls within target +- band,
    moving n towards the side the rejected draws fell on.
    """
    rng = np.random.default_rng(split_seed(s.base_seed, _scenario_key(s), replication))
    a, r = s.domain.side_length, s.radius
    n = max(1, round(-math.log(1 - s.target) * a * a / (math.pi * r * r)))
    band = s.band
    too_low = too_high = 0
    rejections = 0
    while True:
        points = uniform_draw(n, s.domain, rng)
        coverage = coverage_fraction(points, r, s.domain, s.resolution)
        if abs(coverage - s.target) <= band + 1e-12:
            return tag_points(points, PointTag.EXISTING), coverage

        rejections += 1
        if coverage < s.target:
            too_low += 1
        else:
            too_high += 1
        if rejections % _ADJUST_EVERY == 0:
            if too_low > 2 * too_high:
                n += 1
            elif too_high > 2 * too_low and n > 1:
                n -= 1
            too_low = too_high = 0
        if rejections % MAX_REJECTIONS == 0:
            band *= 2
            logger.warning(
                "Scenario %s replication %d: %d rejections, widening band to %.4f",
                s.label, replication, rejections, band,
            )


def generate_scenario(s: Scenario, replication: int) -> List[TaggedPoint]:
    """Existing vertices with coverage within the scenario band; deterministic per replication"""
    points, _ = draw_scenario(s, replication)
    return points


def evaluate_robustness(
    base: Sequence[TaggedPoint],
    kept: Sequence[Point2],
    radius: float,
    domain: Domain,
    kind: ComplexKind,
    sigma: float,
    trials: int,
    seed: int
) -> int:
    """Number of trials whose complex stays (1, 0) after jittering the kept vertices

    Each kept vertex moves by isotropic Gaussian noise of standard deviation
    sigma, clipped to the domain; the base vertices stay put.
    """
    if sigma < 0:
        raise ValueError(f"Jitter sigma must be >= 0, got {sigma}")
    rng = np.random.default_rng(seed)
    coords = as_array(kept)
    hole_free = 0
    for _ in range(trials):
        moved = coords + rng.normal(0.0, sigma, size=coords.shape)
        moved = np.clip(moved, 0.0, domain.side_length)
        points = list(base) + tag_points(from_array(moved), PointTag.ADDED)
        if betti(build_complex(points, radius, kind)).is_recovered:
            hole_free += 1
    return hole_free


@dataclass(frozen=True)
class ReplicationTask:
    """All strategies on one scenario draw; picklable for worker processes"""
    scenario: Scenario
    replication: int
    strategies: Tuple[str, ...]
    complex_kind: ComplexKind = ComplexKind.RIPS
    sampler: SamplerSettings = field(default_factory=SamplerSettings)
    max_iterations: int = 30
    verify_kind: Optional[ComplexKind] = ComplexKind.CECH
    greedy_stop_factor: float = GREEDY_STOP_FACTOR
    greedy_added_factor: float = GREEDY_ADDED_FACTOR
    jitter_sigma: float = 0.0
    jitter_trials: int = 0


def run_replication(task: ReplicationTask) -> List[RunRecord]:
    """Run every strategy of the task on the same existing vertices"""
    s = task.scenario
    existing, coverage = draw_scenario(s, task.replication)
    seed = split_seed(s.base_seed, _scenario_key(s), task.replication, _RECOVERY_STREAM)
    boundary = boundary_points(s.domain, s.radius)

    records = []
    for name in task.strategies:
        record = RunRecord(
            scenario=s.label,
            target=s.target,
            strategy=name,
            replication=task.replication,
            seed=seed,
            n_existing=len(existing),
            coverage=coverage,
        )
        try:
            if name == GREEDY:
                kept = greedy_cover(existing, GreedyConfig(
                    domain=s.domain,
                    radius=s.radius,
                    stop_radius=task.greedy_stop_factor * s.radius,
                    added_stop_radius=task.greedy_added_factor * s.radius,
                ))
                record.added = record.final = len(kept)
                record.iterations = 1
            else:
                result = run_recovery(existing, RecoveryConfig(
                    radius=s.radius,
                    domain=s.domain,
                    strategy=AdditionStrategy(StrategyKind(name), task.complex_kind, task.verify_kind),
                    seed=seed,
                    max_iterations=task.max_iterations,
                    boundary=boundary,
                    sampler=task.sampler,
                ))
                kept = result.kept
                record.added = result.n_added
                record.final = result.n_kept
                record.iterations = result.iterations
            if task.jitter_trials:
                record.jitter_trials = task.jitter_trials
                record.hole_free = evaluate_robustness(
                    existing + boundary, kept, s.radius, s.domain, task.complex_kind,
                    task.jitter_sigma, task.jitter_trials,
                    split_seed(seed, _JITTER_STREAM),
                )
        except RecoveryError as e:
            record.failed = True
            record.error = str(e)
            logger.warning(
                "Scenario %s replication %d (%s) failed: %s",
                s.label, task.replication, name, e,
            )
        records.append(record)
    return records


def _mean_and_stderr(values: Sequence[float]) -> Tuple[float, float]:
    if not values:
        return 0.0, 0.0
    data = np.asarray(values, dtype=float)
    if len(data) < 2:
        return float(data.mean()), 0.0
    return float(data.mean()), float(data.std(ddof=1) / math.sqrt(len(data)))


def aggregate(
    records: Sequence[RunRecord],
    scenarios: Sequence[Scenario],
    strategies: Sequence[str]
) -> List[BenchRow]:
    """One row per (scenario, strategy), scenarios outermost, failed runs excluded"""
    rows = []
    for s in scenarios:
        for name in strategies:
            runs = [r for r in records if r.scenario == s.label and r.strategy == name]
            ok = [r for r in runs if not r.failed]
            mean_added, stderr_added = _mean_and_stderr([r.added for r in ok])
            mean_final, stderr_final = _mean_and_stderr([r.final for r in ok])
            mean_coverage, _ = _mean_and_stderr([r.coverage for r in runs])
            rows.append(BenchRow(
                scenario=s.label,
                strategy=name,
                reps=len(ok),
                mean_added=mean_added,
                mean_final=mean_final,
                stderr=stderr_final,
                stderr_added=stderr_added,
                mean_coverage=mean_coverage,
                target=s.target,
                failed=len(runs) - len(ok),
            ))
    return rows


def robustness_rows(
    records: Sequence[RunRecord],
    scenarios: Sequence[Scenario],
    strategies: Sequence[str],
    sigma: float
) -> List[RobustnessRow]:
    rows = []
    for s in scenarios:
        for name in strategies:
            runs = [
                r for r in records
                if r.scenario == s.label and r.strategy == name and not r.failed
            ]
            rows.append(RobustnessRow(
                scenario=s.label,
                strategy=name,
                sigma=sigma,
                trials=sum(r.jitter_trials for r in runs),
                hole_free=sum(r.hole_free for r in runs),
            ))
    return rows


class BenchmarkHarness:
    """Runs replications sequentially or on a process pool and aggregates them"""

    def __init__(
        self,
        complex_kind: ComplexKind = ComplexKind.RIPS,
        sampler: Optional[SamplerSettings] = None,
        max_iterations: int = 30,
        greedy_stop_factor: float = GREEDY_STOP_FACTOR,
        jobs: int = 1,
        verify_kind: Optional[ComplexKind] = ComplexKind.CECH,
        greedy_added_factor: float = GREEDY_ADDED_FACTOR
    ):
        """Initialize harness

        Args:
            complex_kind: Complex reduced by the homology strategies
            sampler: Determinantal sampler tuning
            max_iterations: Addition loop cap
            greedy_stop_factor: Greedy stop radius around existing vertices, in units of r
            jobs: Worker processes; 1 runs in the event loop
            verify_kind: Complex that ends the addition loop (None: complex_kind)
            greedy_added_factor: Greedy stop radius around selected candidates, in units of r
        """
        if jobs < 1:
            raise ValueError(f"Job count must be >= 1, got {jobs}")
        if greedy_stop_factor <= 0 or greedy_added_factor <= 0:
            raise ValueError(
                f"Greedy stop factors must be positive, got {greedy_stop_factor}, {greedy_added_factor}"
            )
        if complex_kind is ComplexKind.CECH and verify_kind is ComplexKind.RIPS:
            raise ValueError("A Rips check does not certify a Cech complex")
        self.complex_kind = complex_kind
        self.verify_kind = verify_kind
        self.sampler = sampler or SamplerSettings()
        self.max_iterations = max_iterations
        self.greedy_stop_factor = greedy_stop_factor
        self.greedy_added_factor = greedy_added_factor
        self.jobs = jobs
        self.records: List[RunRecord] = []

    def _tasks(
        self,
        scenarios: Sequence[Scenario],
        strategies: Sequence[str],
        replications: int,
        jitter_sigma: float,
        jitter_trials: int
    ) -> List[ReplicationTask]:
        return [
            ReplicationTask(
                scenario=s,
                replication=rep,
                strategies=tuple(strategies),
                complex_kind=self.complex_kind,
                sampler=self.sampler,
                max_iterations=self.max_iterations,
                verify_kind=self.verify_kind,
                greedy_stop_factor=self.greedy_stop_factor,
                greedy_added_factor=self.greedy_added_factor,
                jitter_sigma=jitter_sigma,
                jitter_trials=jitter_trials,
            )
            for s in scenarios
            for rep in range(replications)
        ]

    async def run(
        self,
        scenarios: Sequence[Scenario],
        strategies: Sequence[str],
        replications: int,
        jitter_sigma: float = 0.0,
        jitter_trials: int = 0
    ) -> List[BenchRow]:
        """Run every (scenario, replication) and aggregate

        Args:
            scenarios: Scenario definitions, in output order
            strategies: Strategy names (grid, uniform, dpp, greedy), in output order
            replications: Draws per scenario
            jitter_sigma: Standard deviation of the robustness jitter
            jitter_trials: Jittered copies per run (0 disables the check)

        Returns:
            BenchRow list; per-run records are kept in ``self.records``
        """
        if replications < 1:
            raise ValueError(f"Replications must be >= 1, got {replications}")
        for name in strategies:
            if name != GREEDY and name not in {k.value for k in StrategyKind}:
                raise ValueError(f"Unsupported benchmark strategy: {name}")

        tasks = self._tasks(scenarios, strategies, replications, jitter_sigma, jitter_trials)
        logger.info(
            "Running %d scenarios x %d replications x %d strategies on %d job(s)",
            len(scenarios), replications, len(strategies), self.jobs,
        )

        if self.jobs > 1:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                results = await asyncio.gather(
                    *(loop.run_in_executor(pool, run_replication, task) for task in tasks)
                )
        else:
            results = []
            for task in tasks:
                results.append(run_replication(task))
                if task.replication == replications - 1:
                    logger.info("Scenario %s done", task.scenario.label)
                await asyncio.sleep(0)

        self.records = [record for batch in results for record in batch]
        failed = sum(1 for r in self.records if r.failed)
        if failed:
            logger.warning("%d of %d runs failed and are excluded", failed, len(self.records))
        return aggregate(self.records, scenarios, strategies)


async def run_benchmark(
    scenarios: Sequence[Scenario],
    strategies: Sequence[str],
    replications: int,
    base_seed: Optional[int] = None,
    jobs: int = 1,
    complex_kind: ComplexKind = ComplexKind.RIPS,
    sampler: Optional[SamplerSettings] = None,
    max_iterations: int = 30,
    greedy_stop_factor: float = GREEDY_STOP_FACTOR,
    verify_kind: Optional[ComplexKind] = ComplexKind.CECH,
    greedy_added_factor: float = GREEDY_ADDED_FACTOR
) -> List[BenchRow]:
    """Aggregated rows for every (scenario, strategy); base_seed overrides the scenarios' own"""
    if base_seed is not None:
        scenarios = [replace(s, base_seed=base_seed) for s in scenarios]
    harness = BenchmarkHarness(
        complex_kind, sampler, max_iterations, greedy_stop_factor, jobs,
        verify_kind=verify_kind, greedy_added_factor=greedy_added_factor,
    )
    return await harness.run(scenarios, strategies, replications)

