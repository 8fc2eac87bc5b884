"""
Core services for network recovery
"""
from .baseline import candidate_lattice, greedy_cover
from .geometry import GEOM_EPS, coverage_fraction, distance, min_enclosing_radius
from .ginibre import GinibreSampler, basis_eval, kernel_diag, sample_conditioned
from .harness import (
    BenchmarkHarness,
    aggregate,
    evaluate_robustness,
    generate_scenario,
    run_benchmark,
    split_seed,
)
from .placement import grid_positions, place, required_additions, uniform_positions
from .recovery import RecoveryOrchestrator, boundary_points, child_seed, run_recovery
from .reduction import HomologyGuard, reduce, triangle_degree, vertex_index
from .simplicial import (
    betti,
    build_cech,
    build_complex,
    build_rips,
    component_count,
    remove_vertex,
)
from .strategy_factory import StrategyFactory

__all__ = [
    "BenchmarkHarness",
    "GEOM_EPS",
    "GinibreSampler",
    "HomologyGuard",
    "RecoveryOrchestrator",
    "StrategyFactory",
    "aggregate",
    "basis_eval",
    "betti",
    "boundary_points",
    "build_cech",
    "build_complex",
    "build_rips",
    "candidate_lattice",
    "child_seed",
    "component_count",
    "coverage_fraction",
    "distance",
    "evaluate_robustness",
    "generate_scenario",
    "greedy_cover",
    "grid_positions",
    "kernel_diag",
    "min_enclosing_radius",
    "place",
    "reduce",
    "remove_vertex",
    "required_additions",
    "run_benchmark",
    "run_recovery",
    "sample_conditioned",
    "split_seed",
    "triangle_degree",
    "uniform_positions",
    "vertex_index",
]
