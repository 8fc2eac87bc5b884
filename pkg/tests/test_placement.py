import math

import numpy as np
import pytest
from conftest import tagged

from network_recovery.models import (
    AdditionStrategy,
    ComplexKind,
    Domain,
    Point2,
    PointTag,
    StrategyKind,
    as_array,
)
from network_recovery.providers import (
    DeterminantalPlacementProvider,
    GridPlacementProvider,
    UniformPlacementProvider,
)
from network_recovery.providers.placement import lattice_spacing
from network_recovery.services import (
    StrategyFactory,
    coverage_fraction,
    grid_positions,
    place,
    required_additions,
    uniform_positions,
)

CORNERS = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def _axis(points):
    return sorted({round(p.x, 5) for p in points})


def test_required_additions() -> None:
    assert required_additions(1, 0.25, 0) == 6
    assert required_additions(1, 0.25, 4) == 2
    assert required_additions(1, 0.25, 10) == 0


def test_required_additions_rejects_bad_geometry() -> None:
    with pytest.raises(ValueError):
        required_additions(1, 0, 0)
    with pytest.raises(ValueError):
        required_additions(-1, 0.25, 0)


def test_rips_grid(unit_domain) -> None:
    points = grid_positions(unit_domain, 0.25, ComplexKind.RIPS)
    assert len(points) == 9
    assert _axis(points) == [0.0, 0.5, 1.0]
    assert all(unit_domain.contains(p, tol=0) for p in points)


def test_cech_grid_is_centered_and_covers(unit_domain) -> None:
    points = grid_positions(unit_domain, 0.25, ComplexKind.CECH)
    assert len(points) == 9
    assert _axis(points) == [0.14645, 0.5, 0.85355]
    assert coverage_fraction(points, 0.25, unit_domain) == 1.0


def test_cech_grid_for_smaller_radius(unit_domain) -> None:
    assert len(grid_positions(unit_domain, 0.2, ComplexKind.CECH)) == 16


def test_lattice_levels() -> None:
    r = 0.25
    assert lattice_spacing(r, ComplexKind.RIPS, 0) == pytest.approx(0.5)
    assert lattice_spacing(r, ComplexKind.RIPS, 1) == pytest.approx(math.sqrt(2) * r)
    assert lattice_spacing(r, ComplexKind.RIPS, 2) == pytest.approx(math.sqrt(2) * r / 2)
    assert lattice_spacing(r, ComplexKind.CECH, 0) == pytest.approx(math.sqrt(2) * r)
    assert lattice_spacing(r, ComplexKind.CECH, 1) == pytest.approx(math.sqrt(2) * r / 2)
    with pytest.raises(ValueError):
        lattice_spacing(r, ComplexKind.RIPS, -1)


def test_uniform_positions(unit_domain) -> None:
    assert uniform_positions(0, unit_domain, seed=1) == []
    points = uniform_positions(1000, unit_domain, seed=1)
    assert 0.47 <= as_array(points)[:, 0].mean() <= 0.53
    assert points == uniform_positions(1000, unit_domain, seed=1)
    assert points != uniform_positions(1000, unit_domain, seed=2)
    assert all(unit_domain.contains(p) for p in points)


def test_place_grid_ignores_requested_count(unit_domain) -> None:
    strategy = AdditionStrategy(StrategyKind.GRID, ComplexKind.RIPS)
    for n in (0, 3, 50):
        points = place(strategy, n, [], unit_domain, 0.25, seed=n)
        assert len(points) == 9
        assert all(p.tag is PointTag.ADDED for p in points)


def test_place_uniform_is_reproducible(unit_domain) -> None:
    strategy = AdditionStrategy(StrategyKind.UNIFORM)
    points = place(strategy, 6, [], unit_domain, 0.25, seed=9)
    assert len(points) == 6
    assert points == place(strategy, 6, [], unit_domain, 0.25, seed=9)


def test_place_determinantal_with_existing(unit_domain) -> None:
    strategy = AdditionStrategy(StrategyKind.DETERMINANTAL)
    existing = tagged(CORNERS)
    points = place(strategy, 6, existing, unit_domain, 0.25, seed=4)
    assert len(points) == 6
    assert all(p.tag is PointTag.ADDED and unit_domain.contains(p.position) for p in points)


def test_place_rejects_negative_count(unit_domain) -> None:
    with pytest.raises(ValueError):
        place(AdditionStrategy(StrategyKind.UNIFORM), -1, [], unit_domain, 0.25, seed=0)


def test_factory_builds_providers() -> None:
    grid = StrategyFactory.create_placement_provider(AdditionStrategy(StrategyKind.GRID, ComplexKind.CECH))
    uniform = StrategyFactory.create_placement_provider(AdditionStrategy(StrategyKind.UNIFORM))
    dpp = StrategyFactory.create_placement_provider(AdditionStrategy(StrategyKind.DETERMINANTAL))
    assert isinstance(grid, GridPlacementProvider)
    assert grid.complex_kind is ComplexKind.CECH
    assert not grid.uses_budget
    assert isinstance(uniform, UniformPlacementProvider)
    assert isinstance(dpp, DeterminantalPlacementProvider)
    assert [p.get_strategy_name() for p in (grid, uniform, dpp)] == ["grid", "uniform", "dpp"]


def test_factory_parses_strategy_names() -> None:
    strategy = StrategyFactory.parse_strategy("DPP", ComplexKind.CECH)
    assert strategy.kind is StrategyKind.DETERMINANTAL
    assert strategy.complex_kind is ComplexKind.CECH
    with pytest.raises(ValueError):
        StrategyFactory.parse_strategy("greedy")


def test_grid_in_larger_domain() -> None:
    domain = Domain(2.0)
    points = grid_positions(domain, 0.25, ComplexKind.RIPS)
    assert len(points) == 25
    assert max(p.x for p in points) == pytest.approx(2.0)


@pytest.mark.slow
def test_determinantal_points_avoid_existing(unit_domain) -> None:
    corners = as_array([Point2(x, y) for x, y in CORNERS])
    existing = tagged(CORNERS)
    dpp_strategy = AdditionStrategy(StrategyKind.DETERMINANTAL)
    uniform_strategy = AdditionStrategy(StrategyKind.UNIFORM)

    def gap(points) -> float:
        coords = as_array(points)
        return float(np.min(np.hypot(*(coords[:, None, :] - corners[None, :, :]).transpose(2, 0, 1))))

    dpp = [gap(place(dpp_strategy, 6, existing, unit_domain, 0.25, seed)) for seed in range(200)]
    uniform = [gap(place(uniform_strategy, 6, existing, unit_domain, 0.25, seed)) for seed in range(200)]
    assert np.mean(dpp) >= 1.1 * np.mean(uniform)
