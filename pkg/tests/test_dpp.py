import math

import numpy as np
import pytest
from scipy.spatial import cKDTree
from scipy.stats import chisquare

from network_recovery.exceptions import OverConstrainedError
from network_recovery.models import Domain, GinibreKernel, Point2, SamplerSettings, as_array
from network_recovery.services import (
    GinibreSampler,
    basis_eval,
    kernel_diag,
    sample_conditioned,
    uniform_positions,
)


def _mean_nearest_neighbor(points) -> float:
    coords = as_array(points)
    dist, _ = cKDTree(coords).query(coords, k=2)
    return float(dist[:, 1].mean())


def test_basis_values() -> None:
    assert abs(basis_eval(0, 0)) == pytest.approx(1 / math.sqrt(math.pi), abs=1e-5)
    assert basis_eval(3, 0) == 0
    assert basis_eval(1, 1).real == pytest.approx(math.exp(-0.5) / math.sqrt(math.pi), abs=1e-5)
    assert basis_eval(1, 1).real == pytest.approx(0.34218, abs=1e-5)


def test_basis_rejects_negative_index() -> None:
    with pytest.raises(ValueError):
        basis_eval(-1, 0)


def test_kernel_diagonal_at_origin(unit_domain) -> None:
    assert kernel_diag(GinibreKernel(1, unit_domain), 0) == pytest.approx(1 / math.pi)
    assert kernel_diag(GinibreKernel(2, unit_domain), 0) == pytest.approx(1 / math.pi)


def test_kernel_diagonal_in_bulk(unit_domain) -> None:
    kernel = GinibreKernel(200, unit_domain)
    assert kernel_diag(kernel, Point2(1.0, 2.0)) == pytest.approx(1 / math.pi, rel=0.01)
    assert kernel_diag(kernel, complex(-3.0, 0.5)) == pytest.approx(1 / math.pi, rel=0.01)


def test_kernel_truncation_and_scale(unit_domain) -> None:
    kernel = GinibreKernel.for_points(20, unit_domain)
    assert kernel.truncation == 25
    assert kernel.scale == pytest.approx(unit_domain.circumradius / 5)
    assert GinibreKernel.for_points(1, unit_domain, margin=0).truncation == 2

    corner = kernel.to_disk(np.array([[1.0, 1.0]]))[0]
    assert abs(corner) == pytest.approx(kernel.disk_radius)
    assert kernel.from_disk(corner)[0] == pytest.approx([1.0, 1.0])


def test_sample_nothing(unit_domain) -> None:
    assert sample_conditioned(0, [Point2(0.5, 0.5)], unit_domain, seed=1) == []


def test_sample_is_deterministic_and_inside(unit_domain) -> None:
    first = sample_conditioned(1, [], unit_domain, seed=42)
    assert first == sample_conditioned(1, [], unit_domain, seed=42)
    assert len(first) == 1
    assert unit_domain.contains(first[0])

    points = sample_conditioned(12, [Point2(0.2, 0.2)], unit_domain, seed=5)
    assert points == sample_conditioned(12, [Point2(0.2, 0.2)], unit_domain, seed=5)
    assert all(unit_domain.contains(p) for p in points)


def test_sample_in_larger_domain() -> None:
    domain = Domain(3.0)
    points = sample_conditioned(10, [Point2(2.5, 2.5)], domain, seed=3)
    assert len(points) == 10
    assert all(domain.contains(p) for p in points)


def test_sample_rejects_bad_input(unit_domain) -> None:
    with pytest.raises(ValueError):
        sample_conditioned(-1, [], unit_domain, seed=0)
    with pytest.raises(ValueError):
        sample_conditioned(2, [Point2(1.5, 0.5)], unit_domain, seed=0)


def test_conditioning_suppresses_density_at_placed_points(unit_domain) -> None:
    kernel = GinibreKernel.for_points(10, unit_domain)
    sampler = GinibreSampler(kernel, np.random.default_rng(0), SamplerSettings(envelope_grid=16))
    placed = [Point2(0.3, 0.4), Point2(0.7, 0.6), Point2(0.5, 0.1)]
    before = sampler.density(sampler.features(as_array(placed)))

    assert sampler.condition_on(placed) == 3
    after = sampler.density(sampler.features(as_array(placed)))
    assert np.all(before > 0.01)
    assert np.all(after < 1e-9)
    assert sampler.orthonormality_error() < 1e-9


def test_basis_stays_orthonormal_through_draws(unit_domain) -> None:
    kernel = GinibreKernel.for_points(30, unit_domain)
    sampler = GinibreSampler(kernel, np.random.default_rng(11))
    for _ in range(30):
        sampler.draw()
    assert sampler.rank == 30
    assert sampler.orthonormality_error() < 1e-9


def test_repeated_point_does_not_raise_rank(unit_domain) -> None:
    sampler = GinibreSampler(GinibreKernel(5, unit_domain), np.random.default_rng(0))
    assert sampler.condition_on([Point2(0.5, 0.5), Point2(0.5, 0.5)]) == 1
    assert sampler.rank == 1


def test_fully_spanned_kernel_is_over_constrained(unit_domain) -> None:
    sampler = GinibreSampler(GinibreKernel(1, unit_domain), np.random.default_rng(0))
    sampler.condition_on([Point2(0.5, 0.5)])
    with pytest.raises(OverConstrainedError):
        sampler.draw()


@pytest.mark.slow
def test_determinantal_points_repel(unit_domain) -> None:
    dpp, uniform = [], []
    for seed in range(500):
        dpp.append(_mean_nearest_neighbor(sample_conditioned(20, [], unit_domain, seed)))
        uniform.append(_mean_nearest_neighbor(uniform_positions(20, unit_domain, seed)))
    assert np.mean(dpp) >= 1.1 * np.mean(uniform)


@pytest.mark.slow
def test_short_range_pairs_are_suppressed(unit_domain) -> None:
    threshold = 0.3 / math.sqrt(20)

    def close_pairs(points) -> int:
        return len(cKDTree(as_array(points)).query_pairs(threshold))

    dpp = sum(close_pairs(sample_conditioned(20, [], unit_domain, seed)) for seed in range(500))
    uniform = sum(close_pairs(uniform_positions(20, unit_domain, seed)) for seed in range(500))
    assert dpp < 0.7 * uniform


@pytest.mark.slow
def test_first_point_is_rotationally_symmetric(unit_domain) -> None:
    kernel = GinibreKernel(10, unit_domain)
    settings = SamplerSettings(envelope_grid=8)
    angles = []
    for seed in range(2000):
        p = GinibreSampler(kernel, np.random.default_rng(seed), settings).draw(within_domain=False)
        angles.append(math.atan2(p.y - 0.5, p.x - 0.5))
    counts, _ = np.histogram(angles, bins=16, range=(-math.pi, math.pi))
    assert chisquare(counts).pvalue > 0.001
