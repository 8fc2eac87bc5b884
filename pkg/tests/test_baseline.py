import numpy as np
import pytest

from network_recovery.models import ComplexKind, Domain, GreedyConfig, Point2, as_array
from network_recovery.services import candidate_lattice, greedy_cover


def _cfg(**kwargs) -> GreedyConfig:
    return GreedyConfig(domain=Domain(1.0), radius=0.25, **kwargs)


def test_candidates_are_cech_lattice() -> None:
    candidates = candidate_lattice(_cfg())
    assert len(candidates) == 9
    assert sorted({round(p.x, 5) for p in candidates}) == [0.14645, 0.5, 0.85355]


def test_empty_network_takes_every_candidate() -> None:
    added = greedy_cover([], _cfg())
    assert len(added) == 9
    assert added[0] == candidate_lattice(_cfg())[0]
    assert len(set(added)) == 9


def test_centre_vertex_excludes_centre_candidate() -> None:
    added = greedy_cover([Point2(0.5, 0.5)], _cfg())
    assert len(added) == 8
    assert all(p != Point2(0.5, 0.5) for p in added)


def test_dense_network_needs_nothing() -> None:
    existing = candidate_lattice(_cfg())
    assert greedy_cover(existing, _cfg()) == []


def test_larger_stop_radius_adds_fewer() -> None:
    assert len(greedy_cover([], _cfg(stop_radius=0.5))) < 9


def test_greedy_is_deterministic() -> None:
    existing = [Point2(0.1, 0.9), Point2(0.6, 0.2)]
    assert greedy_cover(existing, _cfg()) == greedy_cover(existing, _cfg())


def test_rips_candidate_lattice() -> None:
    cfg = _cfg(lattice_kind=ComplexKind.RIPS)
    assert sorted({p.x for p in candidate_lattice(cfg)}) == [0.0, 0.5, 1.0]


def test_config_validation() -> None:
    with pytest.raises(ValueError):
        GreedyConfig(radius=0)
    with pytest.raises(ValueError):
        GreedyConfig(stop_radius=-1)
    assert GreedyConfig(radius=0.3).effective_stop_radius == 0.3


def test_added_stop_radius_settles_lattice_neighbours() -> None:
    lattice = candidate_lattice(_cfg())
    added = greedy_cover([], _cfg(added_stop_radius=0.5))
    assert added == [lattice[i] for i in (0, 8, 2, 6)]
    assert GreedyConfig(stop_radius=0.3).effective_added_stop_radius == 0.3
    with pytest.raises(ValueError):
        GreedyConfig(added_stop_radius=0)


def _gaps_to(points, vertices) -> np.ndarray:
    coords = as_array(points)
    if not vertices:
        return np.full(len(coords), np.inf)
    others = as_array(vertices)
    return np.hypot(
        coords[:, None, 0] - others[None, :, 0],
        coords[:, None, 1] - others[None, :, 1],
    ).min(axis=1)


@pytest.mark.parametrize("added_factor", [None, 2.0])
def test_greedy_invariants_on_random_networks(added_factor) -> None:
    rng = np.random.default_rng(21)
    for _ in range(60):
        existing = [Point2(*xy) for xy in rng.uniform(0.0, 1.0, size=(int(rng.integers(0, 9)), 2))]
        stop = float(rng.uniform(0.2, 0.6))
        added_stop = None if added_factor is None else added_factor * 0.25
        cfg = _cfg(stop_radius=stop, added_stop_radius=added_stop)
        lattice = candidate_lattice(cfg)
        added = greedy_cover(existing, cfg)

        assert all(p in lattice for p in added)
        assert len(set(added)) == len(added)

        selected_gaps = [
            float(_gaps_to([p], existing + added[:i])[0]) for i, p in enumerate(added)
        ]
        assert all(b <= a + 1e-9 for a, b in zip(selected_gaps, selected_gaps[1:]))

        limit = 1 + 1e-9
        near_existing = _gaps_to(lattice, existing) <= stop * limit
        near_added = _gaps_to(lattice, added) <= cfg.effective_added_stop_radius * limit
        assert np.all(near_existing | near_added)
        if added_factor is None:
            assert np.all(_gaps_to(lattice, existing + added) <= stop * limit)
