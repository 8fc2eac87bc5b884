import json
import math
from pathlib import Path
from typing import List, Sequence, Tuple

import pytest

from network_recovery.models import Domain, Point2, PointTag, TaggedPoint, tag_points

DATA_DIR = Path(__file__).parent.parent / "data" / "networks"


def tagged(coords: Sequence[Tuple[float, float]], tag: PointTag = PointTag.EXISTING) -> List[TaggedPoint]:
    return tag_points([Point2(x, y) for x, y in coords], tag)


def equilateral(side: float) -> List[Tuple[float, float]]:
    return [(0.0, 0.0), (side, 0.0), (side / 2, side * math.sqrt(3) / 2)]


@pytest.fixture
def unit_domain() -> Domain:
    return Domain(1.0)


@pytest.fixture
def hollow_square_path() -> str:
    return str(DATA_DIR / "hollow_square.json")


@pytest.fixture
def empty_network_path() -> str:
    return str(DATA_DIR / "empty.json")


@pytest.fixture
def write_network(tmp_path):
    """Write a network document (dict or raw text) and return its path"""

    def _write(data, name: str = "network.json") -> str:
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)

    return _write


@pytest.fixture
def dense_existing() -> List[TaggedPoint]:
    """6 x 6 lattice of spacing 0.2 over the unit square"""
    axis = [i * 0.2 for i in range(6)]
    return tagged([(x, y) for x in axis for y in axis])
