"""
Complex Model - 2-skeleton of a Rips or Cech complex and its Betti numbers
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterator, List, Tuple

from .geometry import PointTag, TaggedPoint

Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a non-negative int, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ComplexKind(Enum):
    """Rule used for 2-simplices"""
    RIPS = "rips"
    CECH = "cech"


@dataclass(frozen=True)
class BettiPair:
    """Betti numbers in dimensions 0 and 1"""
    beta0: int = 0
    beta1: int = 0

    @property
    def is_recovered(self) -> bool:
        """One component, no coverage hole"""
        return self.beta0 == 1 and self.beta1 == 0

    def as_tuple(self) -> Tuple[int, int]:
        return (self.beta0, self.beta1)

    def to_list(self) -> List[int]:
        return [self.beta0, self.beta1]


RECOVERED = BettiPair(1, 0)


@dataclass(frozen=True)
class SimplicialComplex2:
    """Vertices, edges and triangles of a complex, closed under faces

    Vertex ids index the point list the complex was built from and keep
    their value when other vertices are removed. Edges are sorted pairs
    (i < j), triangles sorted triples (i < j < k), both in lexicographic
    order. ``adjacency`` maps every vertex to an int bitmask of its
    neighbours.
    """
    points: Dict[int, TaggedPoint] = field(default_factory=dict)
    edges: Tuple[Edge, ...] = ()
    triangles: Tuple[Triangle, ...] = ()
    adjacency: Dict[int, int] = field(default_factory=dict)
    kind: ComplexKind = ComplexKind.RIPS
    radius: float = 0.0
    _triangle_set: FrozenSet[Triangle] = field(
        init=False, repr=False, compare=False, default=frozenset()
    )

    def __post_init__(self):
        object.__setattr__(self, "_triangle_set", frozenset(self.triangles))

    @property
    def vertex_ids(self) -> List[int]:
        return sorted(self.points)

    @property
    def num_vertices(self) -> int:
        return len(self.points)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    @property
    def is_empty(self) -> bool:
        return not self.points

    def __contains__(self, v: int) -> bool:
        return v in self.points

    def neighbor_mask(self, v: int) -> int:
        return self.adjacency.get(v, 0)

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.neighbor_mask(i) >> j) & 1)

    def has_triangle(self, t: Triangle) -> bool:
        return tuple(sorted(t)) in self._triangle_set

    def ids_with_tag(self, tag: PointTag) -> List[int]:
        return [v for v in self.vertex_ids if self.points[v].tag is tag]

    def summary(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "radius": self.radius,
            "vertices": self.num_vertices,
            "edges": self.num_edges,
            "triangles": self.num_triangles,
        }
