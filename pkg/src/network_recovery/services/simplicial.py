"""
Simplicial Service - Rips and Cech 2-skeletons, Betti numbers and vertex removal
"""
import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components
from scipy.spatial import cKDTree

from ..exceptions import UnknownVertexError
from ..models import (
    BettiPair,
    ComplexKind,
    Edge,
    SimplicialComplex2,
    TaggedPoint,
    Triangle,
    as_array,
)
from .geometry import GEOM_EPS, min_enclosing_radius
from .gf2 import gf2_rank

logger = logging.getLogger(__name__)


def _edges_within(points: Sequence[TaggedPoint], threshold: float) -> List[Edge]:
    if len(points) < 2:
        return []
    tree = cKDTree(as_array(points))
    pairs = tree.query_pairs(threshold * (1 + GEOM_EPS), output_type="ndarray")
    return sorted((int(i), int(j)) for i, j in pairs)


def _adjacency(ids: Iterable[int], edges: Iterable[Edge]) -> Dict[int, int]:
    adjacency = {v: 0 for v in ids}
    for i, j in edges:
        adjacency[i] |= 1 << j
        adjacency[j] |= 1 << i
    return adjacency


def _flag_triangles(edges: Sequence[Edge], adjacency: Dict[int, int]) -> List[Triangle]:
    triangles = []
    for i, j in edges:
        above = adjacency[i] & adjacency[j] & ~((1 << (j + 1)) - 1)
        while above:
            low = above & -above
            triangles.append((i, j, low.bit_length() - 1))
            above ^= low
    triangles.sort()
    return triangles


def build_rips(points: Sequence[TaggedPoint], r: float) -> SimplicialComplex2:
    """Vietoris-Rips 2-skeleton: edges at distance <= 2r, triangles on 3-cliques"""
    if r <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    edges = _edges_within(points, 2 * r)
    adjacency = _adjacency(range(len(points)), edges)
    return SimplicialComplex2(
        points=dict(enumerate(points)),
        edges=tuple(edges),
        triangles=tuple(_flag_triangles(edges, adjacency)),
        adjacency=adjacency,
        kind=ComplexKind.RIPS,
        radius=r,
    )


def build_cech(points: Sequence[TaggedPoint], r: float) -> SimplicialComplex2:
    """Cech 2-skeleton: Rips edges, triangles whose three r-balls intersect"""
    if r <= 0:
        raise ValueError(f"Radius must be positive, got {r}")
    edges = _edges_within(points, 2 * r)
    adjacency = _adjacency(range(len(points)), edges)
    limit = r * (1 + GEOM_EPS)
    triangles = [
        (i, j, k) for i, j, k in _flag_triangles(edges, adjacency)
        if min_enclosing_radius(points[i].position, points[j].position, points[k].position) <= limit
    ]
    return SimplicialComplex2(
        points=dict(enumerate(points)),
        edges=tuple(edges),
        triangles=tuple(triangles),
        adjacency=adjacency,
        kind=ComplexKind.CECH,
        radius=r,
    )


def build_complex(
    points: Sequence[TaggedPoint],
    r: float,
    kind: ComplexKind = ComplexKind.RIPS
) -> SimplicialComplex2:
    if kind is ComplexKind.CECH:
        return build_cech(points, r)
    return build_rips(points, r)


def complex_from_simplices(
    points: Sequence[TaggedPoint],
    edges: Iterable[Tuple[int, int]] = (),
    triangles: Iterable[Tuple[int, int, int]] = (),
    kind: ComplexKind = ComplexKind.RIPS,
    radius: float = 0.0
) -> SimplicialComplex2:
    """Abstract complex on the given vertices, closed under faces"""
    tri = sorted({tuple(sorted(t)) for t in triangles})
    edge_set = {tuple(sorted(e)) for e in edges}
    for i, j, k in tri:
        edge_set.update({(i, j), (i, k), (j, k)})
    n = len(points)
    for i, j in edge_set:
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise ValueError(f"Invalid edge ({i}, {j}) for {n} vertices")
    edge_list = sorted(edge_set)
    return SimplicialComplex2(
        points=dict(enumerate(points)),
        edges=tuple(edge_list),
        triangles=tuple(tri),
        adjacency=_adjacency(range(n), edge_list),
        kind=kind,
        radius=radius,
    )


def remove_vertex(x: SimplicialComplex2, v: int) -> SimplicialComplex2:
    """New complex without v and every simplex incident to it"""
    if v not in x.points:
        raise UnknownVertexError(f"vertex {v} not in complex")
    keep = ~(1 << v)
    adjacency = {u: mask & keep for u, mask in x.adjacency.items() if u != v}
    return SimplicialComplex2(
        points={u: p for u, p in x.points.items() if u != v},
        edges=tuple(e for e in x.edges if v not in e),
        triangles=tuple(t for t in x.triangles if v not in t),
        adjacency=adjacency,
        kind=x.kind,
        radius=x.radius,
    )


def spanning_forest(x: SimplicialComplex2, root_order: Optional[Sequence[int]] = None) -> List[Edge]:
    """Breadth-first spanning forest, edges as sorted pairs"""
    seen = 0
    tree = []
    for root in (root_order if root_order is not None else x.vertex_ids):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            fresh = x.neighbor_mask(u) & ~seen
            seen |= fresh
            while fresh:
                low = fresh & -fresh
                w = low.bit_length() - 1
                tree.append((u, w) if u < w else (w, u))
                queue.append(w)
                fresh ^= low
    return tree


def component_count(x: SimplicialComplex2) -> int:
    """Connected components by graph traversal"""
    if x.is_empty:
        return 0
    ids = x.vertex_ids
    pos = {v: i for i, v in enumerate(ids)}
    rows = [pos[i] for i, _ in x.edges]
    cols = [pos[j] for _, j in x.edges]
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(ids), len(ids)))
    n_components, _ = connected_components(graph, directed=False)
    return int(n_components)


def boundary_ranks(x: SimplicialComplex2) -> Tuple[int, int]:
    """GF(2) ranks of the boundary maps d1 (edges) and d2 (triangles)"""
    if x.is_empty:
        return 0, 0
    pos = {v: i for i, v in enumerate(x.vertex_ids)}
    rank1 = gf2_rank(
        ((1 << pos[i]) | (1 << pos[j]) for i, j in x.edges),
        limit=x.num_vertices - 1,
    )
    cycle_rank = x.num_edges - rank1
    if cycle_rank == 0 or not x.triangles:
        return rank1, 0

    # Cycles are determined by their non-tree edges, so the image of d2
    # is measured in those coordinates.
    tree = set(spanning_forest(x))
    cotree = {e: k for k, e in enumerate(e for e in x.edges if e not in tree)}
    columns = []
    for i, j, k in x.triangles:
        col = 0
        for e in ((i, j), (i, k), (j, k)):
            bit = cotree.get(e)
            if bit is not None:
                col |= 1 << bit
        if col:
            columns.append(col)
    columns.sort(key=int.bit_count)
    return rank1, gf2_rank(columns, limit=cycle_rank)


def betti(x: SimplicialComplex2) -> BettiPair:
    """beta0 = |V| - rank d1, beta1 = |E| - rank d1 - rank d2 over GF(2)"""
    if x.is_empty:
        return BettiPair(0, 0)
    rank1, rank2 = boundary_ranks(x)
    return BettiPair(
        beta0=x.num_vertices - rank1,
        beta1=x.num_edges - rank1 - rank2,
    )

