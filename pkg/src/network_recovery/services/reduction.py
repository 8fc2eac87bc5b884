"""
Reduction Service - Vertex indices and homology-guarded removal of redundant vertices

Candidates with the greatest index are tried first. A removal is kept only
when the complex stays connected and hole-free; otherwise the vertex is
flagged unremovable. Each decision is exact: the link test below accepts a
removal only when Mayer-Vietoris guarantees (1, 0), and every other case
is settled by a from-scratch Betti computation.
"""
import logging
from collections import deque
from typing import List, Optional, Set, Tuple

import numpy as np

from ..exceptions import HomologyPreconditionError, UnknownVertexError
from ..models import (
    RECOVERED,
    BettiPair,
    Edge,
    ReductionResult,
    ReductionStep,
    SimplicialComplex2,
    Triangle,
    VertexIndex,
    iter_bits,
)
from .cliques import greedy_clique_size, max_clique_size
from .gf2 import Gf2Basis
from .simplicial import betti, remove_vertex

logger = logging.getLogger(__name__)


def _above(j: int) -> int:
    """Mask of ids strictly greater than j"""
    return ~((1 << (j + 1)) - 1)


def triangle_degree(x: SimplicialComplex2, t: Triangle) -> int:
    """Dimension of the largest flag simplex containing t

    2 plus the clique number of the common neighbourhood of t's vertices.
    """
    t = tuple(sorted(t))
    if not x.has_triangle(t):
        raise UnknownVertexError(f"triangle {t} not in complex")
    i, j, k = t
    common = x.neighbor_mask(i) & x.neighbor_mask(j) & x.neighbor_mask(k)
    return 2 + max_clique_size(common, x.adjacency)


def incident_triangles(x: SimplicialComplex2, v: int) -> List[Tuple[Triangle, int]]:
    """Triangles containing v, each with the common-neighbour mask of its vertices"""
    nbrs = x.neighbor_mask(v)
    found = []
    for j in iter_bits(nbrs):
        shared = nbrs & x.neighbor_mask(j)
        for k in iter_bits(shared & _above(j)):
            t = tuple(sorted((v, j, k)))
            if x.has_triangle(t):
                found.append((t, shared & x.neighbor_mask(k)))
    return found


def vertex_index(x: SimplicialComplex2, v: int, flags: Optional[VertexIndex] = None) -> int:
    """Minimum degree over the triangles containing v

    0 when v lies in no triangle; the stored negative value when flagged.
    """
    if v not in x:
        raise UnknownVertexError(f"vertex {v} not in complex")
    if flags is not None and flags.is_flagged(v):
        return flags[v]

    triangles = incident_triangles(x, v)
    if not triangles:
        return 0

    triangles.sort(key=lambda item: item[1].bit_count())
    best: Optional[int] = None
    for _, common in triangles:
        if not common:
            return 2
        if best is None:
            best = 2 + max_clique_size(common, x.adjacency)
            continue
        if 2 + greedy_clique_size(common, x.adjacency) >= best:
            continue
        # Exact below target, so only improvements are measured
        best = min(best, 2 + max_clique_size(common, x.adjacency, target=best - 2))
        if best == 3:
            break
    return best


def link_bounds_locally(x: SimplicialComplex2, v: int) -> bool:
    """Sufficient local test that removing v keeps a (1, 0) complex at (1, 0)

    The complex is the union of the tentative complex and the closed star
    of v, which meet in the link L. With the whole complex connected and
    hole-free, the tentative complex is connected iff L is, and hole-free
    iff every cycle of L bounds in it. Bounding is checked in the
    subcomplex K spanned by the neighbours of v, in the non-tree edge
    coordinates of a spanning tree of L.
    """
    nbrs = x.neighbor_mask(v)
    if not nbrs:
        return False
    ids = list(iter_bits(nbrs))

    link_adj = {j: 0 for j in ids}
    link_edges: List[Edge] = []
    k_edges: List[Edge] = []
    for j in ids:
        for k in iter_bits(nbrs & x.neighbor_mask(j) & _above(j)):
            k_edges.append((j, k))
            if x.has_triangle((v, j, k)):
                link_adj[j] |= 1 << k
                link_adj[k] |= 1 << j
                link_edges.append((j, k))

    root = max(ids, key=lambda j: (link_adj[j].bit_count(), -j))
    seen = 1 << root
    tree: Set[Edge] = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        fresh = link_adj[u] & ~seen
        seen |= fresh
        for w in iter_bits(fresh):
            tree.add((u, w) if u < w else (w, u))
            queue.append(w)
    if seen != nbrs:
        return False

    cotree = {e: bit for bit, e in enumerate(e for e in k_edges if e not in tree)}
    targets = [cotree[e] for e in link_edges if e not in tree]
    if not targets:
        return True

    columns = []
    for j, k in k_edges:
        for m in iter_bits(nbrs & x.neighbor_mask(j) & x.neighbor_mask(k) & _above(k)):
            if not x.has_triangle((j, k, m)):
                continue
            col = 0
            for e in ((j, k), (j, m), (k, m)):
                bit = cotree.get(e)
                if bit is not None:
                    col |= 1 << bit
            if col:
                columns.append(col)
    columns.sort(key=int.bit_count)

    basis = Gf2Basis()
    for col in columns:
        if basis.add(col) and basis.rank == len(cotree):
            return True
    return all(basis.contains(1 << bit) for bit in targets)


class HomologyGuard:
    """Decides whether a tentative removal keeps the complex at (1, 0)"""

    def __init__(self, local_check: bool = True):
        self.local_check = local_check
        self.local_accepts = 0
        self.global_checks = 0

    def check(
        self,
        x: SimplicialComplex2,
        v: int,
        tentative: SimplicialComplex2
    ) -> Tuple[bool, BettiPair, str]:
        """(accepted, Betti pair of tentative, 'local' or 'global')"""
        if self.local_check and link_bounds_locally(x, v):
            self.local_accepts += 1
            return True, RECOVERED, "local"
        self.global_checks += 1
        after = betti(tentative)
        return after.is_recovered, after, "global"


def _within_two(x: SimplicialComplex2, v: int) -> int:
    near = x.neighbor_mask(v)
    ring = near
    for u in iter_bits(near):
        ring |= x.neighbor_mask(u)
    return ring & ~(1 << v)


def reduce(
    x: SimplicialComplex2,
    flags: Optional[VertexIndex] = None,
    seed: int = 0,
    guard: Optional[HomologyGuard] = None
) -> ReductionResult:
    """Remove vertices greatest index first while (beta0, beta1) stays (1, 0)

    Args:
        x: Connected, hole-free complex
        flags: Negative entries mark unremovable vertices; defaults to
            flagging every non-Added vertex
        seed: Seed of the tie-breaking generator
        guard: Removal test (local link test plus global fallback by default)

    Returns:
        ReductionResult with the reduced complex, removed ids and the step trace

    Raises:
        HomologyPreconditionError: If x is not connected and hole-free
    """
    start = betti(x)
    if not start.is_recovered:
        raise HomologyPreconditionError(
            f"reduction needs a connected hole-free complex, got betti {start.as_tuple()}"
        )

    guard = guard or HomologyGuard()
    rng = np.random.default_rng(seed)
    flags = (flags if flags is not None else VertexIndex.for_complex(x)).copy()
    for v in list(flags):
        if v not in x:
            flags.discard(v)
    for v in x.vertex_ids:
        if not flags.is_flagged(v):
            flags[v] = vertex_index(x, v)

    current = x
    removed: List[int] = []
    rejected: List[int] = []
    steps: List[ReductionStep] = []
    while True:
        candidates = flags.removable()
        if not candidates:
            break
        top = max(flags[v] for v in candidates)
        tied = [v for v in candidates if flags[v] == top]
        v = tied[int(rng.integers(len(tied)))] if len(tied) > 1 else tied[0]

        tentative = remove_vertex(current, v)
        accepted, after, check = guard.check(current, v, tentative)
        steps.append(ReductionStep(
            vertex=v,
            position=current.points[v].position,
            index=top,
            accepted=accepted,
            betti=after,
            check=check,
        ))
        logger.debug(
            "Vertex %d (index %d): %s by %s check, betti %s",
            v, top, "removed" if accepted else "kept", check, after.as_tuple(),
        )

        if not accepted:
            flags.flag(v)
            rejected.append(v)
            continue

        affected = _within_two(current, v)
        current = tentative
        flags.discard(v)
        removed.append(v)
        for u in iter_bits(affected):
            if u in flags and not flags.is_flagged(u):
                flags[u] = vertex_index(current, u)

    # A rejection is relative to the complex at that time; re-test against
    # the reduced complex until no rejected vertex can go.
    changed = bool(removed) and bool(rejected)
    while changed:
        changed = False
        for v in list(rejected):
            tentative = remove_vertex(current, v)
            accepted, after, check = guard.check(current, v, tentative)
            if accepted:
                steps.append(ReductionStep(
                    vertex=v,
                    position=current.points[v].position,
                    index=vertex_index(current, v),
                    accepted=True,
                    betti=after,
                    check=check,
                ))
                current = tentative
                flags.discard(v)
                rejected.remove(v)
                removed.append(v)
                changed = True
                logger.debug("Vertex %d removed on re-check", v)

    logger.debug(
        "Reduction: %d removed, %d kept, %d local and %d global checks",
        len(removed), len(rejected), guard.local_accepts, guard.global_checks,
    )
    return ReductionResult(complex=current, removed=removed, steps=steps, flags=flags)
