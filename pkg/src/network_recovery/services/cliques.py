"""
Maximum clique search on small graphs stored as int bitmasks
"""
from typing import Dict, List, Optional, Tuple

from ..models import iter_bits


def _color_sort(candidates: int, adjacency: Dict[int, int]) -> Tuple[List[int], List[int]]:
    """Greedy sequential colouring; colour numbers bound the clique size"""
    order: List[int] = []
    colors: List[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available ^= low
            available &= ~adjacency[v]
            uncolored ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def greedy_clique_size(candidates: int, adjacency: Dict[int, int]) -> int:
    """Size of a clique grown by always taking the best-connected candidate"""
    size = 0
    while candidates:
        pick = max(iter_bits(candidates), key=lambda v: (adjacency[v] & candidates).bit_count())
        size += 1
        candidates &= adjacency[pick]
    return size


def max_clique_size(
    candidates: int,
    adjacency: Dict[int, int],
    target: Optional[int] = None
) -> int:
    """Exact clique number of the subgraph induced by ``candidates``

    Branch and bound with colouring bounds. When ``target`` is given the
    search stops as soon as a clique of that size is found, so the result
    is exact below ``target`` and only a witness (>= target) otherwise.
    """
    if not candidates:
        return 0
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, colors = _color_sort(cand, adjacency)
        for v, bound in zip(reversed(order), reversed(colors)):
            if size + bound <= best or (target is not None and best >= target):
                return
            nxt = cand & adjacency[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, candidates)
    return best
