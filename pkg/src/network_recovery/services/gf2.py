"""
GF(2) linear algebra on bit-packed vectors

A vector is a Python int whose bit i is coordinate i.
"""
from typing import Dict, Iterable, Optional


class Gf2Basis:
    """Incrementally reduced set of vectors, keyed by leading bit"""

    def __init__(self):
        self._pivots: Dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: int) -> int:
        """Residue of vec after elimination against the current basis"""
        pivots = self._pivots
        while vec:
            lead = vec.bit_length() - 1
            row = pivots.get(lead)
            if row is None:
                return vec
            vec ^= row
        return 0

    def add(self, vec: int) -> bool:
        """Insert vec; returns True when it raised the rank"""
        residue = self.reduce(vec)
        if not residue:
            return False
        self._pivots[residue.bit_length() - 1] = residue
        return True

    def contains(self, vec: int) -> bool:
        """Whether vec lies in the span"""
        return self.reduce(vec) == 0


def gf2_rank(columns: Iterable[int], limit: Optional[int] = None) -> int:
    """Rank of the matrix whose columns are the given bit vectors

    Stops early once ``limit`` is reached; callers pass the known upper
    bound (row count or cycle rank) so full-rank cases return fast.
    """
    basis = Gf2Basis()
    if limit is not None and limit <= 0:
        return 0
    for col in columns:
        if basis.add(col) and limit is not None and basis.rank >= limit:
            break
    return basis.rank
