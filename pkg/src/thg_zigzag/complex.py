"""Abstract simplicial complexes built from hypergraphs.

A simplex is a tuple of vertex ids in strictly ascending order; an
``n``-vertex simplex has dimension ``n - 1``. Complexes carry a size cap
(maximum vertex count per simplex, ``None`` for unbounded) so that large
hyperedges only contribute the low-dimensional faces homology needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional

from .core import Hypergraph


def simplex(vertices: Iterable[str]) -> tuple:
    """Canonical form of a simplex: sorted, duplicate-free tuple."""
    vs = tuple(sorted(set(vertices)))
    if not vs:
        raise ValueError("a simplex needs at least one vertex")
    return vs


def dim(s: tuple) -> int:
    return len(s) - 1


def order_key(s: tuple):
    """Canonical iteration order: by dimension, then lexicographic."""
    return (len(s), s)


def facets(s: tuple) -> list[tuple]:
    if len(s) == 1:
        return []
    return [s[:i] + s[i + 1:] for i in range(len(s))]


@dataclass(frozen=True)
class SimplicialComplex:
    simplices: frozenset = frozenset()
    size_cap: Optional[int] = None

    def __post_init__(self):
        if self.size_cap is not None and self.size_cap < 1:
            raise ValueError(f"size cap must be >= 1 or None, got {self.size_cap}")
        if self.size_cap is not None and any(len(s) > self.size_cap for s in self.simplices):
            raise ValueError("complex holds a simplex larger than its size cap")

    @classmethod
    def from_simplices(cls, simplices: Iterable, size_cap: Optional[int] = None) -> "SimplicialComplex":
        """Face closure of the given simplices, truncated at ``size_cap``."""
        out = set()
        for s in simplices:
            s = simplex(s)
            top = len(s) if size_cap is None else min(len(s), size_cap)
            for k in range(1, top + 1):
                out.update(combinations(s, k))
        return cls(frozenset(out), size_cap)

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(sorted(self.simplices, key=order_key))

    def __contains__(self, s) -> bool:
        return tuple(s) in self.simplices

    def __le__(self, other: "SimplicialComplex") -> bool:
        return self.simplices <= other.simplices

    @property
    def dimension(self) -> int:
        """Largest simplex dimension, -1 for the empty complex."""
        return max((len(s) for s in self.simplices), default=0) - 1

    @property
    def vertices(self) -> list[str]:
        return sorted(s[0] for s in self.simplices if len(s) == 1)

    def of_dim(self, p: int) -> list[tuple]:
        """The ``p``-simplices in lexicographic order."""
        return sorted(s for s in self.simplices if len(s) == p + 1)

    def is_closed(self) -> bool:
        return all(f in self.simplices for s in self.simplices for f in facets(s))


def _check_caps(k1: SimplicialComplex, k2: SimplicialComplex) -> None:
    if k1.size_cap != k2.size_cap:
        raise ValueError(f"size caps differ: {k1.size_cap} vs {k2.size_cap}")


def associated_asc(h: Hypergraph, size_cap: Optional[int] = None) -> SimplicialComplex:
    """All non-empty subsets of each hyperedge with at most ``size_cap`` vertices."""
    return SimplicialComplex.from_simplices((e.vertices for e in h.edges), size_cap)


def union(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    _check_caps(k1, k2)
    return SimplicialComplex(k1.simplices | k2.simplices, k1.size_cap)


def intersection(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    _check_caps(k1, k2)
    return SimplicialComplex(k1.simplices & k2.simplices, k1.size_cap)


def subsimplex_count(m: int, size_cap: Optional[int] = None) -> int:
    """Number of simplices in the closure of one ``m``-vertex hyperedge."""
    if m < 1:
        raise ValueError("an edge has at least one vertex")
    if size_cap is None:
        return 2**m - 1
    return sum(comb(m, j) for j in range(1, min(m, size_cap) + 1))


def cap_for_dimension(p_max: int) -> int:
    """Vertex cap needed to get Betti numbers right up to ``p_max``: the
    ``(p_max + 1)``-simplices must be present to fill ``p_max``-cycles."""
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    return p_max + 2
