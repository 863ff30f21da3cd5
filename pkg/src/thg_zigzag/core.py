"""Temporal hypergraph data model and constructors.

Edges carry the temporal information: each hyperedge owns a list of closed
activity intervals. Vertices and edges are identified by opaque strings whose
lexicographic order is used for every deterministic tie-break downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence


class Interval(NamedTuple):
    """Closed time interval ``[start, end]``; ``start == end`` is a point."""

    start: float
    end: float

    def contains(self, t: float) -> bool:
        return self.start <= t <= self.end


def _as_interval(obj) -> Interval:
    try:
        start, end = obj
    except (TypeError, ValueError):
        raise ValueError(f"interval must be a (start, end) pair, got {obj!r}") from None
    start, end = float(start), float(end)
    if not (math.isfinite(start) and math.isfinite(end)):
        raise ValueError(f"interval endpoints must be finite, got {obj!r}")
    if start > end:
        raise ValueError(f"malformed interval: start {start} > end {end}")
    return Interval(start, end)


@dataclass(frozen=True)
class HyperEdge:
    id: str
    vertices: frozenset

    def __post_init__(self):
        if not self.vertices:
            raise ValueError(f"edge {self.id!r} has no vertices")
        if any(not isinstance(v, str) or not v for v in self.vertices):
            raise ValueError(f"edge {self.id!r}: vertex ids must be non-empty strings")

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Hypergraph:
    """Static hypergraph. Edges are kept sorted by id."""

    vertices: frozenset = frozenset()
    edges: tuple = ()

    @classmethod
    def from_edges(cls, edges: Iterable[HyperEdge]) -> "Hypergraph":
        edges = tuple(sorted(edges, key=lambda e: e.id))
        vertices = frozenset().union(*(e.vertices for e in edges))
        return cls(vertices, edges)

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class TemporalHypergraph:
    vertices: frozenset
    edges: tuple
    intervals: Mapping = field(hash=False)
    time_domain: Interval

    def static(self) -> Hypergraph:
        """Drop the temporal attributes."""
        return Hypergraph(self.vertices, self.edges)

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)


@dataclass(frozen=True)
class EventRow:
    """One observation that ``vertex_id`` took part in ``edge_id`` at ``timestamp``."""

    edge_id: str
    vertex_id: str
    timestamp: float

    def __post_init__(self):
        if not math.isfinite(self.timestamp):
            raise ValueError(f"non-finite timestamp in row {self!r}")


def merge_intervals(intervals: Iterable, gap: float = 0.0) -> list[Interval]:
    """Sort intervals by start and fuse those that overlap, abut, or lie
    within ``gap`` of each other."""
    if gap < 0:
        raise ValueError("gap must be non-negative")
    ordered = sorted(_as_interval(i) for i in intervals)
    merged: list[Interval] = []
    for iv in ordered:
        if merged and iv.start - merged[-1].end <= gap:
            last = merged[-1]
            merged[-1] = Interval(last.start, max(last.end, iv.end))
        else:
            merged.append(iv)
    return merged


def intersects(intervals: Sequence[Interval], window) -> bool:
    """True if some closed interval meets the closed ``window``."""
    w_start, w_end = window[0], window[1]
    for start, end in intervals:
        if start > w_end:
            # sorted by start: nothing later can overlap
            break
        if w_start <= end:
            return True
    return False


def build_temporal_hypergraph(raw_edges, gap: float = 0.0) -> TemporalHypergraph:
    """Build a temporal hypergraph from ``(edge_id, vertices, intervals)`` triples.

    Parameters
    ----------
    raw_edges : iterable of tuple
        Each item is ``(edge_id, vertex list, interval list)``; intervals are
        ``(start, end)`` pairs with ``start <= end``.
    gap : float, optional
        Intervals on one edge closer than this are fused. Default 0 merges
        only overlapping or touching intervals.

    Returns
    -------
    TemporalHypergraph
    """
    edges = []
    intervals: dict[str, tuple] = {}
    for item in raw_edges:
        try:
            edge_id, members, ivs = item
        except (TypeError, ValueError):
            raise ValueError(f"expected (edge_id, vertices, intervals), got {item!r}") from None
        edge_id = str(edge_id)
        if not edge_id:
            raise ValueError("edge ids must be non-empty")
        if edge_id in intervals:
            raise ValueError(f"duplicate edge id {edge_id!r}")
        members = [str(v) for v in members]
        if len(set(members)) != len(members):
            raise ValueError(f"edge {edge_id!r} lists a vertex twice")
        merged = merge_intervals(ivs, gap)
        if not merged:
            raise ValueError(f"edge {edge_id!r} has no intervals")
        edges.append(HyperEdge(edge_id, frozenset(members)))
        intervals[edge_id] = tuple(merged)
    if not edges:
        raise ValueError("a temporal hypergraph needs at least one edge")
    edges.sort(key=lambda e: e.id)
    domain = Interval(
        min(ivs[0].start for ivs in intervals.values()),
        max(max(iv.end for iv in ivs) for ivs in intervals.values()),
    )
    vertices = frozenset().union(*(e.vertices for e in edges))
    return TemporalHypergraph(vertices, tuple(edges), intervals, domain)


def from_event_log(rows: Iterable[EventRow], mode: str = "span", gap: float = 0.0) -> TemporalHypergraph:
    """Group event rows into hyperedges.

    ``span`` mode gives each edge the single interval from its first to its
    last timestamp; ``points`` mode gives one point interval per distinct
    timestamp (fused when within ``gap`` of each other).
    """
    if mode not in ("span", "points"):
        raise ValueError(f"unknown event mode {mode!r}; expected 'span' or 'points'")
    members: dict[str, set] = {}
    stamps: dict[str, set] = {}
    for row in rows:
        members.setdefault(row.edge_id, set()).add(row.vertex_id)
        stamps.setdefault(row.edge_id, set()).add(float(row.timestamp))
    if not members:
        raise ValueError("event log is empty")
    raw = []
    for edge_id in sorted(members):
        ts = sorted(stamps[edge_id])
        if mode == "span":
            ivs = [(ts[0], ts[-1])]
        else:
            ivs = [(t, t) for t in ts]
        raw.append((edge_id, sorted(members[edge_id]), ivs))
    return build_temporal_hypergraph(raw, gap=gap)
