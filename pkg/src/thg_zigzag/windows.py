"""Sliding-window cover of the time axis and per-window snapshots."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Hypergraph, TemporalHypergraph, intersects


@dataclass(frozen=True)
class Window:
    index: int
    start: float
    end: float

    @property
    def mid(self) -> float:
        return (self.start + self.end) / 2

    def __iter__(self):
        yield self.start
        yield self.end

    def __getitem__(self, i):
        return (self.start, self.end)[i]


@dataclass(frozen=True)
class SnapshotSequence:
    windows: tuple
    snapshots: tuple

    def __post_init__(self):
        if len(self.windows) != len(self.snapshots):
            raise ValueError("windows and snapshots must have the same length")

    def __len__(self) -> int:
        return len(self.windows)

    @property
    def mids(self) -> list[float]:
        return [w.mid for w in self.windows]


def make_windows(t0: float, tf: float, w: float, s: float) -> list[Window]:
    """Windows ``[t0 + i*s, t0 + i*s + w]`` for ``i = 0..l``, where ``l`` is
    the first index whose window reaches ``tf``. The last window may overhang."""
    if not (w > 0):
        raise ValueError(f"window size must be positive, got {w}")
    if not (s > 0):
        raise ValueError(f"shift must be positive, got {s}")
    if s > w:
        raise ValueError(f"shift {s} exceeds window size {w}; windows would leave gaps")
    if t0 > tf:
        raise ValueError(f"t0 {t0} is after tf {tf}")
    def end(i):
        # t0 + i*s + w can round below the next start when s == w
        return max(t0 + i * s + w, t0 + (i + 1) * s) if s == w else t0 + i * s + w

    last = max(0, math.ceil((tf - t0 - w) / s))
    # ceil on floats can land one off either way
    while last > 0 and end(last - 1) >= tf:
        last -= 1
    while end(last) < tf:
        last += 1
    return [Window(i, t0 + i * s, end(i)) for i in range(last + 1)]


def snapshot(thg: TemporalHypergraph, window) -> Hypergraph:
    """Sub-hypergraph of edges with at least one interval meeting ``window``."""
    kept = [e for e in thg.edges if intersects(thg.intervals[e.id], window)]
    return Hypergraph.from_edges(kept)


def snapshot_sequence(thg: TemporalHypergraph, windows) -> SnapshotSequence:
    windows = tuple(windows)
    return SnapshotSequence(windows, tuple(snapshot(thg, w) for w in windows))


def summary_stats(seq: SnapshotSequence) -> list[tuple[float, int, int]]:
    """``(mid time, edge count, vertex count)`` per window."""
    return [(w.mid, len(h.edges), len(h.vertices)) for w, h in zip(seq.windows, seq.snapshots)]
