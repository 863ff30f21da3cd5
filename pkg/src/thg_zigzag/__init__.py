"""Zigzag persistent homology of temporal hypergraphs."""

from .core import (
    EventRow,
    HyperEdge,
    Hypergraph,
    Interval,
    TemporalHypergraph,
    build_temporal_hypergraph,
    from_event_log,
    intersects,
    merge_intervals,
)
from .windows import SnapshotSequence, Window, make_windows, snapshot, snapshot_sequence, summary_stats
from .complex import SimplicialComplex, associated_asc, intersection, subsimplex_count, union
from .homology import Gf2Matrix, betti, boundary_matrix, induced_rank, rank
from .zigzag import (
    Barcode,
    ElementaryStep,
    PersistencePair,
    ZigzagFiltration,
    interleave,
    schedule,
    to_time_axis,
    zigzag_barcode,
)
from .estimator import ZigzagPersistence

__all__ = [
    "Barcode",
    "ElementaryStep",
    "EventRow",
    "Gf2Matrix",
    "HyperEdge",
    "Hypergraph",
    "Interval",
    "PersistencePair",
    "SimplicialComplex",
    "SnapshotSequence",
    "TemporalHypergraph",
    "Window",
    "ZigzagFiltration",
    "ZigzagPersistence",
    "associated_asc",
    "betti",
    "boundary_matrix",
    "build_temporal_hypergraph",
    "from_event_log",
    "induced_rank",
    "interleave",
    "intersection",
    "intersects",
    "make_windows",
    "merge_intervals",
    "rank",
    "schedule",
    "snapshot",
    "snapshot_sequence",
    "subsimplex_count",
    "summary_stats",
    "to_time_axis",
    "union",
    "zigzag_barcode",
]

__version__ = "0.1.0"
