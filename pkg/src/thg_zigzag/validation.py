"""Input validation helpers shared by the estimator and the pipeline."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from numbers import Integral, Real

from .core import EventRow, TemporalHypergraph, build_temporal_hypergraph, from_event_log
from .io import parse_thg


def check_temporal_hypergraph(x, event_mode: str = "span", merge_gap: float = 0.0) -> TemporalHypergraph:
    """Coerce one sample into a :class:`TemporalHypergraph`.

    Accepted forms: a ``TemporalHypergraph`` (returned as is), a JSON-style
    ``{"edges": [...]}`` mapping, a sequence of ``(edge_id, vertices,
    intervals)`` triples, or a sequence of :class:`EventRow`.
    """
    if isinstance(x, TemporalHypergraph):
        return x
    if isinstance(x, Mapping):
        return parse_thg(x, gap=merge_gap)
    if isinstance(x, Sequence) and not isinstance(x, (str, bytes)):
        if x and all(isinstance(r, EventRow) for r in x):
            return from_event_log(x, mode=event_mode, gap=merge_gap)
        return build_temporal_hypergraph(x, gap=merge_gap)
    raise TypeError(f"cannot interpret {type(x).__name__} as a temporal hypergraph")


def check_samples(X) -> list:
    if isinstance(X, (TemporalHypergraph, Mapping)):
        raise TypeError("expected a collection of temporal hypergraphs; wrap a single one in a list")
    try:
        samples = list(X)
    except TypeError:
        raise TypeError(f"expected an iterable of samples, got {type(X).__name__}") from None
    if not samples:
        raise ValueError("no samples given")
    return samples


def check_window(window_size, shift=None) -> tuple[float, float]:
    """Validate ``(w, s)``; ``shift=None`` means non-overlapping windows."""
    if not isinstance(window_size, Real) or not window_size > 0:
        raise ValueError(f"window_size must be a positive number, got {window_size!r}")
    if shift is None:
        shift = window_size
    if not isinstance(shift, Real) or not 0 < shift <= window_size:
        raise ValueError(f"shift must satisfy 0 < shift <= window_size, got {shift!r}")
    return float(window_size), float(shift)


def check_dimension(p, max_dim: int = 3) -> int:
    if not isinstance(p, Integral) or isinstance(p, bool) or not 0 <= p <= max_dim:
        raise ValueError(f"homology dimension must be an integer in [0, {max_dim}], got {p!r}")
    return int(p)


def check_choice(name: str, value, choices) -> str:
    if value not in choices:
        raise ValueError(f"{name} must be one of {tuple(choices)}, got {value!r}")
    return value
