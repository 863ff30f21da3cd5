"""Bundled example data."""

from importlib import resources

from .core import TemporalHypergraph
from .io import read_thg_json


def toy_path():
    """Path to the five-edge toy temporal hypergraph (use with ``w = s = 2``)."""
    return resources.files("thg_zigzag") / "data" / "toy.json"


def load_toy() -> TemporalHypergraph:
    """Four vertices ``A..D``, five edges ``E1..E5``, time domain ``[0, 10]``.

    With windows of width 2 and shift 2 the snapshot complexes are: a filled
    triangle plus an isolated vertex; two triangles sharing an edge; a hollow
    triangle glued to a filled one; a lone vertex; a filled triangle.
    """
    with toy_path().open(encoding="utf-8") as fh:
        return read_thg_json(fh)
