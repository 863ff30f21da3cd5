"""File formats: temporal hypergraph JSON, event-log CSV, barcode JSON and
the stats/Betti CSV tables.

Output is byte-deterministic: keys are sorted, pairs are sorted, floats use
Python's shortest round-trip ``repr``.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .core import EventRow, TemporalHypergraph, build_temporal_hypergraph
from .zigzag import Barcode, PersistencePair, position_value


def _read_text(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    return Path(source).read_text(encoding="utf-8")


def parse_thg(doc: dict, gap: float = 0.0) -> TemporalHypergraph:
    try:
        edges = doc["edges"]
        raw = [(e["id"], e["nodes"], e["intervals"]) for e in edges]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad temporal hypergraph document: missing {exc}") from None
    return build_temporal_hypergraph(raw, gap=gap)


def read_thg_json(source, gap: float = 0.0) -> TemporalHypergraph:
    """Load ``{"edges": [{"id", "nodes", "intervals"}, ...]}``."""
    try:
        doc = json.loads(_read_text(source))
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    return parse_thg(doc, gap=gap)


def thg_to_dict(thg: TemporalHypergraph) -> dict:
    return {
        "edges": [
            {
                "id": e.id,
                "nodes": sorted(e.vertices),
                "intervals": [[iv.start, iv.end] for iv in thg.intervals[e.id]],
            }
            for e in thg.edges
        ]
    }


def write_thg_json(thg: TemporalHypergraph, path) -> None:
    Path(path).write_text(json.dumps(thg_to_dict(thg), indent=2) + "\n", encoding="utf-8")


def read_event_csv(source) -> list[EventRow]:
    """Rows of an ``edge_id,node_id,timestamp`` CSV."""
    reader = csv.DictReader(io.StringIO(_read_text(source)))
    missing = {"edge_id", "node_id", "timestamp"} - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"event CSV is missing columns: {sorted(missing)}")
    rows = []
    for line_no, rec in enumerate(reader, start=2):
        try:
            ts = float(rec["timestamp"])
        except (TypeError, ValueError):
            raise ValueError(f"line {line_no}: bad timestamp {rec['timestamp']!r}") from None
        if not rec["edge_id"] or not rec["node_id"]:
            raise ValueError(f"line {line_no}: empty edge or node id")
        rows.append(EventRow(rec["edge_id"], rec["node_id"], ts))
    return rows


def _coord(value, pos: int, axis: str):
    if axis == "index":
        return position_value(pos)
    return float(value)


def barcode_to_dict(b: Barcode) -> dict:
    dims = {}
    for p in sorted(b.pairs_by_dimension):
        entries = [
            {
                "birth": _coord(pair.birth, pair.birth_pos, b.axis),
                "death": _coord(pair.death, pair.death_pos, b.axis),
                "birth_half": pair.birth_half,
                "death_half": pair.death_half,
                "open_end": pair.open_end,
            }
            for pair in b[p]
        ]
        entries.sort(key=lambda e: (e["birth"], e["death"]))
        dims[str(p)] = entries
    return {"axis": b.axis, "mode": b.mode, "dims": dims}


def dumps_barcode(b: Barcode) -> str:
    return json.dumps(barcode_to_dict(b), indent=2, sort_keys=True) + "\n"


def _fmt(x) -> str:
    return repr(float(x)) if isinstance(x, float) else str(x)


def _table(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def stats_csv(stats) -> str:
    """``window_index,mid_time,n_edges,n_vertices``."""
    return _table(
        ["window_index", "mid_time", "n_edges", "n_vertices"],
        [(i, mid, ne, nv) for i, (mid, ne, nv) in enumerate(stats)],
    )


def betti_csv(stats, bettis) -> str:
    """``window_index,mid_time,b0..bp,n_edges,n_vertices``."""
    p_max = len(bettis[0]) - 1 if bettis else 0
    header = ["window_index", "mid_time"] + [f"b{p}" for p in range(p_max + 1)] + ["n_edges", "n_vertices"]
    rows = [(i, mid, *bv, ne, nv) for i, ((mid, ne, nv), bv) in enumerate(zip(stats, bettis))]
    return _table(header, rows)


def barcode_from_dict(doc: dict) -> Barcode:
    """Inverse of :func:`barcode_to_dict`.

    Index-axis values are turned back into doubled positions. Time-axis
    documents do not record positions, so only the half flags survive (as
    the parity of ``birth_pos``/``death_pos``).
    """
    try:
        axis, mode = doc["axis"], doc.get("mode", "union")
        by_dim = {}
        for key, entries in doc["dims"].items():
            p = int(key)
            pairs = []
            for e in entries:
                if axis == "index":
                    bpos, dpos = round(2 * e["birth"]), round(2 * e["death"])
                    pairs.append(PersistencePair(p, bpos, dpos, bool(e["open_end"]), bpos, dpos))
                else:
                    pairs.append(PersistencePair(p, float(e["birth"]), float(e["death"]), bool(e["open_end"]),
                                                 int(e["birth_half"]), int(e["death_half"])))
            by_dim[p] = tuple(sorted(pairs))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad barcode document: {exc}") from None
    if axis not in ("index", "time"):
        raise ValueError(f"bad barcode axis {axis!r}")
    return Barcode(by_dim, axis, mode)


def read_barcode_json(source) -> Barcode:
    try:
        return barcode_from_dict(json.loads(_read_text(source)))
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
