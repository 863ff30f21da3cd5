"""End-to-end pipeline: ingest, window, complexes, zigzag, outputs."""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .complex import associated_asc, cap_for_dimension
from .core import TemporalHypergraph, from_event_log
from .homology import betti
from .io import betti_csv, dumps_barcode, read_event_csv, read_thg_json, stats_csv
from .svg import render_barcode
from .windows import SnapshotSequence, make_windows, snapshot_sequence, summary_stats
from .zigzag import Barcode, ZigzagFiltration, interleave, to_time_axis, zigzag_barcode

log = logging.getLogger(__name__)

FORMATS = ("thg-json", "event-csv")
EVENT_MODES = ("span", "points")
AXES = ("index", "time")
MAX_DIM = 3


class ConfigError(ValueError):
    """Invalid pipeline parameters (exit code 1)."""

    exit_code = 1


class InputError(ValueError):
    """Unreadable or malformed input data (exit code 2)."""

    exit_code = 2


@dataclass(frozen=True)
class PipelineConfig:
    input: Optional[str] = None
    format: str = "thg-json"
    event_mode: str = "span"
    merge_gap: float = 0.0
    window_size: float = 1.0
    shift: Optional[float] = None
    t0: Optional[float] = None
    tf: Optional[float] = None
    p_max: int = 1
    mode: str = "union"
    axis: str = "index"
    out: Optional[str] = None
    stats_out: Optional[str] = None
    svg: Optional[str] = None

    @property
    def step(self) -> float:
        return self.window_size if self.shift is None else self.shift

    def validate(self) -> "PipelineConfig":
        if self.format not in FORMATS:
            raise ConfigError(f"--format must be one of {FORMATS}")
        if self.event_mode not in EVENT_MODES:
            raise ConfigError(f"--event-mode must be one of {EVENT_MODES}")
        if self.mode not in ("union", "intersection"):
            raise ConfigError("--mode must be 'union' or 'intersection'")
        if self.axis not in AXES:
            raise ConfigError(f"--axis must be one of {AXES}")
        if not self.window_size > 0:
            raise ConfigError("--window-size must be positive")
        if not 0 < self.step <= self.window_size:
            raise ConfigError("--shift must satisfy 0 < shift <= window size")
        if not 0 <= self.p_max <= MAX_DIM:
            raise ConfigError(f"--dim must be between 0 and {MAX_DIM}")
        if not self.merge_gap >= 0:
            raise ConfigError("--merge-gap must be non-negative")
        if self.t0 is not None and self.tf is not None and self.t0 > self.tf:
            raise ConfigError("--t0 must not exceed --tf")
        return self


@dataclass(frozen=True)
class PipelineResult:
    barcode: Barcode
    stats: list
    sequence: SnapshotSequence
    filtration: ZigzagFiltration
    exit_code: int = 0


def load_input(cfg: PipelineConfig) -> TemporalHypergraph:
    source = sys.stdin if cfg.input in (None, "-") else cfg.input
    try:
        if cfg.format == "thg-json":
            return read_thg_json(source, gap=cfg.merge_gap)
        return from_event_log(read_event_csv(source), mode=cfg.event_mode, gap=cfg.merge_gap)
    except (OSError, ValueError, UnicodeDecodeError) as exc:
        raise InputError(str(exc)) from exc


def snapshots_of(thg: TemporalHypergraph, window_size: float, shift: float,
                 t0: Optional[float] = None, tf: Optional[float] = None) -> SnapshotSequence:
    start = thg.time_domain.start if t0 is None else t0
    stop = thg.time_domain.end if tf is None else tf
    if start > stop:
        raise ConfigError(f"time domain [{start}, {stop}] is empty")
    return snapshot_sequence(thg, make_windows(start, stop, window_size, shift))


def complexes_of(seq: SnapshotSequence, p_max: int) -> list:
    cap = cap_for_dimension(p_max)
    return [associated_asc(h, cap) for h in seq.snapshots]


def zigzag_of(thg: TemporalHypergraph, window_size: float, shift: float, p_max: int = 1,
              mode: str = "union", t0: Optional[float] = None, tf: Optional[float] = None):
    """Snapshot sequence, filtration and index-axis barcode for ``thg``."""
    seq = snapshots_of(thg, window_size, shift, t0, tf)
    filtration = interleave(complexes_of(seq, p_max), seq.mids, mode)
    return seq, filtration, zigzag_barcode(filtration, p_max)


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def run_pipeline(cfg: PipelineConfig) -> PipelineResult:
    cfg.validate()
    thg = load_input(cfg)
    seq, filtration, barcode = zigzag_of(thg, cfg.window_size, cfg.step, cfg.p_max, cfg.mode, cfg.t0, cfg.tf)
    log.info("%d windows, %d filtration positions", len(seq), len(filtration))
    if cfg.axis == "time":
        barcode = to_time_axis(barcode, filtration)
    stats = summary_stats(seq)
    _emit(dumps_barcode(barcode), cfg.out)
    if cfg.stats_out is not None:
        _emit(stats_csv(stats), cfg.stats_out)
    if cfg.svg is not None:
        ticks = seq.mids if cfg.axis == "time" else list(range(len(seq)))
        try:
            render_barcode(barcode, cfg.svg, ticks)
        except OSError as exc:
            raise InputError(f"cannot write {cfg.svg}: {exc}") from exc
    return PipelineResult(barcode, stats, seq, filtration)


def betti_table(cfg: PipelineConfig) -> str:
    cfg.validate()
    thg = load_input(cfg)
    seq = snapshots_of(thg, cfg.window_size, cfg.step, cfg.t0, cfg.tf)
    bettis = [betti(k, cfg.p_max) for k in complexes_of(seq, cfg.p_max)]
    text = betti_csv(summary_stats(seq), bettis)
    _emit(text, cfg.out)
    return text


def stats_table(cfg: PipelineConfig) -> str:
    cfg.validate()
    thg = load_input(cfg)
    seq = snapshots_of(thg, cfg.window_size, cfg.step, cfg.t0, cfg.tf)
    text = stats_csv(summary_stats(seq))
    _emit(text, cfg.out)
    return text
