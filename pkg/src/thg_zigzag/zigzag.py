"""Zigzag filtrations of snapshot complexes and their persistence barcodes.

Positions are doubled integers: ``2i`` is snapshot complex ``K_i`` and
``2i + 1`` the interleaved complex between ``K_i`` and ``K_{i+1}``. A pair
``(birth, death)`` means the class is alive at every position ``q`` with
``birth <= q < death``; classes that survive the last complex get
``death = 2l + 1`` and ``open_end = True``.

The barcode is computed simplex by simplex. Each arrow is refined into single
insertions (faces first) or deletions (cofaces first), and a homology basis
compatible with the zigzag is updated at every step:

* every cycle space ``Z_p`` is spanned by live class representatives plus
  boundaries ``b = d(c)`` whose chain ``c`` is stored alongside;
* classes are ranked by age: a class born on an insertion is younger than
  everything before it, one born on a deletion is older than everything
  before it;
* an insertion that kills homology ends the youngest class in the support of
  the new boundary, a deletion that kills homology ends the oldest class whose
  representative uses the deleted simplex.

Adding an older representative (or any boundary) to a younger one never
breaks the interval decomposition, and that is the only kind of basis change
made.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complex import SimplicialComplex, facets, intersection, order_key, union

FORWARD = "forward"
BACKWARD = "backward"
MODES = ("union", "intersection")


def position_label(q: int) -> tuple:
    """``(i, half)``: even positions are snapshot ``i``, odd ones sit between
    ``i`` and ``i + 1``."""
    return q // 2, bool(q % 2)


def position_value(q: int):
    """Serialisable index value: ``i`` for snapshots, ``i + 0.5`` in between."""
    return q // 2 if q % 2 == 0 else q / 2


@dataclass(frozen=True)
class ZigzagFiltration:
    complexes: tuple
    directions: tuple
    times: tuple
    mode: str = "union"

    def __post_init__(self):
        n = len(self.complexes)
        if n == 0:
            raise ValueError("a filtration needs at least one complex")
        if len(self.directions) != n - 1 or len(self.times) != n:
            raise ValueError("directions/times do not match the number of complexes")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise ValueError("filtration times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.complexes)

    @property
    def last(self) -> int:
        """Position of the final complex (``2l``)."""
        return len(self.complexes) - 1

    @property
    def open_end(self) -> int:
        return len(self.complexes)


@dataclass(frozen=True)
class ElementaryStep:
    kind: str
    simplex: tuple
    position: int


@dataclass(frozen=True, order=True)
class PersistencePair:
    """One bar. ``birth``/``death`` are doubled positions on the index axis and
    times on the time axis; ``birth_pos``/``death_pos`` always hold positions."""

    dimension: int
    birth: float
    death: float
    open_end: bool = False
    birth_pos: int = field(default=-1, compare=False)
    death_pos: int = field(default=-1, compare=False)

    def __post_init__(self):
        if self.birth > self.death:
            raise ValueError(f"birth {self.birth} after death {self.death}")

    @property
    def birth_half(self) -> bool:
        return bool(self.birth_pos % 2)

    @property
    def death_half(self) -> bool:
        return bool(self.death_pos % 2)

    def alive_at(self, q: int) -> bool:
        return self.birth_pos <= q < self.death_pos


@dataclass(frozen=True)
class Barcode:
    pairs_by_dimension: dict
    axis: str = "index"
    mode: str = "union"

    def __getitem__(self, p: int) -> tuple:
        return self.pairs_by_dimension.get(p, ())

    @property
    def dimensions(self) -> list[int]:
        return sorted(self.pairs_by_dimension)

    def __len__(self) -> int:
        return sum(len(v) for v in self.pairs_by_dimension.values())

    def intervals(self, p: int) -> list[tuple]:
        """Sorted ``(birth, death)`` tuples of dimension ``p``."""
        return sorted((b.birth, b.death) for b in self[p])

    def alive_count(self, q: int, p: int) -> int:
        return sum(1 for pair in self[p] if pair.alive_at(q))


def interleave(snapshots: Sequence[SimplicialComplex], mids: Sequence[float], mode: str = "union") -> ZigzagFiltration:
    """Insert the union (or intersection) of each adjacent pair between them."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if not snapshots:
        raise ValueError("need at least one snapshot complex")
    if len(mids) != len(snapshots):
        raise ValueError("need one time per snapshot")
    if any(b <= a for a, b in zip(mids, mids[1:])):
        raise ValueError("snapshot times must be strictly increasing")
    combine = union if mode == "union" else intersection
    up, down = (FORWARD, BACKWARD) if mode == "union" else (BACKWARD, FORWARD)
    complexes = [snapshots[0]]
    directions = []
    times = [float(mids[0])]
    for i in range(1, len(snapshots)):
        complexes += [combine(snapshots[i - 1], snapshots[i]), snapshots[i]]
        directions += [up, down]
        times += [(mids[i - 1] + mids[i]) / 2, float(mids[i])]
    return ZigzagFiltration(tuple(complexes), tuple(directions), tuple(times), mode)


def schedule(f: ZigzagFiltration) -> list[ElementaryStep]:
    """Single-simplex insertions and deletions replaying ``f`` from empty.

    Each step carries the position of the complex it leads to.
    """
    steps = [ElementaryStep("insert", s, 0) for s in sorted(f.complexes[0].simplices, key=order_key)]
    for q, direction in enumerate(f.directions):
        a, b = f.complexes[q].simplices, f.complexes[q + 1].simplices
        if direction == FORWARD:
            if not a <= b:
                raise ValueError(f"forward arrow {q}->{q + 1} is not an inclusion")
            steps += [ElementaryStep("insert", s, q + 1) for s in sorted(b - a, key=order_key)]
        else:
            if not b <= a:
                raise ValueError(f"backward arrow {q}<-{q + 1} is not an inclusion")
            gone = sorted(a - b, key=lambda s: (-len(s), s))
            steps += [ElementaryStep("delete", s, q + 1) for s in gone]
    return steps


class _Element:
    """Basis vector of some ``Z_p``: a live class (``chain is None``) or a
    boundary together with the chain it bounds."""

    __slots__ = ("vec", "chain", "key", "birth")

    def __init__(self, vec: int, chain: Optional[int] = None, key: int = 0, birth: int = 0):
        self.vec = vec
        self.chain = chain
        self.key = key
        self.birth = birth

    @property
    def is_class(self) -> bool:
        return self.chain is None

    def outranks(self, other: "_Element") -> bool:
        # boundaries first, then older classes
        if not self.is_class:
            return True
        if not other.is_class:
            return False
        return self.key < other.key

    def absorb(self, other: "_Element") -> None:
        self.vec ^= other.vec
        if not self.is_class:
            self.chain ^= other.chain


class _Engine:
    def __init__(self, top_dim: int):
        self.tables = [dict() for _ in range(top_dim + 1)]
        self.classes = [set() for _ in range(top_dim + 1)]
        self.bounds = [set() for _ in range(top_dim + 1)]
        self.ids: list[dict] = [dict() for _ in range(top_dim + 1)]
        self.clock = 0
        self.pairs: list[tuple] = []

    def sid(self, s: tuple) -> int:
        ids = self.ids[len(s) - 1]
        if s not in ids:
            ids[s] = len(ids)
        return ids[s]

    def boundary(self, s: tuple) -> int:
        return sum(1 << self.sid(f) for f in facets(s))

    def _place(self, p: int, x: _Element) -> None:
        table = self.tables[p]
        while x.vec:
            low = x.vec.bit_length() - 1
            y = table.get(low)
            if y is None:
                table[low] = x
                return
            if y.outranks(x):
                x.absorb(y)
            else:
                table[low] = x
                y.absorb(x)
                x = y
        raise RuntimeError("basis became linearly dependent")

    def _unplace(self, p: int, x: _Element) -> None:
        del self.tables[p][x.vec.bit_length() - 1]

    def _decompose(self, p: int, vec: int) -> list[_Element]:
        table = self.tables[p]
        used = []
        while vec:
            y = table.get(vec.bit_length() - 1)
            if y is None:
                raise RuntimeError("boundary is not a cycle of the current complex")
            vec ^= y.vec
            used.append(y)
        return used

    def _new_class(self, p: int, elem: _Element, position: int, young: bool) -> None:
        self.clock += 1
        elem.chain = None
        elem.key = self.clock if young else -self.clock
        elem.birth = position
        self.classes[p].add(elem)
        self._place(p, elem)

    def _end(self, p: int, elem: _Element, position: int) -> None:
        self.classes[p].discard(elem)
        if elem.birth < position:
            self.pairs.append((p, elem.birth, position))

    def insert(self, s: tuple, position: int) -> None:
        p = len(s) - 1
        bit = 1 << self.sid(s)
        if p == 0:
            self._new_class(0, _Element(bit), position, young=True)
            return
        d = self.boundary(s)
        used = self._decompose(p - 1, d)
        support = [e for e in used if e.is_class]
        if not support:
            z = bit
            for e in used:
                z ^= e.chain
            self._new_class(p, _Element(z), position, young=True)
            return
        victim = max(support, key=lambda e: e.key)
        self._unplace(p - 1, victim)
        self._end(p - 1, victim, position)
        b = _Element(d, chain=bit)
        self.bounds[p - 1].add(b)
        self._place(p - 1, b)

    def delete(self, s: tuple, position: int) -> None:
        p = len(s) - 1
        bit = 1 << self.sid(s)
        holders = [c for c in self.classes[p] if c.vec & bit]
        if holders:
            victim = min(holders, key=lambda e: e.key)
            if p > 0:
                for b in self.bounds[p - 1]:
                    if b.chain & bit:
                        b.chain ^= victim.vec
            for c in holders:
                self._unplace(p, c)
            self._end(p, victim, position)
            for c in sorted(holders, key=lambda e: e.key):
                if c is not victim:
                    c.vec ^= victim.vec
                    self._place(p, c)
            return
        if p == 0:
            raise RuntimeError("vertex deleted while not carried by any cycle")
        carriers = sorted((b for b in self.bounds[p - 1] if b.chain & bit), key=lambda b: b.vec.bit_length())
        if not carriers:
            raise RuntimeError("deleted simplex affects no homology")
        freed = carriers[0]
        for b in carriers:
            self._unplace(p - 1, b)
        for b in carriers[1:]:
            b.absorb(freed)
            self._place(p - 1, b)
        self.bounds[p - 1].discard(freed)
        self._new_class(p - 1, freed, position, young=False)

    def survivors(self):
        for p, cs in enumerate(self.classes):
            for c in cs:
                yield p, c.birth


def _check_caps(f: ZigzagFiltration, p_max: int) -> None:
    for k in f.complexes:
        if k.size_cap is not None and k.size_cap < p_max + 2:
            raise ValueError(
                f"size cap {k.size_cap} is too small for dimension {p_max}; need at least {p_max + 2}"
            )


def zigzag_barcode(f: ZigzagFiltration, p_max: int) -> Barcode:
    """Index-axis barcode of ``f`` in dimensions ``0..p_max``."""
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    _check_caps(f, p_max)
    steps = schedule(f)
    top = max((k.dimension for k in f.complexes), default=0)
    engine = _Engine(max(top, 0))
    for step in steps:
        if step.kind == "insert":
            engine.insert(step.simplex, step.position)
        else:
            engine.delete(step.simplex, step.position)

    end = f.open_end
    bars = defaultdict(list)
    for p, birth, death in engine.pairs:
        if p <= p_max:
            bars[p].append(PersistencePair(p, birth, death, False, birth, death))
    for p, birth in engine.survivors():
        if p <= p_max:
            bars[p].append(PersistencePair(p, birth, end, True, birth, end))
    by_dim = {p: tuple(sorted(bars.get(p, ()))) for p in range(p_max + 1)}
    return Barcode(by_dim, "index", f.mode)


def to_time_axis(b: Barcode, f: ZigzagFiltration) -> Barcode:
    """Replace positions by filtration times. Open ends land half a snapshot
    spacing past the last snapshot time."""
    if b.axis != "index":
        raise ValueError("barcode is already on the time axis")
    n_snap = (len(f.complexes) + 1) // 2
    spacing = (f.times[-1] - f.times[0]) / (n_snap - 1) if n_snap > 1 else 0.0
    end_time = f.times[-1] + spacing / 2

    def at(q: int) -> float:
        return end_time if q >= len(f.times) else f.times[q]

    by_dim = {
        p: tuple(
            PersistencePair(pair.dimension, at(pair.birth_pos), at(pair.death_pos), pair.open_end,
                            pair.birth_pos, pair.death_pos)
            for pair in pairs
        )
        for p, pairs in b.pairs_by_dimension.items()
    }
    return Barcode(by_dim, "time", b.mode)
