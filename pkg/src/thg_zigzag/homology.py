"""Simplicial homology over GF(2).

Columns are handled internally as Python ints used as bit vectors, so a
column addition is a single XOR and the pivot ("low" row) is
``bit_length() - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, facets


@dataclass(frozen=True)
class Gf2Matrix:
    rows: int
    cols: int
    columns: tuple = ()

    def __post_init__(self):
        if len(self.columns) != self.cols:
            raise ValueError(f"expected {self.cols} columns, got {len(self.columns)}")
        for col in self.columns:
            if any(not 0 <= r < self.rows for r in col):
                raise ValueError(f"row index out of range in column {sorted(col)}")

    @classmethod
    def from_dense(cls, dense) -> "Gf2Matrix":
        dense = [list(r) for r in dense]
        n_rows = len(dense)
        n_cols = len(dense[0]) if dense else 0
        cols = tuple(frozenset(i for i in range(n_rows) if dense[i][j] % 2) for j in range(n_cols))
        return cls(n_rows, n_cols, cols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for i in col:
                out[i][j] = 1
        return out

    def bit_columns(self) -> list[int]:
        return [sum(1 << r for r in col) for col in self.columns]

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        mine = self.bit_columns()
        out = []
        for col in other.columns:
            acc = 0
            for k in col:
                acc ^= mine[k]
            out.append(frozenset(_bits(acc)))
        return Gf2Matrix(self.rows, other.cols, tuple(out))


def _bits(x: int):
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


def reduce_bits(columns) -> dict[int, int]:
    """Left-to-right column reduction; returns ``{pivot row: reduced column}``."""
    pivots: dict[int, int] = {}
    for col in columns:
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                break
            col ^= other
    return pivots


def kernel_bits(columns) -> list[int]:
    """Basis of the null space; vectors index the input columns."""
    pivots: dict[int, tuple] = {}
    kernel = []
    for j, col in enumerate(columns):
        combo = 1 << j
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = (col, combo)
                break
            col ^= other[0]
            combo ^= other[1]
        if not col:
            kernel.append(combo)
    return kernel


def rank(m: Gf2Matrix) -> int:
    return len(reduce_bits(m.bit_columns()))


def _index(k: SimplicialComplex, p: int) -> dict[tuple, int]:
    return {s: i for i, s in enumerate(k.of_dim(p))}


def _boundary_bits(k: SimplicialComplex, p: int) -> list[int]:
    if p == 0:
        return [0] * len(k.of_dim(0))
    rows = _index(k, p - 1)
    return [sum(1 << rows[f] for f in facets(s)) for s in k.of_dim(p)]


def boundary_matrix(k: SimplicialComplex, p: int) -> Gf2Matrix:
    """``p``-th boundary matrix: columns are ``p``-simplices, rows their facets,
    both in canonical order. For ``p = 0`` there are no rows."""
    if p < 0:
        raise ValueError("p must be non-negative")
    n_rows = 0 if p == 0 else len(k.of_dim(p - 1))
    cols = tuple(frozenset(_bits(c)) for c in _boundary_bits(k, p))
    return Gf2Matrix(n_rows, len(cols), cols)


def _check_cap(k: SimplicialComplex, p_max: int) -> None:
    if k.size_cap is not None and k.size_cap < p_max + 2:
        raise ValueError(
            f"size cap {k.size_cap} is too small for homology up to dimension {p_max}; "
            f"need at least {p_max + 2}"
        )


def betti(k: SimplicialComplex, p_max: int) -> list[int]:
    """Betti numbers ``[b_0, ..., b_p_max]``."""
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    _check_cap(k, p_max)
    ranks = [len(reduce_bits(_boundary_bits(k, p))) for p in range(p_max + 2)]
    return [len(k.of_dim(p)) - ranks[p] - ranks[p + 1] for p in range(p_max + 1)]


def induced_rank(k_sub: SimplicialComplex, k_sup: SimplicialComplex, p: int) -> int:
    """Rank of ``H_p(k_sub) -> H_p(k_sup)`` induced by inclusion."""
    if not k_sub.simplices <= k_sup.simplices:
        raise ValueError("first complex is not a subcomplex of the second")
    sub_simplices = k_sub.of_dim(p)
    sup_rows = _index(k_sup, p)
    cycles = []
    for combo in kernel_bits(_boundary_bits(k_sub, p)):
        cycles.append(sum(1 << sup_rows[sub_simplices[j]] for j in _bits(combo)))
    bounds = _boundary_bits(k_sup, p + 1)
    return len(reduce_bits(bounds + cycles)) - len(reduce_bits(bounds))
