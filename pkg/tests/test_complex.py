
import pytest
from hypothesis import given, strategies as st

from oracles import all_subsets, union_find_components
from thg_zigzag.complex import (
    SimplicialComplex,
    associated_asc,
    cap_for_dimension,
    intersection,
    subsimplex_count,
    union,
)
from thg_zigzag.core import HyperEdge, Hypergraph


def hg(*edges):
    return Hypergraph.from_edges(HyperEdge(f"e{i}", frozenset(e)) for i, e in enumerate(edges))


def sc(*simplices, cap=None):
    return SimplicialComplex.from_simplices(simplices, cap)


def test_triangle_unbounded():
    k = associated_asc(hg("ABC"))
    assert len(k) == 7 and ("A", "B", "C") in k


def test_triangle_capped():
    k = associated_asc(hg("ABC"), 2)
    assert k.simplices == all_subsets("ABC", 2)
    assert len(k) == 6


def test_toy_k0(toy_complexes):
    k0 = toy_complexes[0]
    assert union_find_components(k0.simplices) == 2
    assert k0.of_dim(2) == [("A", "B", "C")]


def test_empty_hypergraph():
    assert len(associated_asc(Hypergraph(), 3)) == 0


def test_union_examples(toy_complexes):
    k = sc("AB")
    assert union(k, k) == k
    assert union(sc("A", "B"), sc("B", "C")).simplices == {("A",), ("B",), ("C",)}
    merged = union(toy_complexes[0], toy_complexes[1])
    assert merged.of_dim(2) == [("A", "B", "C"), ("B", "C", "D")]
    assert union_find_components(merged.simplices) == 1


def test_intersection_examples():
    k = sc("AB")
    assert intersection(k, k) == k
    assert len(intersection(sc("A"), sc("B"))) == 0
    assert intersection(sc("AB"), sc("A", "B")).simplices == {("A",), ("B",)}


def test_cap_mismatch():
    with pytest.raises(ValueError):
        union(sc("A", cap=2), sc("A", cap=3))
    with pytest.raises(ValueError):
        intersection(sc("A", cap=2), sc("A"))


def test_subsimplex_count_examples():
    assert subsimplex_count(3) == 7
    assert subsimplex_count(3, 2) == 6
    assert subsimplex_count(5, 3) == 25 == len(all_subsets("abcde", 3))
    with pytest.raises(ValueError):
        subsimplex_count(0)


@pytest.mark.parametrize("m", range(1, 11))
def test_counting_matches_enumeration(m):
    verts = [f"v{i}" for i in range(m)]
    for cap in list(range(1, m + 1)) + [None]:
        assert len(associated_asc(hg(verts), cap)) == subsimplex_count(m, cap)
    assert subsimplex_count(m) == 2**m - 1


def test_cap_for_dimension():
    assert cap_for_dimension(1) == 3
    with pytest.raises(ValueError):
        cap_for_dimension(-1)


def test_iteration_order():
    k = sc("BC", "A")
    assert list(k) == [("A",), ("B",), ("C",), ("B", "C")]


vertex_sets = st.sets(st.sampled_from("abcdefg"), min_size=1, max_size=5)
families = st.lists(vertex_sets, max_size=6)
caps = st.sampled_from([1, 2, 3, 4, None])


@given(families, families, caps)
def test_closure_and_lattice_laws(f1, f2, cap):
    k1, k2 = associated_asc(hg(*f1), cap), associated_asc(hg(*f2), cap)
    k3 = associated_asc(hg(*(f1[:2] + f2[:1])), cap)
    for k in (k1, k2, union(k1, k2), intersection(k1, k2)):
        assert k.is_closed()
    assert union(k1, k2) == union(k2, k1)
    assert intersection(k1, k2) == intersection(k2, k1)
    assert union(union(k1, k2), k3) == union(k1, union(k2, k3))
    assert intersection(intersection(k1, k2), k3) == intersection(k1, intersection(k2, k3))
    assert union(k1, k1) == k1 == intersection(k1, k1)


@given(families, caps)
def test_monotone_and_restriction(family, cap):
    small = associated_asc(hg(*family[: len(family) // 2]), cap)
    big = associated_asc(hg(*family), cap)
    assert small <= big
    full = associated_asc(hg(*family))
    assert big.simplices == {s for s in full.simplices if cap is None or len(s) <= cap}
