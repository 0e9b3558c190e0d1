import random

import pytest

from incrtree.graphs import (BoundExceededError, Graph, NotConnectedError,
                             SetPartition, all_graphs, connected_graphs,
                             random_connected_graph)
from incrtree.invariants import (IntPoly, chromatic_poly_by_deletion_contraction,
                                 chromatic_poly_by_subsets,
                                 chromatic_poly_from_forests, collapse_by_shape,
                                 connected_subgraph_poly,
                                 connected_subgraph_poly_from_trees,
                                 csf_x_by_subsets, csf_x_from_forests,
                                 csf_y_by_subsets, csf_y_from_forests,
                                 supported_forest_counts)
from incrtree.trees import count_supported_trees


def K(n):
    return Graph.complete(n)


def small_graphs(max_n=4):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


# --- IntPoly -------------------------------------------------------------------

def test_intpoly_canonical_form():
    assert IntPoly([0, 1, 0, 0]).coeffs == (0, 1)
    assert IntPoly([]).coeffs == ()
    assert IntPoly([0, 0]) == IntPoly.zero()


def test_intpoly_arithmetic():
    x = IntPoly.x()
    p = (x + IntPoly.one()) ** 2
    assert p == IntPoly([1, 2, 1])
    assert p - p == IntPoly.zero()
    assert (p * x).coeffs == (0, 1, 2, 1)
    assert 3 * x == IntPoly([0, 3])
    assert p(5) == 36
    assert p.coefficient(1) == 2 and p.coefficient(9) == 0
    assert p.degree == 2 and IntPoly.zero().degree == -1


def test_intpoly_pow_edge_cases():
    assert IntPoly([1, 1]) ** 0 == IntPoly.one()
    with pytest.raises(ValueError):
        IntPoly.x() ** -1


# --- connected-subgraph polynomial ------------------------------------------------

def test_connected_subgraph_poly_examples():
    assert connected_subgraph_poly(Graph(2, [(1, 2)])) == IntPoly([0, 1])
    assert connected_subgraph_poly(K(3)) == IntPoly([0, 0, 3, 1])
    assert connected_subgraph_poly(K(4)) == IntPoly([0, 0, 0, 16, 15, 6, 1])
    assert connected_subgraph_poly(Graph(1)) == IntPoly.one()


def test_connected_subgraph_poly_requires_connected():
    with pytest.raises(NotConnectedError):
        connected_subgraph_poly(Graph(2))
    with pytest.raises(NotConnectedError):
        connected_subgraph_poly_from_trees(Graph(2))


def test_connected_subgraph_poly_respects_limit():
    with pytest.raises(BoundExceededError):
        connected_subgraph_poly(K(5), max_n=4)


def test_subset_oracles_respect_limit():
    big = Graph(17)
    with pytest.raises(BoundExceededError):
        chromatic_poly_by_subsets(big)
    with pytest.raises(BoundExceededError):
        csf_y_by_subsets(big)


def test_tree_route_matches_brute_force():
    for n in range(1, 5):
        for g in connected_graphs(n):
            assert connected_subgraph_poly_from_trees(g) == \
                connected_subgraph_poly(g)


def test_tree_route_single_vertex_is_one():
    assert connected_subgraph_poly_from_trees(Graph(1)) == IntPoly.one()


def test_eta_at_minus_one_counts_trees():
    for g in connected_graphs(4):
        count = count_supported_trees(g)
        assert connected_subgraph_poly(g)(-1) == -count  # (-1)^(4-1) * count


# --- chromatic polynomial ------------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_poly_by_subsets(Graph(3)) == IntPoly([0, 0, 0, 1])
    assert chromatic_poly_by_subsets(K(3)) == IntPoly([0, 2, -3, 1])
    assert chromatic_poly_by_subsets(K(4)) == IntPoly([0, -6, 11, -6, 1])


def test_chromatic_oracles_agree():
    for g in small_graphs():
        assert chromatic_poly_by_subsets(g) == \
            chromatic_poly_by_deletion_contraction(g)


def test_chromatic_forest_route():
    p3 = Graph(3, [(1, 2), (2, 3)])
    assert chromatic_poly_from_forests(p3).coefficient(1) == 1
    assert chromatic_poly_from_forests(K(4)).coefficient(1) == -6
    for g in small_graphs():
        chi = chromatic_poly_from_forests(g)
        assert chi == chromatic_poly_by_subsets(g)
        assert chi.coefficient(len(g.vertices)) == 1


def test_chromatic_forest_route_random_n5():
    rng = random.Random(99)
    for _ in range(10):
        g = random_connected_graph(5, rng)
        assert chromatic_poly_from_forests(g) == \
            chromatic_poly_by_deletion_contraction(g)


def test_chromatic_coefficient_signs():
    for g in small_graphs():
        n = len(g.vertices)
        chi = chromatic_poly_by_subsets(g)
        for q in range(n + 1):
            c = chi.coefficient(q)
            assert c == 0 or (c > 0) == ((n - q) % 2 == 0)


def test_forest_counts_disconnected():
    g = Graph(4, [(1, 2), (3, 4)])
    counts = supported_forest_counts(g)
    assert counts.get(1, 0) == 0           # no spanning tree support
    assert counts[2] == 1                  # the two edges
    assert counts[4] == 1                  # all singletons


# --- chromatic symmetric function -----------------------------------------------------

def test_csf_y_golden_k3():
    got = csf_y_from_forests(K(3))
    assert got == {
        SetPartition([[1, 2, 3]]): 2,
        SetPartition([[1, 2], [3]]): -1,
        SetPartition([[1, 3], [2]]): -1,
        SetPartition([[1], [2, 3]]): -1,
        SetPartition([[1], [2], [3]]): 1,
    }


def test_csf_y_trivial_cases():
    assert csf_y_by_subsets(Graph(2)) == {SetPartition([[1], [2]]): 1}
    assert csf_y_by_subsets(Graph(2, [(1, 2)])) == {
        SetPartition([[1], [2]]): 1,
        SetPartition([[1, 2]]): -1,
    }
    assert csf_y_from_forests(Graph(1)) == {SetPartition([[1]]): 1}


def test_csf_y_edge_free_block_vanishes():
    g = Graph(3, [(1, 2)])
    got = csf_y_from_forests(g)
    assert SetPartition([[1, 3], [2]]) not in got
    assert SetPartition([[1], [2, 3]]) not in got


def test_csf_y_routes_agree():
    for g in small_graphs():
        assert csf_y_from_forests(g) == csf_y_by_subsets(g)


def test_csf_x_golden():
    assert csf_x_from_forests(K(3)) == {(1, 1, 1): 1, (2, 1): -3, (3,): 2}
    assert csf_x_from_forests(K(4))[(4,)] == -6
    assert csf_x_from_forests(Graph(3)) == {(1, 1, 1): 1}


def test_csf_x_is_shape_collapse():
    for g in small_graphs():
        assert csf_x_from_forests(g) == collapse_by_shape(csf_y_from_forests(g))
        assert csf_x_from_forests(g) == csf_x_by_subsets(g)


def test_csf_y_specializes_to_chromatic():
    for g in small_graphs():
        spec = IntPoly.zero()
        for part, coeff in csf_y_from_forests(g).items():
            spec = spec + IntPoly.x_power(len(part), coeff)
        assert spec == chromatic_poly_from_forests(g)
