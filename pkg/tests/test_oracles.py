"""Tests for the brute-force oracles, including oracle-vs-oracle agreement."""

import random
from itertools import combinations, product

import pytest

from treecount.combinatorics import SizeLimitError
from treecount.oracles import (
    LabeledGraph,
    Tree,
    count_trees_bipartite_brute,
    count_trees_complete_brute,
    degrees_from_pruefer,
    matrix_tree_count,
    pruefer_decode,
)


def all_odd(degrees):
    return all(d % 2 == 1 for d in degrees)


def naive_bipartite_count(m, n, predicate=None):
    """Reference loop: decode every sequence via the public pruefer_decode
    and check the side split edge by edge.  Independent of the fused sweep
    in the oracles module."""
    total = m + n
    if total == 2:
        side_a, side_b = (1,), (1,)
        return 1 if predicate is None or predicate(side_a, side_b) else 0
    count = 0
    for seq in product(range(1, total + 1), repeat=total - 2):
        tree = pruefer_decode(seq, total)
        if any((u <= m) == (v <= m) for u, v in tree.edges):
            continue
        degrees = tree.degrees()
        if predicate is None or predicate(degrees[:m], degrees[m:]):
            count += 1
    return count


def naive_decode_edges(seq, n):
    """Reference decode: rescan for the smallest degree-1 vertex each step."""
    degree = [0] + [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for head in seq:
        leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, head) if leaf < head else (head, leaf))
        degree[leaf] = 0
        degree[head] -= 1
    last = [v for v in range(1, n + 1) if degree[v] >= 1]
    edges.append((last[0], last[1]))
    return frozenset(edges)


def spanning_trees_by_edge_subsets(graph):
    """Second reference oracle: try every (n-1)-subset of edges."""
    n = graph.vertex_count
    if n == 1:
        return 1
    count = 0
    for subset in combinations(sorted(graph.edges), n - 1):
        try:
            Tree(n, subset)
        except ValueError:
            continue
        count += 1
    return count


class TestPrueferDecode:
    def test_empty_sequence(self):
        assert pruefer_decode([], 2).edges == ((1, 2),)

    def test_constant_sequence_is_a_star(self):
        tree = pruefer_decode([1, 1], 4)
        assert set(tree.edges) == {(1, 2), (1, 3), (1, 4)}

    def test_hand_run(self):
        tree = pruefer_decode([3, 3, 4], 5)
        assert set(tree.edges) == {(1, 3), (2, 3), (3, 4), (4, 5)}

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pruefer_decode([1], 4)

    def test_out_of_range_entry_rejected(self):
        with pytest.raises(ValueError):
            pruefer_decode([5, 1], 4)

    def test_tiny_n_rejected(self):
        with pytest.raises(ValueError):
            pruefer_decode([], 1)

    def test_pointer_decode_matches_naive_rescan_exhaustively(self):
        for n in range(2, 7):
            for seq in product(range(1, n + 1), repeat=n - 2):
                assert frozenset(pruefer_decode(seq, n).edges) == naive_decode_edges(
                    seq, n
                )

    def test_bijection_small_sizes(self):
        # decoding all n**(n-2) sequences yields that many distinct trees
        for n in range(2, 8):
            seen = set()
            for seq in product(range(1, n + 1), repeat=n - 2):
                seen.add(frozenset(pruefer_decode(seq, n).edges))
            assert len(seen) == n ** (n - 2)


class TestDegreesFromPruefer:
    def test_occurrence_plus_one(self):
        assert degrees_from_pruefer([1, 1], 4) == (3, 1, 1, 1)
        assert degrees_from_pruefer([], 2) == (1, 1)
        assert degrees_from_pruefer([3, 3, 4], 5) == (1, 1, 3, 2, 1)

    def test_matches_decoded_tree_exhaustively(self):
        for n in range(2, 7):
            for seq in product(range(1, n + 1), repeat=n - 2):
                assert degrees_from_pruefer(seq, n) == pruefer_decode(seq, n).degrees()


class TestTreeValidation:
    def test_cycle_rejected(self):
        with pytest.raises(ValueError):
            Tree(4, ((1, 2), (2, 3), (1, 3)))

    def test_wrong_edge_count_rejected(self):
        with pytest.raises(ValueError):
            Tree(4, ((1, 2), (3, 4)))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            Tree(4, ((1, 2), (1, 2), (3, 4)))

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Tree(3, ((1, 1), (2, 3)))

    def test_single_vertex(self):
        assert Tree(1, ()).degrees() == (0,)

    def test_degrees(self):
        assert Tree(4, ((1, 2), (2, 3), (2, 4))).degrees() == (1, 3, 1, 1)


class TestLabeledGraph:
    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            LabeledGraph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            LabeledGraph(3, [(1, 4)])

    def test_duplicates_collapse(self):
        g = LabeledGraph(3, [(1, 2), (2, 1), (1, 2)])
        assert g.edges == frozenset({(1, 2)})

    def test_builders(self):
        assert len(LabeledGraph.complete(5).edges) == 10
        assert len(LabeledGraph.complete_bipartite(2, 3).edges) == 6
        assert len(LabeledGraph.path(4).edges) == 3
        assert len(LabeledGraph.cycle(4).edges) == 4


class TestCompleteBruteForce:
    def test_all_odd_on_four_vertices(self):
        assert count_trees_complete_brute(4, all_odd) == 4

    def test_accept_all_realizes_cayley(self):
        assert count_trees_complete_brute(4) == 16

    def test_specific_degree_profile(self):
        target = (2, 2, 1, 1)
        assert count_trees_complete_brute(4, lambda d: d == target) == 2

    def test_single_vertex_predicate_semantics(self):
        assert count_trees_complete_brute(1) == 1
        assert count_trees_complete_brute(1, all_odd) == 0
        assert count_trees_complete_brute(1, lambda d: d == (0,)) == 1

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            count_trees_complete_brute(10)

    def test_matches_naive_decode_filter(self):
        # independent loop over decoded trees rather than the degree tally
        for n in range(2, 6):
            by_decode = sum(
                1
                for seq in product(range(1, n + 1), repeat=n - 2)
                if all_odd(pruefer_decode(seq, n).degrees())
            )
            assert count_trees_complete_brute(n, all_odd) == by_decode


class TestBipartiteBruteForce:
    def test_accept_all_small(self):
        assert count_trees_bipartite_brute(1, 1) == 1
        assert count_trees_bipartite_brute(2, 3) == 12

    def test_all_odd_three_three(self):
        assert count_trees_bipartite_brute(3, 3, lambda a, b: all_odd(a + b)) == 9

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            count_trees_bipartite_brute(5, 5)

    def test_bad_sizes_rejected(self):
        with pytest.raises(ValueError):
            count_trees_bipartite_brute(0, 3)

    def test_matches_naive_decode_loop(self):
        for m, n in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (1, 5)]:
            assert count_trees_bipartite_brute(m, n) == naive_bipartite_count(m, n)
            odd = lambda a, b: all_odd(a + b)
            assert count_trees_bipartite_brute(m, n, odd) == naive_bipartite_count(
                m, n, odd
            )

    def test_degree_spec_filter_matches_naive(self):
        spec = ((2, 2), (2, 1, 1))
        predicate = lambda a, b: (a, b) == spec
        assert count_trees_bipartite_brute(2, 3, predicate) == naive_bipartite_count(
            2, 3, predicate
        ) == 2


class TestMatrixTreeCount:
    def test_path_has_one_spanning_tree(self):
        assert matrix_tree_count(LabeledGraph.path(3)) == 1

    def test_cycle_has_n_spanning_trees(self):
        assert matrix_tree_count(LabeledGraph.cycle(4)) == 4

    def test_complete_graph_frozen_value(self):
        assert matrix_tree_count(LabeledGraph.complete(5)) == 125

    def test_single_vertex(self):
        assert matrix_tree_count(LabeledGraph(1, [])) == 1

    def test_disconnected_graph_is_zero(self):
        assert matrix_tree_count(LabeledGraph(4, [(1, 2), (3, 4)])) == 0

    def test_complete_graphs_realize_cayley(self):
        for n in range(1, 9):
            assert matrix_tree_count(LabeledGraph.complete(n)) == max(
                1, n ** (n - 2)
            )

    def test_complete_bipartite_closed_form(self):
        for m in range(1, 9):
            for n in range(1, 11 - m):
                g = LabeledGraph.complete_bipartite(m, n)
                assert matrix_tree_count(g) == m ** (n - 1) * n ** (m - 1)

    def test_agrees_with_edge_subset_enumeration_on_random_graphs(self):
        rng = random.Random(20250809)
        for _ in range(40):
            n = rng.randint(2, 6)
            pairs = list(combinations(range(1, n + 1), 2))
            edges = [e for e in pairs if rng.random() < 0.6]
            g = LabeledGraph(n, edges)
            assert matrix_tree_count(g) == spanning_trees_by_edge_subsets(g)
