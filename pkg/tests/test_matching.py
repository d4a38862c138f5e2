import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dicritical import UndirectedGraph, bidirected_cycle, digon_graph, directed_cycle, odd_3_wheel, pi
from dicritical.constructions import GadgetKind, GadgetSpec, gadget
from dicritical.matching import exhaustive_matching, is_matching, maximum_matching

from oracles import brute_matching, nx_matching, random_digraph, random_graph_edges


def G(n, edges):
    return UndirectedGraph.from_edges(n, edges)


def test_examples():
    assert maximum_matching(G(4, [(0, 1), (1, 2), (2, 3)])).size == 2
    assert maximum_matching(G(4, [(0, 1), (0, 2), (0, 3)])).size == 1
    W = odd_3_wheel(3, 3, 3).digraph
    assert W.n == 10
    assert maximum_matching(digon_graph(W)).size == 4 == (W.n - 2) // 2


def test_pi_examples():
    rng = random.Random(3)
    for _ in range(20):
        D = random_digraph(rng, 8, 0.5)
        assert pi(D, rng.sample(range(8), rng.randint(0, 8))) == 0
    assert pi(bidirected_cycle(5)) == 2
    assert pi(gadget(GadgetSpec(GadgetKind.PURSE, (3,))).digraph) == 2


def test_returned_edges_form_a_matching():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = G(n, random_graph_edges(rng, n, 30))
        res = maximum_matching(g)
        assert is_matching(g, res.edges) and len(res.edges) == res.size


def test_brute_force_equivalence_500_graphs():
    rng = random.Random(17)
    for _ in range(500):
        n = rng.randint(1, 10)
        edges = random_graph_edges(rng, n, 16)
        g = G(n, edges)
        expected = brute_matching(edges)
        assert maximum_matching(g).size == expected
        assert exhaustive_matching(g).size == expected


def test_blossom_against_networkx_on_larger_graphs():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 40)
        edges = random_graph_edges(rng, n, 120)
        assert maximum_matching(G(n, edges)).size == nx_matching(n, edges)


def test_exhaustive_refuses_large_inputs():
    with pytest.raises(ValueError):
        exhaustive_matching(G(20, [(i, i + 1) for i in range(19)]))


def test_tree_matching_bound_1000_trees():
    rng = random.Random(23)
    for _ in range(1000):
        n = rng.randint(2, 40)
        T = nx.random_labeled_tree(n, seed=rng.randrange(2**32)) if hasattr(nx, "random_labeled_tree") \
            else nx.random_tree(n, seed=rng.randrange(2**32))
        leaves = sum(1 for v in T if T.degree(v) <= 1)
        size = maximum_matching(G(n, [tuple(sorted(e)) for e in T.edges])).size
        assert 2 * size >= n - leaves + 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_vertex_deletion_loses_at_most_one(seed):
    rng = random.Random(seed)
    D = random_digraph(rng, rng.randint(2, 10), 0.6, digon_p=0.6)
    R = set(range(D.n))
    v = rng.randrange(D.n)
    assert pi(D, R - {v}) >= pi(D, R) - 1


def test_oriented_graphs_have_zero_pi():
    assert pi(directed_cycle(9)) == 0
