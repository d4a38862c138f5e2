import itertools
import random

import pytest

from dicritical import (
    Digraph, UndirectedGraph, bidirected_complete, bidirected_cycle, bidirected_path, blocks,
    check_gallai_blocks, contract_3_thread, contract_colour_classes, directed_cycle, find_threads,
    is_gallai_forest, is_k_dicolourable, o3, odd_3_wheel, potential, recognize_bidirected_odd_cycle,
    recognize_odd_3_wheel, underlying_graph,
)
from dicritical.errors import InvalidColouring, NotAThread, NotGallaiForest, RNotProper
from dicritical.solver import Colouring, dichromatic_number
from dicritical.structure import (
    BIDIRECTED_ODD_CYCLE, GALLAI_ALLOWED, digon_graph_is_forest, digon_forest_check, single_simple_neighbour_vertices,
    oriented_gallai_bound_check,
)

from oracles import brute_cut_vertices, random_graph_edges


def edges_within(block, edges):
    return {e for e in edges if e[0] in block and e[1] in block}


def test_block_examples():
    K4 = underlying_graph(bidirected_complete(4))
    assert blocks(K4).blocks == (frozenset(range(4)),)
    P4 = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    bd = blocks(P4)
    assert len(bd.blocks) == 3 and bd.cut_vertices == frozenset({1, 2})
    bowtie = UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bd = blocks(bowtie)
    assert len(bd.blocks) == 2 and bd.cut_vertices == frozenset({2})


def test_blocks_against_articulation_oracle():
    rng = random.Random(12)
    for _ in range(300):
        n = rng.randint(1, 12)
        edges = random_graph_edges(rng, n, rng.randint(0, 24))
        bd = blocks(UndirectedGraph.from_edges(n, edges))
        assert set(bd.cut_vertices) == brute_cut_vertices(n, edges)
        # every edge in exactly one block
        for e in edges:
            assert sum(1 for b in bd.blocks if e[0] in b and e[1] in b) == 1
        # a block with >= 3 vertices is 2-connected
        for b in bd.blocks:
            if len(b) >= 3:
                inner = edges_within(b, edges)
                for v in b:
                    rest = b - {v}
                    assert not brute_cut_vertices_in(rest, inner - {e for e in inner if v in e})


def brute_cut_vertices_in(vertices, edges):
    """True iff the graph on ``vertices`` is disconnected."""
    vertices = set(vertices)
    start = next(iter(vertices))
    seen, stack = {start}, [start]
    while stack:
        u = stack.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return seen != vertices


def test_gallai_block_examples():
    rep = check_gallai_blocks(o3(12).digraph, 3)
    assert rep.ok and rep.blocks
    rep = check_gallai_blocks(bidirected_cycle(5), 3)
    assert rep.blocks == [((0, 1, 2, 3, 4), BIDIRECTED_ODD_CYCLE)]
    W = odd_3_wheel(1, 1, 1)
    rep = check_gallai_blocks(W.digraph, 3)
    assert set(rep.low_degree) == {W.roles[f"rim{i}"] for i in (1, 2, 3)}
    assert rep.ok and all(c in GALLAI_ALLOWED for _, c in rep.blocks)


def test_gallai_forest_examples():
    D = Digraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert is_gallai_forest(D) and oriented_gallai_bound_check(D)
    arc = Digraph(2, [(0, 1)])
    assert is_gallai_forest(arc) and oriented_gallai_bound_check(arc)
    assert not is_gallai_forest(bidirected_path(3))
    with pytest.raises(NotGallaiForest):
        oriented_gallai_bound_check(bidirected_path(3))
    assert not is_gallai_forest(Digraph(3, [(0, 1), (1, 2), (0, 2)]))


def test_recognizers():
    assert recognize_bidirected_odd_cycle(bidirected_cycle(7))
    assert not recognize_bidirected_odd_cycle(bidirected_cycle(6))
    assert not recognize_bidirected_odd_cycle(directed_cycle(7))
    W = odd_3_wheel(3, 1, 1)
    got = recognize_odd_3_wheel(W.digraph)
    assert got is not None and got.centre == W.roles["centre"]
    assert set(got.rim) == {W.roles[f"rim{i}"] for i in (1, 2, 3)}
    assert sorted(len(s) - 1 for s in got.spikes) == [1, 1, 3]
    assert recognize_odd_3_wheel(bidirected_cycle(5)) is None
    assert recognize_odd_3_wheel(o3(12).digraph) is None
    # wrong parity of a spike is not an odd 3-wheel
    B = Digraph(5, [(1, 2), (2, 3), (3, 1), (0, 4), (4, 0), (4, 1), (1, 4), (0, 2), (2, 0), (0, 3), (3, 0)])
    assert recognize_odd_3_wheel(B) is None


def brute_threads(D, k):
    found = set()
    for seq in itertools.permutations(range(D.n), k + 1):
        if all(D.has_arc(a, b) and D.has_arc(b, a) for a, b in zip(seq, seq[1:])) \
                and all(D.degree(v) == 4 for v in seq[1:-1]):
            found.add(min(seq, seq[::-1]))
    return sorted(found)


def test_thread_examples():
    assert len(find_threads(bidirected_cycle(7), 3)) == 7
    assert find_threads(o3(12).digraph, 2) == []
    assert find_threads(bidirected_path(5), 3) == brute_threads(bidirected_path(5), 3)
    assert len(find_threads(bidirected_path(5), 3)) == 2


def with_thread(rng, n):
    """Random digraph on n vertices plus a bidirected 3-path w-x-y-z through two new vertices."""
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < 0.25:
            arcs += [(u, v), (v, u)]
        elif r < 0.6:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    w, z = rng.sample(range(n), 2)
    x, y = n, n + 1
    arcs += [(w, x), (x, w), (x, y), (y, x), (y, z), (z, y)]
    return Digraph(n + 2, arcs), (w, x, y, z)


def test_threads_match_window_scan():
    rng = random.Random(2)
    for _ in range(40):
        D, _ = with_thread(rng, rng.randint(2, 6))
        for k in (2, 3):
            assert find_threads(D, k) == brute_threads(D, k)


def test_contract_3_thread_examples():
    C7 = bidirected_cycle(7)
    res = contract_3_thread(C7, find_threads(C7, 3)[0])
    assert recognize_bidirected_odd_cycle(res.digraph) and res.digraph.n == 5
    assert potential(res.digraph) == potential(C7) == 1
    C9 = bidirected_cycle(9)
    res = contract_3_thread(C9, [0, 1, 2, 3])
    assert res.digraph.n == 7 and recognize_bidirected_odd_cycle(res.digraph)
    assert is_k_dicolourable(res.digraph, 2) is None
    with pytest.raises(NotAThread):
        contract_3_thread(o3(12).digraph, [0, 1, 2, 3])


def test_contract_3_thread_100_cases():
    rng = random.Random(77)
    non_colourable = 0
    for _ in range(100):
        D, thread = with_thread(rng, rng.randint(2, 7))
        res = contract_3_thread(D, thread)
        H = res.digraph
        assert H.n == D.n - 2 and D.m - H.m >= 4
        assert potential(H) >= potential(D)
        if is_k_dicolourable(D, 2) is None:
            non_colourable += 1
            assert is_k_dicolourable(H, 2) is None
    assert non_colourable > 10


def test_contract_colour_classes_examples():
    W = odd_3_wheel(1, 1, 1)
    r1, r2 = W.roles["rim1"], W.roles["rim2"]
    res = contract_colour_classes(W.digraph, [r1, r2], {r1: 1, r2: 2})
    x1, x2 = res.digraph.n - 2, res.digraph.n - 1
    assert res.digraph.has_arc(x1, x2) and res.digraph.has_arc(x2, x1)
    C5 = bidirected_cycle(5)
    res = contract_colour_classes(C5, [0, 1, 2], {0: 1, 1: 2, 2: 1})
    assert res.digraph.n == 4 and dichromatic_number(res.digraph) >= 3
    with pytest.raises(InvalidColouring):
        contract_colour_classes(C5, [0, 1], {0: 1, 1: 1})
    with pytest.raises(RNotProper):
        contract_colour_classes(C5, range(5), {v: 1 for v in range(5)})
    res = contract_colour_classes(C5, [0, 1, 2], Colouring((1, 2, 1), 2))
    assert res.digraph.n == 4


def test_colour_class_contraction_50_cases():
    rng = random.Random(5)
    pool = [bidirected_cycle(5), bidirected_cycle(7), odd_3_wheel(1, 1, 1).digraph,
            odd_3_wheel(1, 3, 1).digraph, o3(12).digraph, o3(13).digraph, bidirected_complete(3)]
    done = 0
    while done < 50:
        D = rng.choice(pool)
        R = rng.sample(range(D.n), rng.randint(1, D.n - 1))
        sub = D.without_vertices([v for v in D.vertices if v not in R])[0]
        col = is_k_dicolourable(sub, 2)
        if col is None:
            continue
        flip = rng.random() < 0.5
        phi = {v: 3 - c if flip else c for v, c in zip(sorted(R), col.assignment)}
        res = contract_colour_classes(D, R, phi)
        assert dichromatic_number(res.digraph) >= 3
        done += 1


def test_single_simple_neighbour_examples():
    assert single_simple_neighbour_vertices(odd_3_wheel(1, 1, 1).digraph) == []
    D = Digraph(3, [(0, 1), (1, 0), (1, 2), (2, 0)])
    assert 1 in single_simple_neighbour_vertices(D)
    assert single_simple_neighbour_vertices(o3(12).digraph) == []


def test_digon_forest_audit():
    assert not digon_graph_is_forest(bidirected_cycle(5))
    assert digon_forest_check(bidirected_cycle(5))
    assert digon_forest_check(odd_3_wheel(3, 1, 5).digraph)
    assert digon_graph_is_forest(o3(12).digraph)
    assert not digon_forest_check(bidirected_cycle(4))
