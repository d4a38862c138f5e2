"""Acceptance suite: one group of tests per criterion, each with its time limit."""

import math
import random
import time

import pytest

from dicritical import (
    bidirected_cycle, circulant_tournament, classify_by_potential, dichromatic_number,
    directed_cycle, family_sizes, g_family, gadget, generalized_knob, is_k_dicolourable,
    is_k_dicritical, knob, knob_prime, o3, odd_3_wheel, order_k_plus_1_example, paley_11, potential,
    triangle_join,
)
from dicritical.constructions import GadgetKind, GadgetSpec
from dicritical.potential import CriticalClass
from dicritical.solver import enumerate_labelled_tournaments
from dicritical.structure import check_gallai_blocks, is_gallai_forest, oriented_gallai_bound_check

import test_matching
import test_potential
import test_structure
from oracles import random_oriented_gallai_forest


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f}s, limit {self.limit}s"


def verified(D, k):
    rep = is_k_dicritical(D, k)
    return rep.chi == k and rep.is_dicritical


# -- 1 -------------------------------------------------------------------------

def test_criterion_1_o3_witnesses():
    with Timer(5):
        for n in range(12, 17):
            D = o3(n).digraph
            assert D.is_oriented()
            assert D.m == math.ceil(5 * n / 2)
            rep = is_k_dicritical(D, 3)
            assert rep.chi == 3 and rep.is_dicritical
            assert len(rep.witness_colourings) == D.m


# -- 2 -------------------------------------------------------------------------

@pytest.mark.parametrize("length", [3, 5, 7, 9])
def test_criterion_2_bidirected_odd_cycles(length):
    D = bidirected_cycle(length)
    assert potential(D) == 1 and verified(D, 3)
    assert classify_by_potential(D).cls is CriticalClass.BIDIRECTED_ODD_CYCLE


@pytest.mark.parametrize("spikes", [(1, 1, 1), (1, 1, 3), (3, 3, 3), (1, 3, 5)])
def test_criterion_2_odd_3_wheels(spikes):
    D = odd_3_wheel(*spikes).digraph
    assert potential(D) == -1 and verified(D, 3)
    assert classify_by_potential(D).cls is CriticalClass.ODD_3_WHEEL


def test_criterion_2_o3_potentials_and_runtime():
    with Timer(30):
        for n in range(12, 17):
            v = classify_by_potential(o3(n).digraph)
            assert v.cls is CriticalClass.OTHER and v.rho <= -2 and v.consistent
        for length in (3, 5, 7, 9):
            assert verified(bidirected_cycle(length), 3)
        for spikes in [(1, 1, 1), (1, 1, 3), (3, 3, 3), (1, 3, 5)]:
            assert verified(odd_3_wheel(*spikes).digraph, 3)


# -- 3 -------------------------------------------------------------------------

def oriented_3_dicritical_instances():
    yield from (o3(n).digraph for n in range(12, 17))
    yield g_family(1, 3)
    yield g_family(2, 3)
    yield from (triangle_join(directed_cycle(3), directed_cycle(n - 4)) for n in range(7, 11))
    yield circulant_tournament(7, {1, 2, 4})


def test_criterion_3_arc_lower_bound_consistency():
    checked = 0
    for D in oriented_3_dicritical_instances():
        assert D.is_oriented() and verified(D, 3)
        assert 3 * D.m >= 7 * D.n + 2, (D.n, D.m)
        checked += 1
    assert checked == 12


# -- 4 -------------------------------------------------------------------------

def test_criterion_4_family_recurrences():
    with Timer(60):
        pairs = 0
        for k in range(2, 10):
            i = 1
            while family_sizes(i, k).n <= 500:
                G = g_family(i, k)
                fs = family_sizes(i, k)
                assert (G.n, G.m) == (fs.n, fs.m)
                assert G.is_oriented()
                pairs += 1
                i += 1
        assert pairs > 1000
        G = g_family(1, 3)
        assert (G.n, G.m) == (12, 30) and verified(G, 3)
        for k in range(3, 51):
            for i in range(1, 11):
                assert family_sizes(i, k).ratio < 2 * k - 3


# -- 5 -------------------------------------------------------------------------

def test_criterion_5_paley_facts():
    with Timer(300):
        P = paley_11()
        assert is_k_dicolourable(P, 3) is None
        assert is_k_dicolourable(P, 4) is not None and dichromatic_number(P) == 4
        summary = enumerate_labelled_tournaments(6, lambda T: is_k_dicolourable(T, 2) is not None)
        assert summary.visited == summary.satisfied == 32768
        W = circulant_tournament(7, {1, 2, 4})
        assert W.m == 21 and is_k_dicolourable(W, 2) is None


# -- 6 -------------------------------------------------------------------------

def test_criterion_6_triangle_joins():
    with Timer(5):
        for n2 in (3, 5):
            D1, D2 = directed_cycle(3), directed_cycle(n2)
            assert verified(D1, 2) and verified(D2, 2)
            J = triangle_join(D1, D2)
            assert verified(J, 3)


# -- 7 -------------------------------------------------------------------------

def test_criterion_7_gadget_potentials():
    with Timer(1):
        for l in (0, 1, 2):
            assert potential(gadget(GadgetSpec(GadgetKind.PURSE, (2 * l + 1,))).digraph) == 3
        for l1 in (0, 1):
            for l2 in (0, 1):
                spec = GadgetSpec(GadgetKind.HANDCUFF, (2 * l1 + 1, 2 * l2 + 1))
                assert potential(gadget(spec).digraph) == -2
        for l1 in (0, 1, 2):
            for l2 in (0, 1, 2):
                spec = GadgetSpec(GadgetKind.BAG, (2 * l1 + 1, 2 * l2 + 1))
                assert potential(gadget(spec).digraph) == 3
        for profile in [(a, b, c) for a in (0, 2) for b in (0, 2) for c in (0, 2)]:
            assert potential(gadget(GadgetSpec(GadgetKind.BPLUS, profile)).digraph) == 9


# -- 8 -------------------------------------------------------------------------

def knob_clauses(K):
    D, b1, b2 = K.digraph, K.roles["base1"], K.roles["base2"]
    for c1 in (1, 2, 3):
        for c2 in (1, 2, 3):
            assert is_k_dicolourable(D, 3, precoloured={b1: c1, b2: c2}) is not None
    for c in (1, 2):
        assert is_k_dicolourable(D, 2, precoloured={b1: c, b2: c}) is None
    for u, v in D.arcs:
        assert is_k_dicolourable(D.without_arc(u, v), 2, precoloured={b1: 1, b2: 1}) is not None


def generalized_knob_clauses(D, k):
    K = generalized_knob(D)
    H, z1, z2 = K.digraph, K.roles["base1"], K.roles["base2"]
    assert dichromatic_number(H) == k
    for c in range(1, k + 1):
        assert is_k_dicolourable(H, k, precoloured={z1: c, z2: c}) is None
    for u, v in H.arcs:
        assert is_k_dicolourable(H.without_arc(u, v), k, precoloured={z1: 1, z2: 1}) is not None


def test_criterion_8_knob_properties():
    with Timer(10):
        for K in (knob(1), knob(2), knob(3), knob_prime()):
            knob_clauses(K)
        for length in (3, 4, 5):
            assert verified(directed_cycle(length), 2)
            generalized_knob_clauses(directed_cycle(length), 2)
        assert verified(o3(12).digraph, 3)
        generalized_knob_clauses(o3(12).digraph, 3)


# -- 9 -------------------------------------------------------------------------

def test_criterion_9_matching_brute_force():
    test_matching.test_brute_force_equivalence_500_graphs()


def test_criterion_9_subdigraph_potential():
    test_potential.test_subdigraph_inequality_500_pairs()


def test_criterion_9_thread_contraction():
    test_structure.test_contract_3_thread_100_cases()


def test_criterion_9_colour_class_contraction():
    test_structure.test_colour_class_contraction_50_cases()


def dicritical_instances():
    for length in (3, 5, 7, 9):
        yield bidirected_cycle(length), 3
    for spikes in [(1, 1, 1), (1, 1, 3), (3, 3, 3), (1, 3, 5)]:
        yield odd_3_wheel(*spikes).digraph, 3
    for D in oriented_3_dicritical_instances():
        yield D, 3
    for length in range(2, 8):
        yield directed_cycle(length), 2
    yield order_k_plus_1_example(4), 4
    yield order_k_plus_1_example(5), 5


def test_criterion_9_gallai_blocks():
    count = 0
    for D, k in dicritical_instances():
        assert verified(D, k)
        rep = check_gallai_blocks(D, k)
        assert rep.ok, rep.violations
        count += 1
    assert count >= 28


def test_criterion_9_gallai_forest_bound():
    rng = random.Random(18)
    for _ in range(200):
        D = random_oriented_gallai_forest(rng, rng.randint(1, 12))
        assert D.is_oriented() and is_gallai_forest(D)
        assert oriented_gallai_bound_check(D)
        assert 2 * D.m <= 3 * (D.n - 1)
