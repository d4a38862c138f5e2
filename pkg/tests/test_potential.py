import random

import pytest
from hypothesis import given, settings, strategies as st

from dicritical import (
    Digraph, bidirected_cycle, classify_by_potential, directed_cycle, disjoint_union, min_potential_subset,
    o3, odd_3_wheel, potential, rho,
)
from dicritical.constructions import GadgetKind, GadgetSpec, gadget
from dicritical.errors import EmptyRange, InstanceTooLarge, VertexOutOfRange
from dicritical.potential import CriticalClass

from oracles import brute_min_rho, brute_rho, random_digraph


def test_rho_examples():
    v = rho(bidirected_cycle(5))
    assert (v.rho, v.n_term, v.m_term, v.pi_term) == (1, 35, 30, 4)
    assert potential(odd_3_wheel(1, 1, 1).digraph) == -1
    assert potential(o3(12).digraph) == -6
    assert potential(gadget(GadgetSpec(GadgetKind.PURSE, (3,))).digraph) == 3
    with pytest.raises(VertexOutOfRange):
        rho(directed_cycle(3), [0, 7])


def test_classify_examples():
    v = classify_by_potential(bidirected_cycle(7))
    assert (v.cls, v.rho, v.consistent) == (CriticalClass.BIDIRECTED_ODD_CYCLE, 1, True)
    v = classify_by_potential(odd_3_wheel(1, 3, 1).digraph)
    assert (v.cls, v.rho, v.consistent) == (CriticalClass.ODD_3_WHEEL, -1, True)
    v = classify_by_potential(o3(14).digraph)
    assert (v.cls, v.rho, v.consistent) == (CriticalClass.OTHER, -7, True)


def test_classify_flags_inconsistency():
    # a directed 5-cycle is not 3-dicritical; its potential 20 is outside the "Other" range
    v = classify_by_potential(directed_cycle(5))
    assert v.cls is CriticalClass.OTHER and not v.consistent


def test_min_potential_subset_bidirected_c5():
    members, value = min_potential_subset(bidirected_cycle(5), 3)
    oracle = brute_min_rho(bidirected_cycle(5), 3)
    assert (value.rho, len(members), members) == oracle
    # four consecutive vertices beat three: 28 - 18 - 4 = 6 < 7
    assert value.rho == 6 and members == (0, 1, 2, 3)
    assert rho(bidirected_cycle(5), [0, 1, 2]).rho == 7


def test_min_potential_subset_other_examples():
    with pytest.raises(EmptyRange):
        min_potential_subset(directed_cycle(3), 3)
    members, value = min_potential_subset(odd_3_wheel(1, 1, 1).digraph, 3)
    assert value.rho >= 4
    with pytest.raises(InstanceTooLarge):
        min_potential_subset(directed_cycle(23), 3)


def test_min_potential_subset_matches_oracle():
    rng = random.Random(4)
    for _ in range(40):
        D = random_digraph(rng, rng.randint(3, 8), 0.6, digon_p=0.4)
        members, value = min_potential_subset(D, 2)
        assert (value.rho, len(members), members) == brute_min_rho(D, 2)


def test_rho_matches_oracle():
    rng = random.Random(9)
    for _ in range(200):
        D = random_digraph(rng, rng.randint(1, 10), 0.5, digon_p=0.5)
        R = rng.sample(range(D.n), rng.randint(0, D.n))
        assert rho(D, R).rho == brute_rho(D, R)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_disjoint_union_is_additive(seed):
    rng = random.Random(seed)
    A = random_digraph(rng, rng.randint(1, 7), 0.6, digon_p=0.5)
    B = random_digraph(rng, rng.randint(1, 7), 0.6, digon_p=0.5)
    assert potential(disjoint_union(A, B)) == potential(A) + potential(B)


def random_subdigraph(rng, D):
    keep = [v for v in D.vertices if rng.random() < 0.7] or [0]
    idx = {v: i for i, v in enumerate(keep)}
    arcs = [(idx[u], idx[v]) for u, v in D.arcs if u in idx and v in idx and rng.random() < 0.8]
    return keep, Digraph(len(keep), arcs)


def test_subdigraph_inequality_500_pairs():
    rng = random.Random(31)
    for _ in range(500):
        D = random_digraph(rng, rng.randint(1, 10), 0.6, digon_p=0.5)
        keep, H = random_subdigraph(rng, D)
        base = rho(D, keep).rho
        induced_m = sum(1 for u, v in D.arcs if u in keep and v in keep)
        bound = base + (3 if H.m < induced_m else 0)
        assert potential(H) >= bound
