"""Exact k-dicolouring search, dichromatic number and dicriticality.

The search branches on vertices in descending-degree order and assigns colours
``1..k``.  A branch dies as soon as the new vertex closes a directed cycle
inside its colour class; since the class was acyclic before, any new cycle
passes through the new vertex, so one reachability sweep inside the class
suffices.  Colour symmetry is broken by only opening colour ``c + 1`` once
colour ``c`` is in use.

Exceeding the node budget raises :class:`InstanceTooLarge`; the search never
returns an unproven answer.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .digraph import Arc, Digraph, bits, induced, mask_of
from .errors import ChiTooSmall, InstanceTooLarge

DEFAULT_NODE_BUDGET = 10**8
TOURNAMENT_SWEEP_LIMIT = 7
EXHAUSTIVE_ORACLE_LIMIT = 8


@dataclass(frozen=True)
class Colouring:
    """Colour of every vertex, colours in ``1..k``."""

    assignment: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]


@dataclass
class DicriticalityReport:
    k: int
    chi: int
    is_dicritical: bool
    witness_colourings: dict[Arc, Colouring] = field(default_factory=dict)
    failure_arc: Arc | None = None
    isolated_vertices: tuple[int, ...] = ()


def _acyclic_mask(out: tuple[int, ...], inn: tuple[int, ...], S: int) -> bool:
    # Kahn-style: peel vertices with no in-neighbour left in S
    remaining = S
    changed = True
    while remaining and changed:
        changed = False
        for v in bits(remaining):
            if not inn[v] & remaining:
                remaining &= ~(1 << v)
                changed = True
    return remaining == 0


def is_acyclic(D: Digraph, S: Iterable[int] | None = None) -> bool:
    """True iff ``D[S]`` has no directed cycle (digons count as 2-cycles)."""
    mask = (1 << D.n) - 1 if S is None else mask_of(S)
    return _acyclic_mask(D.out_masks, D.in_masks, mask)


def is_dicolouring(D: Digraph, colouring: Colouring | Mapping[int, int] | Iterable[int]) -> bool:
    if isinstance(colouring, Colouring):
        assignment = colouring.assignment
    elif isinstance(colouring, Mapping):
        assignment = tuple(colouring[v] for v in range(D.n))
    else:
        assignment = tuple(colouring)
    if len(assignment) != D.n:
        return False
    classes: dict[int, int] = {}
    for v, c in enumerate(assignment):
        classes[c] = classes.get(c, 0) | 1 << v
    return all(_acyclic_mask(D.out_masks, D.in_masks, S) for S in classes.values())


def branching_order(D: Digraph) -> list[int]:
    return sorted(D.vertices, key=lambda v: (-D.degree(v), v))


class _Search:
    def __init__(self, D: Digraph, k: int, budget: int):
        self.out = D.out_masks
        self.inn = D.in_masks
        self.k = k
        self.budget = budget
        self.nodes = 0

    def closes_cycle(self, v: int, S: int) -> bool:
        target = self.inn[v] & S
        if not target:
            return False
        out = self.out
        reach = frontier = out[v] & S
        while frontier:
            if reach & target:
                return True
            new = 0
            for u in bits(frontier):
                new |= out[u]
            frontier = new & S & ~reach
            reach |= frontier
        return bool(reach & target)

    def run(self, order: list[int], fixed: Mapping[int, int]) -> list[int] | None:
        n = len(self.out)
        colour = [0] * n
        classes = [0] * (self.k + 1)
        symmetric = not fixed
        k = self.k

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            if v in fixed:
                choices: Iterable[int] = (fixed[v],)
            elif symmetric:
                choices = range(1, min(k, used + 1) + 1)
            else:
                choices = range(1, k + 1)
            bit = 1 << v
            for c in choices:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise InstanceTooLarge(f"dicolouring search exceeded {self.budget} nodes")
                if self.closes_cycle(v, classes[c] | bit):
                    continue
                classes[c] |= bit
                colour[v] = c
                if place(i + 1, max(used, c)):
                    return True
                classes[c] &= ~bit
            colour[v] = 0
            return False

        return colour if place(0, 0) else None


def is_k_dicolourable(
    D: Digraph,
    k: int,
    precoloured: Mapping[int, int] | None = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> Colouring | None:
    """A k-dicolouring of ``D`` extending ``precoloured``, or None if none exists."""
    if k < 1:
        raise ValueError("k must be at least 1")
    fixed = dict(precoloured or {})
    for v, c in fixed.items():
        if not 0 <= v < D.n or not 1 <= c <= k:
            raise ValueError(f"invalid precolouring {v} -> {c}")
    if D.n == 0:
        return Colouring((), k)
    order = [v for v in branching_order(D) if v in fixed] + [
        v for v in branching_order(D) if v not in fixed
    ]
    found = _Search(D, k, budget).run(order, fixed)
    return None if found is None else Colouring(tuple(found), k)


def dicolour(D: Digraph, budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, Colouring]:
    """Dichromatic number together with an optimal dicolouring."""
    if D.n == 0:
        return 0, Colouring((), 0)
    for k in range(1, D.n + 1):
        found = is_k_dicolourable(D, k, budget=budget)
        if found is not None:
            return k, found
    raise AssertionError("every digraph is n-dicolourable")


def dichromatic_number(D: Digraph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return dicolour(D, budget)[0]


def _deletion_witness(args) -> Colouring | None:
    D, arc, k, budget = args
    return is_k_dicolourable(D.without_arc(*arc), k - 1, budget=budget)


def is_k_dicritical(
    D: Digraph, k: int, budget: int = DEFAULT_NODE_BUDGET, workers: int = 1
) -> DicriticalityReport:
    """Decide k-dicriticality.

    Monotonicity reduces proper subdigraphs to single-arc deletions, except
    that an isolated vertex can be deleted without lowering the dichromatic
    number; such vertices are reported and make the answer negative.
    """
    if k < 2:
        raise ValueError("dicriticality is checked for k >= 2")
    chi = dichromatic_number(D, budget)
    isolated = tuple(v for v in D.vertices if not D.neighbour_mask(v))
    report = DicriticalityReport(k=k, chi=chi, is_dicritical=False, isolated_vertices=isolated)
    if chi != k or isolated:
        return report
    jobs = [(D, a, k, budget) for a in D.arcs]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_deletion_witness, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
            results = list(results)
    else:
        results = map(_deletion_witness, jobs)
    for arc, witness in zip(D.arcs, results):
        if witness is None:
            report.failure_arc = arc
            return report
        report.witness_colourings[arc] = witness
    report.is_dicritical = True
    return report


def extract_dicritical_subdigraph(
    D: Digraph, k: int, budget: int = DEFAULT_NODE_BUDGET
) -> Digraph:
    """Greedily delete arcs (lexicographic order), then isolated vertices.

    One pass suffices: once deleting an arc would make the digraph
    ``(k-1)``-dicolourable, deleting further arcs keeps it so.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if is_k_dicolourable(D, k - 1, budget=budget) is not None:
        raise ChiTooSmall(f"dichromatic number is below {k}")
    current = D
    for arc in D.arcs:
        candidate = current.without_arc(*arc)
        if is_k_dicolourable(candidate, k - 1, budget=budget) is None:
            current = candidate
    keep = [v for v in current.vertices if current.neighbour_mask(v)]
    return induced(current, keep)[0]


@dataclass(frozen=True)
class SweepSummary:
    n: int
    visited: int
    satisfied: int
    first_failure: Digraph | None = None


def labelled_tournaments(n: int):
    """Yield every labelled tournament on ``n`` vertices exactly once.

    Bit ``t`` of the counter orients the ``t``-th pair ``i < j`` (in
    lexicographic order) as ``j -> i`` when set and ``i -> j`` otherwise.
    """
    if n > TOURNAMENT_SWEEP_LIMIT:
        raise InstanceTooLarge(f"labelled tournament sweep limited to n <= {TOURNAMENT_SWEEP_LIMIT}")
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        out = [0] * n
        for t, (i, j) in enumerate(pairs):
            if code >> t & 1:
                out[j] |= 1 << i
            else:
                out[i] |= 1 << j
        yield Digraph.from_masks(out)


def enumerate_labelled_tournaments(n: int, visitor: Callable[[Digraph], bool]) -> SweepSummary:
    visited = satisfied = 0
    first_failure = None
    for T in labelled_tournaments(n):
        visited += 1
        if visitor(T):
            satisfied += 1
        elif first_failure is None:
            first_failure = T
    return SweepSummary(n, visited, satisfied, first_failure)


def exhaustive_dicolouring(D: Digraph, k: int) -> Colouring | None:
    """Oracle: try every assignment in ``[k]^n`` (small ``n`` only)."""
    if D.n > EXHAUSTIVE_ORACLE_LIMIT:
        raise InstanceTooLarge(f"exhaustive oracle limited to n <= {EXHAUSTIVE_ORACLE_LIMIT}")
    for assignment in itertools.product(range(1, k + 1), repeat=D.n):
        if is_dicolouring(D, assignment):
            return Colouring(assignment, k)
    return None


def exhaustive_dichromatic_number(D: Digraph) -> int:
    for k in range(0 if D.n == 0 else 1, D.n + 1):
        if k == 0 and D.n == 0:
            return 0
        if exhaustive_dicolouring(D, k) is not None:
            return k
    raise AssertionError("unreachable")
