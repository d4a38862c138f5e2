"""Maximum cardinality matching in general graphs.

The potential needs ``pi(D[R])``, the size of a maximum matching of the digon
graph.  The digon graph is a forest for most digraphs of interest, but the
audit path must not assume that, so the main routine is Edmonds' blossom
algorithm.  ``exhaustive_matching`` enumerates every matching and is kept as an
independent oracle for small graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, UndirectedGraph, bits, digon_graph, mask_of
from .errors import VertexOutOfRange

EXHAUSTIVE_EDGE_LIMIT = 16


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int], ...]


def _blossom(n: int, adj: list[list[int]]) -> list[int]:
    match = [-1] * n

    # greedy start; the search below only needs to find augmenting paths
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def find_augmenting(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = in_blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    in_blossom = [False] * n
                    mark(v, b, to, in_blossom)
                    mark(to, b, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return _augment(to, parent)
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    def _augment(v: int, parent: list[int]) -> int:
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v] = pv
            match[pv] = v
            v = nxt
        return 1

    for v in range(n):
        if match[v] == -1 and adj[v]:
            find_augmenting(v)
    return match


def maximum_matching(G: UndirectedGraph) -> MatchingResult:
    adj = [sorted(s) for s in G.adjacency()]
    match = _blossom(G.n, adj)
    edges = tuple((v, w) for v, w in enumerate(match) if w != -1 and v < w)
    return MatchingResult(len(edges), edges)


def exhaustive_matching(G: UndirectedGraph, limit: int = EXHAUSTIVE_EDGE_LIMIT) -> MatchingResult:
    """Best matching by enumerating all subsets of pairwise disjoint edges."""
    if G.m > limit:
        raise ValueError(f"exhaustive matching limited to {limit} edges, got {G.m}")
    edges = sorted(G.edges)
    best: list[tuple[int, int]] = []

    def extend(i: int, used: int, chosen: list[tuple[int, int]]) -> None:
        nonlocal best
        if len(chosen) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            best = list(chosen)
            return
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            chosen.append((u, v))
            extend(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()
        extend(i + 1, used, chosen)

    extend(0, 0, [])
    return MatchingResult(len(best), tuple(best))


def is_matching(G: UndirectedGraph, edges: Iterable[tuple[int, int]]) -> bool:
    used: set[int] = set()
    for u, v in edges:
        if not G.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def digon_matching_size(D: Digraph, R_mask: int) -> int:
    """``pi(D[R])`` for ``R`` given as a bitmask, without relabelling."""
    members = [v for v in bits(R_mask) if D.digon_mask(v) & R_mask]
    if not members:
        return 0
    index = {v: i for i, v in enumerate(members)}
    adj = [[index[w] for w in bits(D.digon_mask(v) & R_mask)] for v in members]
    match = _blossom(len(members), adj)
    return sum(1 for w in match if w != -1) // 2


def pi(D: Digraph, R: Iterable[int] | None = None) -> int:
    if R is None:
        return maximum_matching(digon_graph(D)).size
    R = list(R)
    for v in R:
        if not (isinstance(v, int) and 0 <= v < D.n):
            raise VertexOutOfRange(v, D.n)
    return digon_matching_size(D, mask_of(R))
