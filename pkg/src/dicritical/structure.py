"""Structural recognizers and contractions for dicritical digraphs.

Nothing here calls the dicolouring solver, so these checks are cheap enough
to run inside batch audits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .digraph import Digraph, UndirectedGraph, bits, induced, underlying_graph
from .errors import InvalidColouring, NotAThread, NotGallaiForest, RNotProper, VertexOutOfRange
from .solver import Colouring, is_acyclic


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(G: UndirectedGraph) -> BlockDecomposition:
    """Maximal non-separable subgraphs (isolated vertices are singleton blocks)."""
    n = G.n
    adj = [sorted(s) for s in G.adjacency()]
    disc = [-1] * n
    low = [0] * n
    clock = 0
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not adj[root]:
            found.append(frozenset((root,)))
            continue
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                comp: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (u, v):
                        break
                found.append(frozenset(comp))
                if u != root:
                    cuts.add(u)
        if root_children >= 2:
            cuts.add(root)
    return BlockDecomposition(tuple(found), frozenset(cuts))


# -- block classification -----------------------------------------------------

VERTEX = "vertex"
ARC = "arc"
DIRECTED_CYCLE = "directed_cycle"
BIDIRECTED_ODD_CYCLE = "bidirected_odd_cycle"
BIDIRECTED_COMPLETE = "bidirected_complete"
OTHER = "other"

GALLAI_ALLOWED = frozenset({VERTEX, ARC, DIRECTED_CYCLE, BIDIRECTED_ODD_CYCLE, BIDIRECTED_COMPLETE})


def classify_block(D: Digraph, vertices: Iterable[int]) -> str:
    H = induced(D, vertices)[0]
    n, m = H.n, H.m
    if n == 1:
        return VERTEX
    if n == 2 and m == 1:
        return ARC
    if n >= 3 and m == n and all(H.out_degree(v) == 1 and H.in_degree(v) == 1 for v in H.vertices):
        # a block with all in/out-degrees 1 is connected, hence one directed cycle
        return DIRECTED_CYCLE
    if recognize_bidirected_odd_cycle(H):
        return BIDIRECTED_ODD_CYCLE
    if m == n * (n - 1):
        return BIDIRECTED_COMPLETE
    return OTHER


@dataclass
class GallaiBlockReport:
    k: int
    low_degree: tuple[int, ...]
    blocks: list[tuple[tuple[int, ...], str]] = field(default_factory=list)

    @property
    def violations(self) -> list[tuple[tuple[int, ...], str]]:
        return [(b, c) for b, c in self.blocks if c not in GALLAI_ALLOWED]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_gallai_blocks(D: Digraph, k: int) -> GallaiBlockReport:
    """Classify the blocks of ``D[S]``, S the vertices of degree ``2(k-1)``."""
    S = [v for v in D.vertices if D.degree(v) == 2 * (k - 1)]
    H, relabel = induced(D, S)
    back = {new: old for old, new in relabel.items()}
    rep = GallaiBlockReport(k=k, low_degree=tuple(S))
    for block in blocks(underlying_graph(H)).blocks:
        original = tuple(sorted(back[v] for v in block))
        rep.blocks.append((original, classify_block(D, original)))
    rep.blocks.sort()
    return rep


def is_gallai_forest(D: Digraph) -> bool:
    """Every block is an arc or a directed cycle of length at least 3.

    Directed cycles are oriented graphs here, so a digon block disqualifies.
    """
    for block in blocks(underlying_graph(D)).blocks:
        if classify_block(D, block) not in (VERTEX, ARC, DIRECTED_CYCLE):
            return False
    return True


def oriented_gallai_bound_check(D: Digraph) -> bool:
    """``2 m <= 3 (n - 1)`` for an oriented Gallai forest with at least one vertex."""
    if D.n == 0 or not D.is_oriented() or not is_gallai_forest(D):
        raise NotGallaiForest("input is not a non-empty oriented Gallai forest")
    return 2 * D.m <= 3 * (D.n - 1)


# -- recognizers -----------------------------------------------------------------


def _digon_connected(D: Digraph) -> bool:
    if D.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= D.digon_mask(v)
        frontier = new & ~seen
        seen |= frontier
    return seen == (1 << D.n) - 1


def recognize_bidirected_odd_cycle(D: Digraph) -> bool:
    n = D.n
    if n < 3 or n % 2 == 0 or not D.is_bidirected():
        return False
    if any(D.digon_mask(v).bit_count() != 2 for v in D.vertices):
        return False
    return _digon_connected(D)


@dataclass(frozen=True)
class OddWheel:
    centre: int
    rim: tuple[int, int, int]
    spikes: tuple[tuple[int, ...], ...]


def recognize_odd_3_wheel(D: Digraph) -> OddWheel | None:
    """Decompose ``D`` as an odd 3-wheel, or return None.

    ``rim`` follows the directed 3-cycle starting from its smallest vertex and
    ``spikes[i]`` runs from the centre to ``rim[i]``.
    """
    n = D.n
    if n < 4 or D.m != 2 * (n - 1) + 3:
        return None
    simple = [(u, v) for u, v in D.arcs if not D.has_arc(v, u)]
    if len(simple) != 3:
        return None
    succ = dict(simple)
    if len(succ) != 3:
        return None
    start = min(succ)
    rim = [start]
    while len(rim) < 3:
        nxt = succ.get(rim[-1])
        if nxt is None or nxt in rim:
            return None
        rim.append(nxt)
    if succ.get(rim[-1]) != start:
        return None
    centres = [v for v in D.vertices if D.digon_mask(v).bit_count() == 3]
    if len(centres) != 1:
        return None
    c = centres[0]
    rim_set = set(rim)
    spikes = {}
    covered = {c}
    for first in bits(D.digon_mask(c)):
        prev, cur = c, first
        path = [c, first]
        while cur not in rim_set:
            nbrs = [w for w in bits(D.digon_mask(cur)) if w != prev]
            if len(nbrs) != 1 or nbrs[0] in path:
                return None
            prev, cur = cur, nbrs[0]
            path.append(cur)
        if D.digon_mask(cur).bit_count() != 1 or cur in spikes or len(path) % 2 == 1:
            return None
        if covered.intersection(path[1:]):
            return None
        covered.update(path)
        spikes[cur] = tuple(path)
    if len(covered) != n or set(spikes) != rim_set:
        return None
    return OddWheel(c, tuple(rim), tuple(spikes[r] for r in rim))


# -- threads -----------------------------------------------------------------


def find_threads(D: Digraph, k: int) -> list[tuple[int, ...]]:
    """All bidirected paths of length ``k`` whose internal vertices have degree 4.

    Each path is reported once, oriented so its first vertex is the smaller end.
    """
    if k not in (2, 3):
        raise ValueError("threads are searched for k in {2, 3}")
    found = []

    def grow(path: list[int]) -> None:
        if len(path) == k + 1:
            if path[0] < path[-1]:
                found.append(tuple(path))
            return
        last = path[-1]
        if len(path) > 1 and D.degree(last) != 4:
            return
        for w in bits(D.digon_mask(last)):
            if w not in path:
                path.append(w)
                grow(path)
                path.pop()

    for v in D.vertices:
        grow([v])
    return sorted(found)


@dataclass(frozen=True)
class ContractionResult:
    digraph: Digraph
    merged_map: Mapping[int, int]
    collapsed_arc_count: int
    loops_removed: int = 0


def is_thread(D: Digraph, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path) or any(not 0 <= v < D.n for v in path):
        return False
    if any(not (D.has_arc(u, v) and D.has_arc(v, u)) for u, v in zip(path, path[1:])):
        return False
    return all(D.degree(v) == 4 for v in path[1:-1])


def contract_3_thread(D: Digraph, thread: Sequence[int]) -> ContractionResult:
    """Replace the 3-thread [w, x, y, z] by the digon [w, z].

    Surviving vertices keep their relative order; ``merged_map`` sends each to
    its new label and sends x to w's label and y to z's label.
    """
    thread = tuple(thread)
    if len(thread) != 4 or not is_thread(D, thread):
        raise NotAThread(f"{thread} is not a 3-thread")
    w, x, y, z = thread
    H, relabel = D.without_vertices((x, y))
    nw, nz = relabel[w], relabel[z]
    already = int(H.has_arc(nw, nz)) + int(H.has_arc(nz, nw))
    out = list(H.out_masks)
    out[nw] |= 1 << nz
    out[nz] |= 1 << nw
    mapping = dict(relabel)
    mapping[x], mapping[y] = nw, nz
    return ContractionResult(Digraph.from_masks(out), mapping, already)


def contract_colour_classes(
    D: Digraph, R: Iterable[int], phi: Mapping[int, int] | Colouring
) -> ContractionResult:
    """Contract the colour classes of a 2-dicolouring of ``D[R]`` into x1, x2.

    ``phi`` maps vertices of R to colours 1/2; a :class:`Colouring` is read in
    the relabelled order of ``D[R]`` (ascending original ids).  The vertices
    outside R keep their relative order and x1, x2 get the two highest labels.
    """
    members = sorted(set(R))
    for v in members:
        if not (isinstance(v, int) and 0 <= v < D.n):
            raise VertexOutOfRange(v, D.n)
    if len(members) == D.n:
        raise RNotProper("R must be a proper subset of V(D)")
    if isinstance(phi, Colouring):
        if len(phi.assignment) != len(members):
            raise InvalidColouring("colouring length does not match |R|")
        colour = dict(zip(members, phi.assignment))
    else:
        colour = dict(phi)
    if set(colour) != set(members):
        raise InvalidColouring("colouring must be defined exactly on R")
    if any(c not in (1, 2) for c in colour.values()):
        raise InvalidColouring("colours must be 1 or 2")
    for c in (1, 2):
        if not is_acyclic(D, [v for v in members if colour[v] == c]):
            raise InvalidColouring(f"colour class {c} contains a directed cycle")

    rest = [v for v in D.vertices if v not in colour]
    x1, x2 = len(rest), len(rest) + 1
    f = {v: i for i, v in enumerate(rest)}
    for v, c in colour.items():
        f[v] = x1 if c == 1 else x2
    arcs = set()
    loops = collapsed = 0
    for u, v in D.arcs:
        a = (f[u], f[v])
        if a[0] == a[1]:
            loops += 1
        elif a in arcs:
            collapsed += 1
        else:
            arcs.add(a)
    for a in ((x1, x2), (x2, x1)):
        if a in arcs:
            collapsed += 1
        arcs.add(a)
    return ContractionResult(Digraph(x2 + 1, arcs), f, collapsed, loops)


# -- degree conditions ---------------------------------------------------------------


def min_degree_violations(D: Digraph, k: int) -> list[int]:
    """Vertices with in- or out-degree below ``k - 1``."""
    return [v for v in D.vertices if D.out_degree(v) < k - 1 or D.in_degree(v) < k - 1]


def single_simple_neighbour_vertices(D: Digraph) -> list[int]:
    """Vertices with exactly one neighbour not joined to them by a digon."""
    return [
        v for v in D.vertices
        if (D.neighbour_mask(v) & ~D.digon_mask(v)).bit_count() == 1
    ]


def digon_graph_is_forest(D: Digraph) -> bool:
    parent = list(range(D.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in D.digons():
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def digon_forest_check(D: Digraph) -> bool:
    """Digon graph is a forest unless ``D`` is a bidirected odd cycle."""
    return recognize_bidirected_odd_cycle(D) or digon_graph_is_forest(D)

