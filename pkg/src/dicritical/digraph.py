"""Immutable digraphs on dense integer vertices, plus the text interchange format.

Vertices are ``0..n-1``.  Adjacency is stored as per-vertex out/in bitmasks, so
arc membership is O(1) and set operations on neighbourhoods are single integer
operations; the dicolouring solver relies on this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import LoopArc, ParseError, VertexOutOfRange

Arc = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


class Digraph:
    """A loopless digraph without parallel arcs.

    ``collapsed`` records how many duplicate arcs were dropped while building
    the value; it is bookkeeping only and does not take part in equality.
    """

    __slots__ = ("_n", "_out", "_in", "_arcs", "collapsed")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        out = [0] * n
        inn = [0] * n
        seen = 0
        total = 0
        for u, v in arcs:
            total += 1
            for w in (u, v):
                if not (isinstance(w, int) and 0 <= w < n):
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise LoopArc(u)
            if not out[u] >> v & 1:
                out[u] |= 1 << v
                inn[v] |= 1 << u
                seen += 1
        self._n = n
        self._out = tuple(out)
        self._in = tuple(inn)
        self._arcs = None
        self.collapsed = total - seen

    @classmethod
    def from_masks(cls, out_masks: Sequence[int]) -> Digraph:
        """Build from trusted out-neighbourhood bitmasks (no validation)."""
        n = len(out_masks)
        inn = [0] * n
        for u, mask in enumerate(out_masks):
            for v in bits(mask):
                inn[v] |= 1 << u
        self = cls.__new__(cls)
        self._n = n
        self._out = tuple(out_masks)
        self._in = tuple(inn)
        self._arcs = None
        self.collapsed = 0
        return self

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return sum(o.bit_count() for o in self._out)

    @property
    def out_masks(self) -> tuple[int, ...]:
        return self._out

    @property
    def in_masks(self) -> tuple[int, ...]:
        return self._in

    @property
    def arcs(self) -> tuple[Arc, ...]:
        """All arcs, sorted lexicographically."""
        if self._arcs is None:
            self._arcs = tuple((u, v) for u in range(self._n) for v in bits(self._out[u]))
        return self._arcs

    @property
    def vertices(self) -> range:
        return range(self._n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def successors(self, v: int) -> list[int]:
        return list(bits(self._out[v]))

    def predecessors(self, v: int) -> list[int]:
        return list(bits(self._in[v]))

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self._in[v].bit_count()

    def degree(self, v: int) -> int:
        return self._out[v].bit_count() + self._in[v].bit_count()

    def digon_mask(self, v: int) -> int:
        return self._out[v] & self._in[v]

    def neighbour_mask(self, v: int) -> int:
        return self._out[v] | self._in[v]

    def digons(self) -> list[Arc]:
        """Digons ``[u, v]`` as pairs with ``u < v``."""
        return [(u, v) for u in range(self._n) for v in bits(self._out[u] & self._in[u]) if u < v]

    def is_oriented(self) -> bool:
        return not any(o & i for o, i in zip(self._out, self._in))

    def is_bidirected(self) -> bool:
        return self._out == self._in

    # -- derived digraphs ------------------------------------------------

    def without_arc(self, u: int, v: int) -> Digraph:
        out = list(self._out)
        out[u] &= ~(1 << v)
        return Digraph.from_masks(out)

    def with_arcs(self, arcs: Iterable[Arc]) -> Digraph:
        return Digraph(self._n, list(self.arcs) + list(arcs))

    def without_vertices(self, removed: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
        gone = set(removed)
        return induced(self, [v for v in range(self._n) if v not in gone])

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self._n, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, m={self.m})"


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple undirected graph; edges are stored as ``(u, v)`` with ``u < v``."""

    n: int
    edges: frozenset[Arc]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Arc]) -> UndirectedGraph:
        norm = set()
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(w, n)
            if u == v:
                raise LoopArc(u)
            norm.add((min(u, v), max(u, v)))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class DegreeProfile:
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]
    degree: tuple[int, ...]
    neighbours: tuple[int, ...]
    digon_degree: tuple[int, ...]


# -- operations -------------------------------------------------------------


def from_arc_list(n: int, arcs: Iterable[Arc]) -> Digraph:
    return Digraph(n, arcs)


def converse(D: Digraph) -> Digraph:
    return Digraph.from_masks(D.in_masks)


def _check_vertices(D: Digraph, R: Iterable[int]) -> list[int]:
    members = sorted(set(R))
    for v in members:
        if not (isinstance(v, int) and 0 <= v < D.n):
            raise VertexOutOfRange(v, D.n)
    return members


def induced(D: Digraph, R: Iterable[int]) -> tuple[Digraph, dict[int, int]]:
    """Subdigraph induced by ``R``, relabelled by ascending original id.

    Returns the digraph together with the old -> new label map.
    """
    members = _check_vertices(D, R)
    relabel = {v: i for i, v in enumerate(members)}
    sel = mask_of(members)
    out = []
    for v in members:
        new = 0
        for w in bits(D.out_masks[v] & sel):
            new |= 1 << relabel[w]
        out.append(new)
    return Digraph.from_masks(out), relabel


def induced_arc_count(D: Digraph, R: Iterable[int]) -> int:
    sel = mask_of(R)
    return sum((D.out_masks[v] & sel).bit_count() for v in bits(sel))


def digon_graph(D: Digraph) -> UndirectedGraph:
    return UndirectedGraph(D.n, frozenset(D.digons()))


def underlying_graph(D: Digraph) -> UndirectedGraph:
    return UndirectedGraph(D.n, frozenset((min(u, v), max(u, v)) for u, v in D.arcs))


def degree_profile(D: Digraph) -> DegreeProfile:
    outd = tuple(D.out_degree(v) for v in D.vertices)
    ind = tuple(D.in_degree(v) for v in D.vertices)
    nbrs = tuple(D.neighbour_mask(v).bit_count() for v in D.vertices)
    deg = tuple(a + b for a, b in zip(outd, ind))
    return DegreeProfile(outd, ind, deg, nbrs, tuple(d - k for d, k in zip(deg, nbrs)))


def disjoint_union(*parts: Digraph) -> Digraph:
    arcs: list[Arc] = []
    offset = 0
    for P in parts:
        arcs.extend((u + offset, v + offset) for u, v in P.arcs)
        offset += P.n
    return Digraph(offset, arcs)


def is_subdigraph(H: Digraph, D: Digraph) -> bool:
    """True iff ``H`` is a subdigraph of ``D`` under the identity labelling."""
    if H.n > D.n:
        return False
    return all(h & ~d == 0 for h, d in zip(H.out_masks, D.out_masks))


# -- text format ------------------------------------------------------------
#
#   n <N>
#   # comment
#   <u> <v>
#
# Writers put the header first, then comments, then arcs in sorted order.


def dumps(D: Digraph, comments: Iterable[str] = ()) -> str:
    lines = [f"n {D.n}"]
    lines.extend(f"# {c}" if c else "#" for c in comments)
    lines.extend(f"{u} {v}" for u, v in D.arcs)
    return "\n".join(lines) + "\n"


def loads(text: str) -> Digraph:
    n = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <N>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}") from None
    if n is None:
        raise ParseError("missing header 'n <N>'")
    try:
        return Digraph(n, arcs)
    except (LoopArc, VertexOutOfRange) as exc:
        raise ParseError(str(exc)) from exc


def read_digraph(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_digraph(D: Digraph, path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(D, comments))


def role_comments(roles: Mapping[str, int]) -> list[str]:
    return [f"role {name} {v}" for name, v in roles.items()]
