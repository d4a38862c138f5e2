"""Generators for the digraph families and gadgets used around 3-dicritical digraphs.

Every generator that has distinguished vertices returns a
:class:`LabelledDigraph` whose ``roles`` name them (``base1``/``base2`` for
knobs, ``centre``/``rim1..3`` for odd 3-wheels, the letter names of each
gadget, ...).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .bounds import family_sizes
from .digraph import Arc, Digraph
from .errors import InstanceTooLarge, NotATournament, ParityError, SizeTooSmall, UnsupportedVariant

G_FAMILY_CEILING = 500


@dataclass(frozen=True)
class LabelledDigraph:
    digraph: Digraph
    roles: Mapping[str, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def m(self) -> int:
        return self.digraph.m


class _Builder:
    def __init__(self, n: int = 0):
        self.n = n
        self.arcs: list[Arc] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def arc(self, u: int, v: int) -> None:
        self.arcs.append((u, v))

    def digon(self, u: int, v: int) -> None:
        self.arcs.append((u, v))
        self.arcs.append((v, u))

    def path_between(self, a: int, b: int, length: int) -> list[int]:
        """Bidirected path a..b with ``length - 1`` fresh interior vertices."""
        if length == 0:
            if a != b:
                raise ValueError("a path of length 0 needs equal ends")
            return [a]
        path = [a] + [self.vertex() for _ in range(length - 1)] + [b]
        for u, v in zip(path, path[1:]):
            self.digon(u, v)
        return path

    def path_from(self, a: int, length: int) -> list[int]:
        """Bidirected path starting at ``a`` whose other vertices are all fresh."""
        path = [a] + [self.vertex() for _ in range(length)]
        for u, v in zip(path, path[1:]):
            self.digon(u, v)
        return path

    def glue(self, piece: LabelledDigraph, at: Mapping[str, int]) -> dict[int, int]:
        """Copy ``piece`` in, identifying the named roles with existing vertices."""
        fixed = {piece.roles[name]: v for name, v in at.items()}
        image = {u: fixed[u] if u in fixed else self.vertex() for u in piece.digraph.vertices}
        self.arcs.extend((image[u], image[v]) for u, v in piece.digraph.arcs)
        return image

    def build(self) -> Digraph:
        return Digraph(self.n, self.arcs)


def _need(n: int, least: int, what: str) -> None:
    if n < least:
        raise SizeTooSmall(f"{what} needs n >= {least}, got {n}")


# -- elementary families ---------------------------------------------------


def directed_cycle(n: int) -> Digraph:
    _need(n, 2, "directed cycle")
    return Digraph(n, [(v, (v + 1) % n) for v in range(n)])


def bidirected_cycle(n: int) -> Digraph:
    _need(n, 3, "bidirected cycle")
    arcs = [(v, (v + 1) % n) for v in range(n)]
    return Digraph(n, arcs + [(v, u) for u, v in arcs])


def bidirected_path(n: int) -> Digraph:
    """Bidirected path on ``n`` vertices ``0 - 1 - ... - n-1``."""
    _need(n, 1, "bidirected path")
    arcs = [(v, v + 1) for v in range(n - 1)]
    return Digraph(n, arcs + [(v, u) for u, v in arcs])


def bidirected_complete(n: int) -> Digraph:
    _need(n, 1, "bidirected complete graph")
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def transitive_tournament(n: int) -> Digraph:
    _need(n, 1, "transitive tournament")
    return Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def directed_path(n: int) -> Digraph:
    _need(n, 1, "directed path")
    return Digraph(n, [(v, v + 1) for v in range(n - 1)])


# -- knobs and O3 ------------------------------------------------------------

_K1_ARCS = [(0, 1), (2, 3), (3, 4), (4, 2), (2, 0), (3, 0), (4, 0), (1, 2), (1, 3), (1, 4)]
_K1P_ARCS = [(0, 1), (2, 3), (3, 4), (4, 5), (5, 2), (2, 0), (3, 0), (4, 0), (5, 0),
             (1, 2), (1, 3), (1, 4), (1, 5)]
_K_NAMES = {"x1": 0, "x2": 1, "y1": 2, "y2": 3, "y3": 4}


def knob(height: int) -> LabelledDigraph:
    """Knob of height ``height``: 2h+3 vertices, 5h+5 arcs, base ``base1 -> base2``.

    Height 1 is the 5-vertex tournament on x1, x2, y1, y2, y3.  Each further
    level adds a new base z1 z2 and the directed 3-cycles (z1, z2, x, z1) for
    both ends x of the previous base.
    """
    _need(height, 1, "knob height")
    b = _Builder(5)
    b.arcs.extend(_K1_ARCS)
    base = (0, 1)
    for _ in range(height - 1):
        z1, z2 = b.vertex(), b.vertex()
        b.arc(z1, z2)
        for x in base:
            b.arc(z2, x)
            b.arc(x, z1)
        base = (z1, z2)
    roles = dict(_K_NAMES)
    roles.update(base1=base[0], base2=base[1])
    return LabelledDigraph(b.build(), roles)


def knob_prime() -> LabelledDigraph:
    """The 6-vertex knob: the height-1 knob with its 3-cycle replaced by a 4-cycle."""
    roles = {"x1": 0, "x2": 1, "y1": 2, "y2": 3, "y3": 4, "y4": 5, "base1": 0, "base2": 1}
    return LabelledDigraph(Digraph(6, _K1P_ARCS), roles)


def generalized_knob(D: Digraph) -> LabelledDigraph:
    """D-knob: D plus base z1 -> z2 and arcs z2 -> u -> z1 for every vertex u of D."""
    z1, z2 = D.n, D.n + 1
    arcs = list(D.arcs) + [(z1, z2)]
    for u in D.vertices:
        arcs.append((z2, u))
        arcs.append((u, z1))
    return LabelledDigraph(Digraph(D.n + 2, arcs), {"base1": z1, "base2": z2, "z1": z1, "z2": z2})


def _knob_with_interior(size: int) -> LabelledDigraph:
    if size == 4:
        return knob_prime()
    if size < 3 or size % 2 == 0:
        raise ValueError(f"no knob has interior size {size}")
    return knob((size - 1) // 2)


def o3_interiors(n: int) -> tuple[int, int, int]:
    """Interior sizes of the three knobs of the O3 witness of order ``n``."""
    _need(n, 12, "O3 member")
    return (3, 3, n - 9) if n % 2 == 0 else (4, 3, n - 10)


def o3(n: int) -> LabelledDigraph:
    """3-dicritical oriented graph with n vertices and ceil(5n/2) arcs (n >= 12).

    A directed 3-cycle ``cycle0 -> cycle1 -> cycle2 -> cycle0`` with a knob glued
    on each arc.  Even n uses three height knobs, odd n replaces the first by
    the 6-vertex knob.
    """
    b = _Builder(3)
    cycle = [(0, 1), (1, 2), (2, 0)]
    b.arcs.extend(cycle)
    for (u, v), size in zip(cycle, o3_interiors(n)):
        b.glue(_knob_with_interior(size), {"base1": u, "base2": v})
    return LabelledDigraph(b.build(), {"cycle0": 0, "cycle1": 1, "cycle2": 2})


# -- odd 3-wheels ------------------------------------------------------------


def odd_3_wheel(l1: int, l2: int, l3: int) -> LabelledDigraph:
    """Centre 0 joined by bidirected odd paths to the rim 3-cycle 1 -> 2 -> 3 -> 1."""
    lengths = (l1, l2, l3)
    if any(l < 1 or l % 2 == 0 for l in lengths):
        raise ParityError(f"odd 3-wheel spikes must have odd length, got {lengths}")
    b = _Builder(4)
    b.arcs.extend([(1, 2), (2, 3), (3, 1)])
    for rim, length in zip((1, 2, 3), lengths):
        b.path_between(0, rim, length)
    return LabelledDigraph(b.build(), {"centre": 0, "rim1": 1, "rim2": 2, "rim3": 3})


# -- k-dicritical families ---------------------------------------------------


def _g(i: int, k: int, cache: dict) -> Digraph:
    key = (i, k)
    if key in cache:
        return cache[key]
    if k == 2:
        D = directed_cycle(i + 2)
    else:
        common = generalized_knob(_g(1, k - 1, cache))
        special = generalized_knob(_g(i, k - 1, cache))
        b = _Builder(k)
        tour = [(u, v) for u in range(k) for v in range(u + 1, k)]
        b.arcs.extend(tour)
        for idx, (u, v) in enumerate(tour):
            b.glue(special if idx == 0 else common, {"base1": u, "base2": v})
        D = b.build()
    cache[key] = D
    return D


def g_family(i: int, k: int, ceiling: int = G_FAMILY_CEILING) -> Digraph:
    """The k-dicritical oriented graph ``G^i_k``.

    ``G^i_2`` is the directed cycle of length i+2.  For k >= 3, take the
    transitive tournament on k vertices, glue a copy of the ``G^i_{k-1}``-knob
    on its first arc (0, 1) and a copy of the ``G^1_{k-1}``-knob on every other
    arc.
    """
    if i < 1 or k < 2:
        raise ValueError("g_family needs i >= 1 and k >= 2")
    predicted = family_sizes(i, k).n
    if predicted > ceiling:
        raise InstanceTooLarge(f"G^{i}_{k} would have {predicted} vertices (> {ceiling})")
    return _g(i, k, {})


def triangle_join(D1: Digraph, D2: Digraph) -> Digraph:
    """Disjoint union of D1 and D2 plus u0 with u0 -> D1 -> D2 -> u0 (all arcs).

    D1 keeps labels 0..n1-1, D2 is shifted by n1, and u0 is the last vertex.
    """
    n1, n2 = D1.n, D2.n
    u0 = n1 + n2
    arcs = list(D1.arcs) + [(u + n1, v + n1) for u, v in D2.arcs]
    arcs += [(u0, a) for a in range(n1)]
    arcs += [(a, n1 + b) for a in range(n1) for b in range(n2)]
    arcs += [(n1 + b, u0) for b in range(n2)]
    return Digraph(u0 + 1, arcs)


def circulant_tournament(n: int, residues: Iterable[int]) -> Digraph:
    """Arc i -> j iff (j - i) mod n lies in ``residues``."""
    res = {r % n for r in residues} if n else set()
    neg = {(-r) % n for r in res}
    if n < 1 or 0 in res or res & neg or (res | neg) != set(range(1, n)):
        raise NotATournament(f"residues {sorted(res)} do not orient every pair mod {n} exactly once")
    return Digraph(n, [(i, (i + r) % n) for i in range(n) for r in sorted(res)])


PALEY_11_RESIDUES = (1, 3, 4, 5, 9)


def paley_11() -> Digraph:
    return circulant_tournament(11, PALEY_11_RESIDUES)


def order_k_plus_1_example(k: int) -> Digraph:
    """Directed 3-cycle on 0,1,2 plus a bidirected K_{k-2}, joined by all digons."""
    if k < 3:
        raise SizeTooSmall(f"the order k+1 example needs k >= 3, got {k}")
    b = _Builder(k + 1)
    b.arcs.extend([(0, 1), (1, 2), (2, 0)])
    clique = range(3, k + 1)
    for u in clique:
        for v in range(k + 1):
            if v != u and (v < 3 or v > u):
                b.digon(u, v)
    return b.build()


# -- gadgets -------------------------------------------------------------------


class GadgetKind(enum.Enum):
    PURSE = "purse"
    HANDCUFF = "handcuff"
    BASKET = "basket"
    BAG = "bag"
    TURTLE = "turtle"
    APLUS = "aplus"
    BPLUS = "bplus"


# expected parity of each path length ("odd"/"even"), in order
_PARITIES = {
    GadgetKind.PURSE: ("odd",),
    GadgetKind.HANDCUFF: ("odd", "odd"),
    GadgetKind.BASKET: ("odd", "odd"),
    GadgetKind.BAG: ("odd", "odd"),
    GadgetKind.TURTLE: ("odd", "even", "even", "even"),
    GadgetKind.APLUS: ("odd",),
    GadgetKind.BPLUS: ("even", "even", "even"),
}


@dataclass(frozen=True)
class GadgetSpec:
    """Which gadget to build and the lengths of its bidirected paths.

    Path order per kind:
      purse    [y1-y2]
      handcuff [z-z', x-x']
      basket   [y0-y1, y0-y2]
      bag      [y1-y2, y3-y4]
      turtle   [z1-z2, z2-u2, z3-u3, z4-u4]
      aplus    [y1-y2]
      bplus    [y1-c1, y2-c2, y3-c3]
    """

    kind: GadgetKind
    lengths: tuple[int, ...]
    disjoint: bool = True

    def __post_init__(self):
        object.__setattr__(self, "kind", GadgetKind(self.kind))
        object.__setattr__(self, "lengths", tuple(self.lengths))

    def validate(self) -> None:
        if not self.disjoint:
            raise UnsupportedVariant("only the disjoint-path variants are generated")
        parities = _PARITIES[self.kind]
        if len(self.lengths) != len(parities):
            raise ValueError(f"{self.kind.value} takes {len(parities)} path lengths")
        for length, parity in zip(self.lengths, parities):
            if length < 0 or (length % 2 == 1) != (parity == "odd"):
                raise ParityError(f"{self.kind.value}: path length {length} must be {parity}")


def _named(b: _Builder, names: Sequence[str]) -> dict[str, int]:
    return {name: b.vertex() for name in names}


def _purse(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["x", "y", "z", "y1", "y2"])
    x, y, z, y1, y2 = r.values()
    b.arcs.extend([(x, y), (z, y), (y, y1), (y, y2), (y1, x), (y1, z), (y2, x), (y2, z)])
    b.path_between(y1, y2, L[0])
    return LabelledDigraph(b.build(), r)


def _handcuff(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["x", "x'", "y", "z", "z'"])
    x, xp, y, z, zp = r.values()
    b.arcs.extend([(x, y), (xp, y), (y, z), (y, zp), (zp, xp), (z, xp), (zp, x)])
    b.path_between(z, zp, L[0])
    b.path_between(x, xp, L[1])
    return LabelledDigraph(b.build(), r)


def _basket(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["x1", "x2", "y", "y0", "y1", "y2"])
    x1, x2, y, y0, y1, y2 = r.values()
    b.arcs.extend([(x1, y), (x2, y), (y, y0), (y, y1), (y, y2), (y1, x1), (y2, x2),
                   (y0, x1), (y0, x2)])
    b.path_between(y0, y1, L[0])
    b.path_between(y0, y2, L[1])
    return LabelledDigraph(b.build(), r)


def _bag(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["y", "x1", "x2", "y1", "y2", "y3", "y4"])
    y, x1, x2, y1, y2, y3, y4 = r.values()
    b.arcs.extend([(x1, y), (x2, y), (y, y1), (y, y2), (y, y3), (y, y4),
                   (y1, x1), (y2, x1), (y3, x2), (y4, x2)])
    b.path_between(y1, y2, L[0])
    b.path_between(y3, y4, L[1])
    return LabelledDigraph(b.build(), r)


def _turtle(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["y", "x1", "x2", "z1", "z2", "z3", "z4"])
    y, x1, x2, z1, z2, z3, z4 = r.values()
    b.arcs.extend([(x1, y), (x2, y), (y, z1), (y, z2), (y, z3), (y, z4),
                   (z2, x2), (z3, x2), (z4, x2), (z1, x1), (z2, x1)])
    b.path_between(z1, z2, L[0])
    us = [b.path_from(z, length)[-1] for z, length in zip((z2, z3, z4), L[1:])]
    u2, u3, u4 = us
    b.arcs.extend([(u2, u3), (u3, u4), (u4, u2)])
    r.update(u2=u2, u3=u3, u4=u4)
    return LabelledDigraph(b.build(), r)


def _aplus(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["x", "y", "z", "y1", "y2"])
    x, y, z, y1, y2 = r.values()
    b.arcs.extend([(x, y), (z, y), (y, y1), (y, y2), (y1, z), (y2, z)])
    b.path_between(y1, y2, L[0])
    return LabelledDigraph(b.build(), r)


def _bplus(L: Sequence[int]) -> LabelledDigraph:
    b = _Builder()
    r = _named(b, ["x", "y", "z", "y1", "y2", "y3"])
    x, y, z, y1, y2, y3 = r.values()
    b.arcs.extend([(x, y), (z, y), (y, y1), (y, y2), (y, y3), (y1, z), (y2, z), (y3, z)])
    cs = [b.path_from(yi, length)[-1] for yi, length in zip((y1, y2, y3), L)]
    c1, c2, c3 = cs
    b.arcs.extend([(c1, c2), (c2, c3), (c3, c1)])
    r.update(c1=c1, c2=c2, c3=c3)
    return LabelledDigraph(b.build(), r)


_GADGETS = {
    GadgetKind.PURSE: _purse,
    GadgetKind.HANDCUFF: _handcuff,
    GadgetKind.BASKET: _basket,
    GadgetKind.BAG: _bag,
    GadgetKind.TURTLE: _turtle,
    GadgetKind.APLUS: _aplus,
    GadgetKind.BPLUS: _bplus,
}


def gadget(spec: GadgetSpec) -> LabelledDigraph:
    spec.validate()
    return _GADGETS[spec.kind](spec.lengths)


def expected_gadget_size(spec: GadgetSpec) -> tuple[int, int]:
    """Closed-form (n, m) of the disjoint-path gadget."""
    L = spec.lengths
    s = sum(L)
    kind = spec.kind
    if kind is GadgetKind.PURSE:
        return 5 + L[0] - 1, 8 + 2 * L[0]
    if kind is GadgetKind.HANDCUFF:
        return 5 + s - 2, 7 + 2 * s
    if kind is GadgetKind.BASKET:
        return 6 + s - 2, 9 + 2 * s
    if kind is GadgetKind.BAG:
        return 7 + s - 2, 10 + 2 * s
    if kind is GadgetKind.TURTLE:
        return 7 + s - 1, 11 + 3 + 2 * s
    if kind is GadgetKind.APLUS:
        return 5 + L[0] - 1, 6 + 2 * L[0]
    if kind is GadgetKind.BPLUS:
        return 6 + s, 8 + 3 + 2 * s
    raise AssertionError(kind)

