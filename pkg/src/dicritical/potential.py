"""The potential ``rho_D(R) = 7|R| - 3 m(D[R]) - 2 pi(D[R])`` and the trichotomy audit.

For a 3-dicritical digraph the potential is 1 on bidirected odd cycles, -1 on
odd 3-wheels and at most -2 otherwise.  Integer arithmetic throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, bits, induced_arc_count, mask_of
from .errors import EmptyRange, InstanceTooLarge, VertexOutOfRange
from .matching import digon_matching_size
from .structure import recognize_bidirected_odd_cycle, recognize_odd_3_wheel

SUBSET_SWEEP_LIMIT = 22


@dataclass(frozen=True)
class PotentialValue:
    rho: int
    n_term: int
    m_term: int
    pi_term: int

    @classmethod
    def from_counts(cls, size: int, arcs: int, matching: int) -> PotentialValue:
        return cls(7 * size - 3 * arcs - 2 * matching, 7 * size, 3 * arcs, 2 * matching)


def rho(D: Digraph, R: Iterable[int] | None = None) -> PotentialValue:
    if R is None:
        members = list(D.vertices)
    else:
        members = sorted(set(R))
        for v in members:
            if not (isinstance(v, int) and 0 <= v < D.n):
                raise VertexOutOfRange(v, D.n)
    mask = mask_of(members)
    return PotentialValue.from_counts(
        len(members), induced_arc_count(D, members), digon_matching_size(D, mask)
    )


def potential(D: Digraph) -> int:
    return rho(D).rho


class CriticalClass(enum.Enum):
    BIDIRECTED_ODD_CYCLE = "BidirectedOddCycle"
    ODD_3_WHEEL = "Odd3Wheel"
    OTHER = "Other"


@dataclass(frozen=True)
class PotentialVerdict:
    cls: CriticalClass
    rho: int
    consistent: bool


def classify_by_potential(D: Digraph) -> PotentialVerdict:
    """Structural class and potential of a digraph the caller knows is 3-dicritical."""
    value = potential(D)
    if recognize_bidirected_odd_cycle(D):
        return PotentialVerdict(CriticalClass.BIDIRECTED_ODD_CYCLE, value, value == 1)
    if recognize_odd_3_wheel(D) is not None:
        return PotentialVerdict(CriticalClass.ODD_3_WHEEL, value, value == -1)
    return PotentialVerdict(CriticalClass.OTHER, value, value <= -2)


def min_potential_subset(D: Digraph, min_size: int) -> tuple[tuple[int, ...], PotentialValue]:
    """Proper subset R with ``min_size <= |R| <= n-1`` minimising ``rho_D(R)``.

    Ties go to the smaller set, then the lexicographically smaller one.  The
    sweep walks subsets in Gray-code order keeping ``m(D[R])`` incremental.
    """
    n = D.n
    if n > SUBSET_SWEEP_LIMIT:
        raise InstanceTooLarge(f"subset sweep limited to n <= {SUBSET_SWEEP_LIMIT}")
    lo = max(min_size, 0)
    if lo > n - 1:
        raise EmptyRange(f"no proper subset of size >= {min_size} in a {n}-vertex digraph")
    out, inn = D.out_masks, D.in_masks
    has_digons = not D.is_oriented()
    best_key = None
    best: tuple[tuple[int, ...], PotentialValue] | None = None
    S = 0
    arcs = 0
    for i in range(1, 1 << n):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        if S & bit:
            S ^= bit
            arcs -= (out[v] & S).bit_count() + (inn[v] & S).bit_count()
        else:
            arcs += (out[v] & S).bit_count() + (inn[v] & S).bit_count()
            S |= bit
        size = S.bit_count()
        if size < lo or size == n:
            continue
        partial = 7 * size - 3 * arcs
        # 2 pi(D[R]) <= |R|, so rho >= partial - size
        if best_key is not None and partial - size > best_key[0]:
            continue
        matching = digon_matching_size(D, S) if has_digons else 0
        value = partial - 2 * matching
        if best_key is not None and (value, size) > best_key[:2]:
            continue
        members = tuple(bits(S))
        key = (value, size, members)
        if best_key is None or key < best_key:
            best_key = key
            best = (members, PotentialValue.from_counts(size, arcs, matching))
    assert best is not None
    return best
