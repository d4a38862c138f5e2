"""Exact tools for dicolouring, dicritical digraphs and the potential method."""

from .bounds import (
    audit_bounds,
    family_sizes,
    lower_bound_o3,
    lower_bound_ok,
    upper_ratio,
)
from .constructions import (
    GadgetKind,
    GadgetSpec,
    LabelledDigraph,
    bidirected_complete,
    bidirected_cycle,
    bidirected_path,
    circulant_tournament,
    directed_cycle,
    g_family,
    gadget,
    generalized_knob,
    knob,
    knob_prime,
    o3,
    odd_3_wheel,
    order_k_plus_1_example,
    paley_11,
    transitive_tournament,
    triangle_join,
)
from .digraph import (
    Digraph,
    UndirectedGraph,
    converse,
    digon_graph,
    disjoint_union,
    dumps,
    induced,
    loads,
    read_digraph,
    underlying_graph,
    write_digraph,
)
from .errors import DicriticalError, InstanceTooLarge
from .matching import maximum_matching, pi
from .potential import classify_by_potential, min_potential_subset, potential, rho
from .solver import (
    Colouring,
    dichromatic_number,
    dicolour,
    extract_dicritical_subdigraph,
    is_acyclic,
    is_dicolouring,
    is_k_dicolourable,
    is_k_dicritical,
)
from .structure import (
    blocks,
    check_gallai_blocks,
    contract_3_thread,
    contract_colour_classes,
    find_threads,
    is_gallai_forest,
    recognize_bidirected_odd_cycle,
    recognize_odd_3_wheel,
)

__all__ = [
    "audit_bounds",
    "bidirected_complete",
    "bidirected_cycle",
    "bidirected_path",
    "blocks",
    "check_gallai_blocks",
    "circulant_tournament",
    "classify_by_potential",
    "Colouring",
    "contract_3_thread",
    "contract_colour_classes",
    "converse",
    "dichromatic_number",
    "dicolour",
    "DicriticalError",
    "digon_graph",
    "Digraph",
    "directed_cycle",
    "disjoint_union",
    "dumps",
    "extract_dicritical_subdigraph",
    "family_sizes",
    "find_threads",
    "g_family",
    "gadget",
    "GadgetKind",
    "GadgetSpec",
    "generalized_knob",
    "induced",
    "InstanceTooLarge",
    "is_acyclic",
    "is_dicolouring",
    "is_gallai_forest",
    "is_k_dicolourable",
    "is_k_dicritical",
    "knob",
    "knob_prime",
    "LabelledDigraph",
    "loads",
    "lower_bound_o3",
    "lower_bound_ok",
    "maximum_matching",
    "min_potential_subset",
    "o3",
    "odd_3_wheel",
    "order_k_plus_1_example",
    "paley_11",
    "pi",
    "potential",
    "read_digraph",
    "recognize_bidirected_odd_cycle",
    "recognize_odd_3_wheel",
    "rho",
    "transitive_tournament",
    "triangle_join",
    "underlying_graph",
    "UndirectedGraph",
    "upper_ratio",
    "write_digraph",
]
