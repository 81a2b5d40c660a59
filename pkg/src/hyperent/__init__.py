"""Entanglement of hypergraph states from Hamming weights of subhypergraphs."""

from .entropy import (
    EntropicProfile,
    LuWitness,
    VertexClass,
    WitnessKind,
    classify_vertex,
    rank_measure_bounds,
    entropic_measure,
    entropic_profile,
    is_locally_maximally_entangled,
    lu_inequivalence_witness,
    off_diagonal,
    smallest_eigenvalue,
)
from .fixtures import load_fixture
from .hypergraph import (
    M_MAX,
    MAX_N,
    Hypergraph,
    HypergraphError,
    InfeasibleError,
    contains_full_edge,
    is_graph,
    parse,
    rank,
    serialize,
    t_adjacent,
    to_json,
)
from .state import (
    apply_hyperedge_gate,
    apply_local_unitary,
    build_state,
    reduced_density,
    reduced_density_float,
    to_amplitudes,
)
from .weight import (
    hamming_weight,
    hw_bruteforce,
    hw_full_edge_recurrence,
    hw_inclusion_exclusion,
    hw_is_odd,
    rank_weight_bounds,
    truth_table,
)

__version__ = "0.1.0"
