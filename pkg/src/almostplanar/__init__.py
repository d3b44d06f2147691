"""Toolkit for 3-connected almost-planar graphs.

Generators for the Möbius ladder, bicycle wheel, and fan families;
exact planarity and almost-planarity decisions; an exhaustive cycle
oracle; linear-time theorem-backed cycle builders; and a recognizer
that matches arbitrary graphs back to family specs.
"""

from .classify import Classification, classify, predict_spectrum
from .constructive import (
    a_even_cycle,
    b_adjacent_spoke_cycle,
    b_graph_ham_cycle,
    bicycle_cycle,
    bicycle_ham_path,
    constructive_spectrum,
    h1_cycle,
    h2_cycle,
    mobius_cycle,
    wheel_cycle,
)
from .errors import (
    FalsificationError,
    NotInSpectrumError,
    OracleCapError,
    UnclassifiableError,
)
from .families import (
    H1,
    H2,
    Bicycle,
    FamilySpec,
    K33Chain,
    LabeledInstance,
    Mobius,
    Wheel,
    attach_fan,
    enumerate_b_minors,
    gen_a_graph,
    gen_bicycle,
    gen_h1,
    gen_h2,
    gen_k33_chain,
    gen_mobius,
    gen_wheel,
    generate,
)
from .graph import (
    Graph,
    are_isomorphic,
    contract_edge,
    delete_edge,
    format_edge_list,
    is_bipartite,
    is_k_connected,
    isomorphism,
    parse_edge_list,
    two_coloring,
)
from .oracle import (
    CycleSpectrum,
    cycle_spectrum,
    hamiltonian_connectivity,
    hamiltonian_cycle,
    hamiltonian_path,
    is_hamiltonian,
    is_hamiltonian_connected,
    is_pancyclic,
    validate_cycle,
    validate_path,
)
from .planarity import AlmostPlanarEvidence, is_almost_planar, is_planar

__all__ = [
    "AlmostPlanarEvidence",
    "Bicycle",
    "Classification",
    "CycleSpectrum",
    "FalsificationError",
    "FamilySpec",
    "Graph",
    "H1",
    "H2",
    "K33Chain",
    "LabeledInstance",
    "Mobius",
    "NotInSpectrumError",
    "OracleCapError",
    "UnclassifiableError",
    "Wheel",
    "a_even_cycle",
    "are_isomorphic",
    "attach_fan",
    "b_adjacent_spoke_cycle",
    "b_graph_ham_cycle",
    "bicycle_cycle",
    "bicycle_ham_path",
    "classify",
    "constructive_spectrum",
    "contract_edge",
    "cycle_spectrum",
    "delete_edge",
    "enumerate_b_minors",
    "format_edge_list",
    "gen_a_graph",
    "gen_bicycle",
    "gen_h1",
    "gen_h2",
    "gen_k33_chain",
    "gen_mobius",
    "gen_wheel",
    "generate",
    "h1_cycle",
    "h2_cycle",
    "hamiltonian_connectivity",
    "hamiltonian_cycle",
    "hamiltonian_path",
    "is_almost_planar",
    "is_bipartite",
    "is_hamiltonian",
    "is_hamiltonian_connected",
    "is_k_connected",
    "is_pancyclic",
    "is_planar",
    "isomorphism",
    "mobius_cycle",
    "parse_edge_list",
    "predict_spectrum",
    "two_coloring",
    "validate_cycle",
    "validate_path",
    "wheel_cycle",
]
