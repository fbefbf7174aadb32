"""Cohen-Macaulay and sequentially Cohen-Macaulay tests for edge ideals of edge-weighted graphs."""

from .engine import (
    CMReport,
    check_ideal,
    cm_decision,
    is_cm_complex,
    is_cm_ideal,
    is_cm_via_polarization,
    is_scm_complex,
    is_scm_ideal,
    is_scm_via_polarization,
    scm_decision,
)
from .graphs import (
    Graph,
    build_graph,
    build_two_pentagon_H,
    canonical_form,
    chordless_cycles,
    enumerate_graphs,
    induced_subgraph,
    is_disjoint_union_complete,
    is_very_well_covered,
    is_woodroofe,
    minimal_vertex_covers,
    suspension_of_cycle,
)
from .homology import FieldSpec, SimplicialComplex, link, pure_skeleton, reduced_betti, stanley_reisner_complex
from .monomials import (
    MonomialIdeal,
    associated_primes,
    colon_by_monomial,
    enumerate_associated_radicals,
    is_unmixed,
    krull_dim,
    polarize,
    radical_colon,
    weighted_edge_ideal,
)

__version__ = "0.1.0"
