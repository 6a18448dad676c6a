"""Exact graph-invariant toolkit and verification harness.

Library layers:

- graphs / codec / generators / corpus: types, formats, families, exhaustive
  small-graph enumeration
- invariants / treedepth / coloring: exact solvers with independently
  checkable certificates
- minors / holes / homomorphism: shallow topological minors, chordless-cycle
  machinery, digraph homomorphism dualities
- suites / cli: the claim-verification harness and its command-line front end
"""

from .errors import (
    BudgetError,
    ChiboundError,
    ParameterError,
    ParseError,
    SizeCapError,
    ValidationError,
    WalkLoopError,
)
from .graphs import (
    Digraph,
    Graph,
    acyclic_orientation,
    blow_up,
    connected_components,
    disjoint_union,
    girth,
    induced_subgraph,
    is_connected,
    orientations,
    power,
    subdivide,
    subdivide_exact,
)
from .codec import (
    parse_digraph,
    parse_graph,
    serialize_digraph,
    serialize_graph,
)
from .generators import GeneratorSeed, SplitMix64, generate, mycielskian
from .invariants import (
    InvariantResult,
    average_degree,
    biclique_number,
    clique_number,
    degeneracy,
    max_degree,
)
from .treedepth import (
    EliminationForest,
    tree_depth,
    tree_depth_at_most,
    validate_elimination_forest,
)
from .coloring import (
    Coloring,
    chi_p,
    chromatic_number,
    greedy_proper_coloring,
    product_chi_p_coloring,
    star_chromatic_number,
    subdivision_chi_p_coloring,
    uniform_subdivision_coloring,
    validate_coloring,
)
from .minors import (
    TopoMinorEmbedding,
    chi_TM,
    enumerate_ITM_exact,
    find_subdivided_clique,
    find_topo_embedding,
    is_induced_exact_subdivision,
    omega_TM,
    validate_topo_embedding,
)
from .holes import (
    Hole,
    count_holes,
    enumerate_holes,
    is_even_hole_free,
    verify_hole_density,
)
from .homomorphism import (
    DualityReport,
    HomMapping,
    h_coloring_with_witness,
    homomorphism,
    search_restricted_dual,
    symmetric_digraph,
    transitive_tournament,
    verify_restricted_dual,
    walk_power,
)
from .suites import SuiteSpec, VerificationReport, run_all, run_suite

__version__ = "0.1.0"
