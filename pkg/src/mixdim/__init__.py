"""Mixed, edge and classical metric dimension of graphs.

Exact solvers with certificates, structural bounds, closed forms for the
standard families and an executable 3-SAT gadget reduction.
"""

from .families import (
    Complete,
    CompleteBipartite,
    Cycle,
    Grid,
    Path,
    Tree,
    build_family,
    family_mdim,
)
from .graph import (
    ACYCLIC,
    DistanceTable,
    Edge,
    Graph,
    Vertex,
    all_pairs_distances,
    build_graph,
    girth,
)
from .lp import export_ilp
from .metrics import (
    GeneratorCertificate,
    Variant,
    distinguishes,
    every_vertex_has_maximal_neighbour,
    lemma_n_minus_1_condition,
    structural_report,
    verify_generator,
)
from .reduction import (
    CnfFormula,
    assignment_to_generator,
    build_reduction,
    generator_to_assignment,
    parse_cnf,
    verify_equivalence,
)
from .solver import (
    BudgetExceeded,
    SolveResult,
    SolverConfig,
    build_constraints,
    lower_bound,
    solve,
    upper_bound_girth,
)

__version__ = "0.1.0"
