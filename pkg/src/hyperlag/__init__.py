"""hyperlag: Lagrangians, clique structure, and Turan-type extremal search
for non-uniform hypergraphs."""

from .core import (
    Hypergraph,
    LevelGraph,
    ParseError,
    blowup,
    complete,
    edge_types,
    is_subgraph,
    level,
    parse,
    remove_edge,
    serialize,
    sorted_edges,
)
from .exact import (
    CliqueResult,
    Exact12Result,
    lagrangian12_exact,
    max_clique,
    max_complete_12_order,
    motzkin_straus_value,
    uniform_relation_check,
)
from .extremal import (
    DensityEstimate,
    ExtremalRecord,
    OutOfHypothesisError,
    SearchBudgetError,
    chromatic_number,
    dense_report,
    density_sequence,
    extremal_search,
    is_dense,
    lubell,
    pi_lower_via_lagrangian,
    turan_density_12,
)
from .hom import blowup_witness, exists_hom, is_hom_free
from .numeric import (
    LagrangianResult,
    evaluate,
    evaluate_uniform,
    gradient,
    kkt_residual,
    maximize,
    project_to_simplex,
    refine_support,
)

__all__ = [
    "Hypergraph",
    "LevelGraph",
    "ParseError",
    "blowup",
    "complete",
    "edge_types",
    "is_subgraph",
    "level",
    "parse",
    "remove_edge",
    "serialize",
    "sorted_edges",
    "CliqueResult",
    "Exact12Result",
    "lagrangian12_exact",
    "max_clique",
    "max_complete_12_order",
    "motzkin_straus_value",
    "uniform_relation_check",
    "DensityEstimate",
    "ExtremalRecord",
    "OutOfHypothesisError",
    "SearchBudgetError",
    "chromatic_number",
    "dense_report",
    "density_sequence",
    "extremal_search",
    "is_dense",
    "lubell",
    "pi_lower_via_lagrangian",
    "turan_density_12",
    "blowup_witness",
    "exists_hom",
    "is_hom_free",
    "LagrangianResult",
    "evaluate",
    "evaluate_uniform",
    "gradient",
    "kkt_residual",
    "maximize",
    "project_to_simplex",
    "refine_support",
]

__version__ = "0.1.0"
