"""hyperlag: Lagrangians of non-uniform hypergraphs.

Evaluation and simplex maximization of the r!-weighted edge-product
polynomial, left-compression, clique-order closed forms with hypothesis
checking, and exact-rational certification of strict tightness examples.
"""

from ._backend import BACKEND
from .errors import InputError, ParseError
from .hypergraph import (
    MAX_ARITY,
    MAX_VERTICES,
    Hypergraph,
    NeighborhoodSet,
    build,
    complete,
    diff_neighborhood,
    edge_count,
    from_json_dict,
    from_text,
    load_graph,
    max_complete_subgraph_order,
    neighborhood,
    pair_neighborhood,
    to_json_dict,
    to_text,
)
from .lagrangian import (
    as_weighting,
    closed_form,
    closed_form_exact,
    eval_nonuniform,
    eval_nonuniform_exact,
    eval_uniform,
    eval_uniform_exact,
    gradient,
    load_weighting,
    support,
    threshold,
)
from .compression import (
    CompressionTrace,
    compress_edge,
    compress_set,
    is_left_compressed,
    left_compress,
)
from .optimizer import (
    OptimizationResult,
    OptimizerConfig,
    OracleResult,
    check_optimality,
    grid_oracle,
    maximize,
)
from .theorems import (
    CONSTRUCTION_IDS,
    THEOREM_IDS,
    CatalogEntry,
    CounterexampleReport,
    TheoremReport,
    build_counterexample,
    catalog,
    random_instance,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CONSTRUCTION_IDS",
    "CatalogEntry",
    "CompressionTrace",
    "CounterexampleReport",
    "Hypergraph",
    "InputError",
    "MAX_ARITY",
    "MAX_VERTICES",
    "NeighborhoodSet",
    "OptimizationResult",
    "OptimizerConfig",
    "OracleResult",
    "ParseError",
    "THEOREM_IDS",
    "TheoremReport",
    "as_weighting",
    "build",
    "build_counterexample",
    "catalog",
    "check_optimality",
    "closed_form",
    "closed_form_exact",
    "complete",
    "compress_edge",
    "compress_set",
    "diff_neighborhood",
    "edge_count",
    "eval_nonuniform",
    "eval_nonuniform_exact",
    "eval_uniform",
    "eval_uniform_exact",
    "from_json_dict",
    "from_text",
    "gradient",
    "grid_oracle",
    "is_left_compressed",
    "left_compress",
    "load_graph",
    "load_weighting",
    "max_complete_subgraph_order",
    "maximize",
    "neighborhood",
    "pair_neighborhood",
    "random_instance",
    "support",
    "threshold",
    "to_json_dict",
    "to_text",
    "verify",
]
