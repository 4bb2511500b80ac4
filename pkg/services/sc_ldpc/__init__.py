"""SC-LDPC design workbench: represent -> count cycles -> bound -> search.

High-level API:
- read_code(source) / serialize_code(code) : .hs / .hx text formats
- derive_params, hs_to_poly, poly_to_hs, expand_window : code model
- build_differences, find_4cycles, find_cycles, girth_via_differences : difference-based cycle search
- conv_girth, tanner_girth, brute_force_girth : graph girth oracles
- bound, bound_g6, bound_g8, construct_prop1, construct_prop2 : lower bounds on L_h and girth-8 constructions
- exhaustive_min_lh, naive_min_lh, montecarlo_search : minimum-L_h searches
- verify, compare : report pipelines
- sweep : bound-vs-search grid
"""

from .bounds import (
    BoundQuery,
    BoundResult,
    bound,
    bound_g6,
    bound_g8,
    construct_prop1,
    construct_prop2,
    lower_bound_for_search,
)
from .code_model import derive_params, expand_window, hs_to_poly, poly_to_hs
from .differences import (
    CycleWitness,
    Difference,
    DifferenceTable,
    build_differences,
    check_witness,
    find_4cycles,
    find_cycles,
    girth_via_differences,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DuplicateIndexError,
    EmptyMatrixError,
    InconsistentDimensionsError,
    InvalidParamsError,
    NonCanonicalError,
    ParseError,
    ResourceLimitError,
    ScLdpcError,
)
from .girth import TannerGraph, brute_force_girth, conv_girth, tanner_girth
from .integration import compare, verify
from .io import read_code, serialize_code, write_alist
from .models import CodeParams, PolyMatrix, SyndromeFormer, WindowMatrix
from .search import SearchOutcome, SearchSpec, exhaustive_min_lh, montecarlo_search, naive_min_lh, run_search
from .sweep import sweep

__all__ = [
    "BoundQuery", "BoundResult", "bound", "bound_g6", "bound_g8", "construct_prop1", "construct_prop2",
    "lower_bound_for_search",
    "derive_params", "expand_window", "hs_to_poly", "poly_to_hs",
    "CycleWitness", "Difference", "DifferenceTable", "build_differences", "check_witness", "find_4cycles",
    "find_cycles", "girth_via_differences",
    "BudgetExceededError", "CapExceededError", "DuplicateIndexError", "EmptyMatrixError",
    "InconsistentDimensionsError", "InvalidParamsError", "NonCanonicalError", "ParseError",
    "ResourceLimitError", "ScLdpcError",
    "TannerGraph", "brute_force_girth", "conv_girth", "tanner_girth",
    "compare", "verify",
    "read_code", "serialize_code", "write_alist",
    "CodeParams", "PolyMatrix", "SyndromeFormer", "WindowMatrix",
    "SearchOutcome", "SearchSpec", "exhaustive_min_lh", "montecarlo_search", "naive_min_lh", "run_search",
    "sweep",
]
