"""Common Prefix on trees: exact and layered solvers, star reductions, bounds."""
from .analysis import count_subtrees, harmonic, ratio_experiment
from .errors import (
    InfeasibleSolution,
    InvalidAssignment,
    InvalidInstance,
    NotAStarError,
    NotATreeError,
    NotBinaryError,
    ParseError,
    SizeGuardExceeded,
)
from .exact import common_label_count, oracle_solve, reconstruct, solve_exact
from .instance import (
    Assignment,
    CPInstance,
    evaluate,
    lcp_length,
    parse_cp,
    parse_solution,
    serialize_cp,
    serialize_solution,
    validate,
)
from .layered import choose_block_height, decompose, solve_approx
from .nested import (
    Biclique,
    NNInstance,
    NNSolution,
    biclique_to_nn,
    extract_prefix_biclique,
    nn_to_star,
    parse_nn,
    serialize_nn,
    solve_ebcs_exact,
    solve_nn_exact,
    star_to_nn,
    tight_family,
    translate_cp_to_nn,
    translate_nn_to_cp,
)

__version__ = "0.1.0"
