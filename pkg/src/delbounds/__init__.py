"""Bounds workbench for deletion-correcting codes.

Computes non-asymptotic upper and lower bounds on the sizes of
s-deletion-correcting codes over q-ary alphabets: closed-form and
run-statistics bounds, fractional matching/transversal LP optima on
deletion hypergraphs, exact optima by branch-and-bound, known code
constructions (Varshamov-Tenengolts, Tenengolts), and bounds for
constrained sources such as run-length limited sets.
"""

from .bounds import (
    BoundReport,
    RateCurve,
    levenshtein92_bound,
    levenshtein_bound,
    multi_deletion_bound,
    rate_bound,
    rate_curve,
    single_deletion_bound,
    standard_bounds,
    transversal_sum_bound,
    transversal_sum_lower,
    trivial_bound,
)
from .codes import (
    Codebook,
    best_known_size,
    tenengolts_code,
    verify_codebook,
    vt_code,
)
from .counting import (
    binomial,
    composition_count,
    count_strings_with_runs,
    delta,
    deletion_set_size_lower,
    deletion_set_size_upper,
    iota,
)
from .errors import ConstructionError, ResourceLimitError
from .hypergraph import (
    DeletionHypergraph,
    build,
    build_constrained,
    incidence_json,
    reciprocal_transversal,
    to_mps,
    verify_matching,
    verify_transversal,
)
from .lp import (
    LpProblem,
    LpSolution,
    matching_problem,
    read_mps,
    solve_fractional_matching,
    solve_fractional_transversal,
    transversal_problem,
)
from .qstrings import (
    QaryString,
    all_strings,
    deletion_set,
    deletion_set_size,
    edit_distance,
    insertion_set,
    is_subsequence,
    run_count,
)
from .rll import (
    constrained_bounds,
    deletion_decomposition_check,
    rll_bound,
    rll_deficient_set,
    rll_set,
)
from .search import (
    LineGraph,
    MisResult,
    greedy_independent_set,
    line_graph,
    max_independent_set,
)

__version__ = "0.1.0"
