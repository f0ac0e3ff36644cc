"""cssplab: an exact-rational laboratory for the column subset selection
problem and its reduction from graph three-coloring."""

__version__ = "0.1.0"

from .errors import (
    CombinatorialBlowupError,
    CssplabError,
    DegenerateGraphError,
    EmptyEdgeSetError,
    HypothesisMismatchError,
    IsAColoringError,
    ModeUnavailableError,
    NotAColoringError,
    ParseError,
    PartialColoringError,
    SelectionError,
    ShapeError,
    SingularMatrixError,
    ValidationError,
)
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    is_three_coloring,
    parse_graph,
    path_graph,
    petersen_graph,
    random_graph,
    three_color_backtracking,
    to_col,
)
from .linalg import (
    EPSILON,
    ColorRow,
    Edge,
    Epsilon,
    RatMatrix,
    Vertex,
    VertexCopy,
    col_sort_key,
    frobenius_sq,
    invert,
    is_strictly_column_diagonally_dominant,
    matmul,
    projection_residual_sq,
    pseudoinverse_full_rank,
    row_sort_key,
    rref,
)
from .rational import Rational, as_rational
from .reduction import (
    ReductionInstance,
    build_instance,
    closed_form_projector,
    coloring_to_selection,
    compute_t,
    lower_bound_sq,
    parse_instance,
    render_instance,
    selection_to_structured,
    structured_residual_sq,
    threshold_sq,
    witness_coefficients,
)
from .solvers import (
    DEFAULT_ENUMERATION_CAP,
    SolveReport,
    as_float_matrix,
    decide_cssp,
    exact_brute_force,
    exact_structured,
    greedy_forward,
)
from .verify import (
    CheckRecord,
    VerificationReport,
    check_coloring_witness_equality,
    check_edge_selections_exceed,
    check_noncoloring_lower_bound,
    check_projector_formula,
    check_uncovered_vertex_bound,
    run_bound_checks,
    verify_reduction,
)
