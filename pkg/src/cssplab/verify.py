"""Mechanical checks of the reduction's guarantees on concrete graphs.

Every verdict is an exact comparison of canonical rationals; there are no
tolerances anywhere. The closed-form projector is never trusted blindly:
wherever its fast path informs a result, the result is re-validated against
the directly computed projector.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .errors import (
    CombinatorialBlowupError,
    HypothesisMismatchError,
    IsAColoringError,
    ModeUnavailableError,
)
from .graphs import Graph, is_three_coloring, three_color_backtracking
from .linalg import (
    Edge,
    RatMatrix,
    VertexCopy,
    frobenius_sq,
    matmul,
    projection_residual_sq,
    pseudoinverse_full_rank,
)
from .rational import Rational, ZERO
from .reduction import (
    ReductionInstance,
    build_instance,
    closed_form_projector,
    coloring_to_selection,
    lower_bound_sq,
    witness_coefficients,
)
from .solvers import DEFAULT_ENUMERATION_CAP, exact_brute_force, exact_structured

VERIFY_MODE_FULL = "full"
VERIFY_MODE_STRUCTURED = "structured"


@dataclass(frozen=True)
class CheckRecord:
    """One exact comparison: name, graph tag, witness, and both sides."""

    name: str
    graph: str
    witness: str
    lhs: object
    rhs: object
    passed: bool

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name} {self.graph} {verdict} lhs={self.lhs} rhs={self.rhs}"


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(record.passed for record in self.records)

    def add(self, record: CheckRecord) -> None:
        self.records.append(record)

    def to_text(self) -> str:
        lines = [record.line() for record in self.records]
        lines.append(f"VERDICT {'PASS' if self.all_passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _tag(G: Graph, name: str | None) -> str:
    tag = name if name else f"n{G.n}m{G.m}"
    return "_".join(tag.split())


def _phi_text(phi) -> str:
    return "".join(str(phi[v]) for v in sorted(phi))


def _sel_text(labels) -> str:
    return ",".join(str(label) for label in labels)


# ---------------------------------------------------------------------------
# Individual checks


def check_uncovered_vertex_bound(
    inst: ReductionInstance, sel, graph_name: str | None = None
) -> CheckRecord:
    """A selection with no edge columns that misses every copy of some
    vertex keeps that vertex's three unit entries in the residual, so the
    squared residual is at least 3 (and in particular beats the threshold).
    """
    labels = tuple(sel)
    if any(isinstance(label, Edge) for label in labels):
        raise HypothesisMismatchError("selection contains an edge column")
    if not all(isinstance(label, VertexCopy) for label in labels):
        raise HypothesisMismatchError("selection must consist of copy columns")
    covered = {label.v for label in labels}
    if all(v in covered for v in range(1, inst.n + 1)):
        raise HypothesisMismatchError("every vertex has a selected copy")
    residual = projection_residual_sq(inst.M, inst.selection_positions(labels))
    three = Rational(3)
    return CheckRecord(
        name="uncovered-vertex-bound",
        graph=_tag(inst.graph, graph_name),
        witness=f"sel={_sel_text(labels)}",
        lhs=residual,
        rhs=three,
        passed=bool(residual >= three and residual > inst.tau_sq),
    )


def check_edge_selections_exceed(
    inst: ReductionInstance,
    cap: int = DEFAULT_ENUMERATION_CAP,
    graph_name: str | None = None,
) -> CheckRecord:
    """Every size-k selection containing at least one edge column has a
    residual strictly above the threshold. Exhaustive; lhs reports the
    smallest residual found among those selections.
    """
    c = inst.M.n_cols
    k = inst.k
    total = math.comb(c, k)
    if total > cap:
        raise CombinatorialBlowupError(f"C({c},{k}) = {total} exceeds the cap {cap}")
    copy_count = 3 * inst.n
    worst = None
    examined = 0
    ok = True
    for sel in itertools.combinations(range(c), k):
        if sel[-1] < copy_count:  # positions >= 3n are the edge columns
            continue
        examined += 1
        residual = projection_residual_sq(inst.M, sel)
        if worst is None or residual < worst:
            worst = residual
        if not residual > inst.tau_sq:
            ok = False
    return CheckRecord(
        name="edge-column-exclusion",
        graph=_tag(inst.graph, graph_name),
        witness=f"selections={examined}",
        lhs=worst,
        rhs=inst.tau_sq,
        passed=bool(ok and examined > 0),
    )


def check_coloring_witness_equality(
    inst: ReductionInstance, phi, graph_name: str | None = None
) -> CheckRecord:
    """For a proper coloring, the witness coefficients realize the squared
    threshold exactly, and the selection's true residual stays at or below
    it."""
    A = witness_coefficients(inst, phi)  # raises on improper colorings
    sel = coloring_to_selection(inst.graph, phi)
    S = inst.selection_submatrix(sel)
    witness_value = frobenius_sq(inst.M - matmul(S, A))
    residual = projection_residual_sq(inst.M, inst.selection_positions(sel))
    return CheckRecord(
        name="coloring-witness-equality",
        graph=_tag(inst.graph, graph_name),
        witness=f"phi={_phi_text(phi)}",
        lhs=witness_value,
        rhs=inst.tau_sq,
        passed=bool(witness_value == inst.tau_sq and residual <= inst.tau_sq),
    )


def check_noncoloring_lower_bound(
    inst: ReductionInstance, psi, graph_name: str | None = None
) -> CheckRecord:
    """A structured selection whose color map has a monochromatic edge has
    a residual at least lower_bound_sq, which itself beats the threshold.
    The residual is computed by the direct projection route on purpose.
    """
    if is_three_coloring(inst.graph, psi):
        raise IsAColoringError("psi is a proper coloring; the bound needs a monochromatic edge")
    sel = coloring_to_selection(inst.graph, psi)
    residual = projection_residual_sq(inst.M, inst.selection_positions(sel))
    bound = lower_bound_sq(inst.n, inst.m, inst.t)
    return CheckRecord(
        name="noncoloring-lower-bound",
        graph=_tag(inst.graph, graph_name),
        witness=f"psi={_phi_text(psi)}",
        lhs=residual,
        rhs=bound,
        passed=bool(residual >= bound and bound > inst.tau_sq),
    )


def check_projector_formula(
    inst: ReductionInstance, psi, graph_name: str | None = None
) -> CheckRecord:
    """The closed-form projector equals I - S S^+ computed directly from
    the pseudoinverse, entrywise. Structured selections always have full
    column rank (their identity rows force independence), so the direct
    route never degenerates."""
    sel = coloring_to_selection(inst.graph, psi)
    S = inst.selection_submatrix(sel)
    P = matmul(S, pseudoinverse_full_rank(S))
    direct = RatMatrix.identity(len(inst.M.rows), labels=inst.M.rows) - P
    closed = closed_form_projector(inst, psi)
    diff_sq = frobenius_sq(direct - closed)
    return CheckRecord(
        name="projector-closed-form",
        graph=_tag(inst.graph, graph_name),
        witness=f"psi={_phi_text(psi)}",
        lhs=diff_sq,
        rhs=ZERO,
        passed=bool(diff_sq == ZERO and direct == closed),
    )


# ---------------------------------------------------------------------------
# Drivers


def verify_reduction(
    G: Graph,
    mode: str = VERIFY_MODE_STRUCTURED,
    cap: int = DEFAULT_ENUMERATION_CAP,
    graph_name: str | None = None,
) -> VerificationReport:
    """Check the biconditional: G is three-colorable exactly when the
    instance admits a selection at or below its threshold.

    Colorability comes from the backtracking oracle; the threshold side
    from the chosen exact solver. In structured mode the fast residual of
    the winning selection is re-validated against the direct projection
    computation and reported as its own record.
    """
    tag = _tag(G, graph_name)
    coloring = three_color_backtracking(G)
    colorable = coloring is not None
    inst = build_instance(G)
    report = VerificationReport()
    if mode == VERIFY_MODE_FULL:
        solve = exact_brute_force(inst.M, inst.k, inst.tau_sq, cap=cap)
    elif mode == VERIFY_MODE_STRUCTURED:
        solve = exact_structured(inst)
        direct = projection_residual_sq(
            inst.M, inst.selection_positions(solve.best_selection)
        )
        report.add(
            CheckRecord(
                name="structured-residual-crosscheck",
                graph=tag,
                witness=f"sel={_sel_text(solve.best_selection)}",
                lhs=solve.delta_sq,
                rhs=direct,
                passed=bool(solve.delta_sq == direct),
            )
        )
    else:
        raise ModeUnavailableError(f"unknown verify mode {mode!r}")
    witness = f"coloring={_phi_text(coloring)}" if colorable else "coloring=none"
    report.add(
        CheckRecord(
            name="colorability-equivalence",
            graph=tag,
            witness=witness,
            lhs=solve.delta_sq,
            rhs=inst.tau_sq,
            passed=bool(solve.decision == colorable),
        )
    )
    return report


def _assignments(n: int, limit: int):
    """All 3^n assignments when they fit the limit, else an evenly strided
    deterministic sample of about `limit` of them."""
    total = 3**n
    stride = 1 if total <= limit else math.ceil(total / limit)
    for index, assignment in enumerate(itertools.product((1, 2, 3), repeat=n)):
        if index % stride == 0:
            yield dict(zip(range(1, n + 1), assignment))


def run_bound_checks(
    G: Graph,
    cap: int = DEFAULT_ENUMERATION_CAP,
    assignment_limit: int = 729,
    graph_name: str | None = None,
) -> VerificationReport:
    """Run every bound check that applies to G, exhaustively on small
    graphs.

    Families whose enumeration would exceed `cap` (edge-containing
    selections, uncovered-vertex selections) are skipped; the assignment
    families fall back to a deterministic sample above `assignment_limit`.
    """
    tag = _tag(G, graph_name)
    inst = build_instance(G)
    report = VerificationReport()

    bound = lower_bound_sq(inst.n, inst.m, inst.t)
    report.add(
        CheckRecord(
            name="bound-exceeds-threshold",
            graph=tag,
            witness=f"t={inst.t}",
            lhs=bound,
            rhs=inst.tau_sq,
            passed=bool(bound > inst.tau_sq),
        )
    )

    coloring = three_color_backtracking(G)
    if coloring is not None:
        report.add(check_coloring_witness_equality(inst, coloring, graph_name))

    copy_count = 3 * inst.n
    if math.comb(copy_count, inst.k) <= cap:
        for sel in itertools.combinations(range(copy_count), inst.k):
            labels = [inst.M.cols[j] for j in sel]
            if len({label.v for label in labels}) < inst.n:
                report.add(check_uncovered_vertex_bound(inst, labels, graph_name))

    if math.comb(inst.M.n_cols, inst.k) <= cap:
        report.add(check_edge_selections_exceed(inst, cap=cap, graph_name=graph_name))

    for psi in _assignments(G.n, assignment_limit):
        report.add(check_projector_formula(inst, psi, graph_name))
        if not is_three_coloring(G, psi):
            report.add(check_noncoloring_lower_bound(inst, psi, graph_name))

    return report
