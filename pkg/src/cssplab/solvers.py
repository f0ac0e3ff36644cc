"""Exact enumeration solvers and a floating-point greedy baseline.

Floats appear only in the greedy heuristic. Every decision path compares
exact rationals against the squared threshold, with non-strict <=, so a
boundary hit counts as YES.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import CombinatorialBlowupError, ModeUnavailableError, ShapeError
from .linalg import RatMatrix, projection_residual_sq
from .rational import as_rational
from .reduction import ReductionInstance, coloring_to_selection, structured_residual_sq

DEFAULT_ENUMERATION_CAP = 10_000_000

MODE_EXACT_FULL = "exact-full"
MODE_EXACT_STRUCTURED = "exact-structured"
MODE_GREEDY = "greedy"


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve.

    delta_sq is an exact rational in the exact modes and a float in greedy
    mode. For the structured solver the reported minimum is only an upper
    bound on the global optimum (delta_is_upper_bound is True): structure
    suffices for the threshold decision but not for the optimal value.
    """

    decision: bool
    delta_sq: object
    best_selection: tuple
    subsets_examined: int
    mode: str
    delta_is_upper_bound: bool = False

    def to_text(self) -> str:
        sel = " ".join(str(label) for label in self.best_selection)
        return (
            "\n".join(
                [
                    f"decision {'YES' if self.decision else 'NO'}",
                    f"delta_sq {self.delta_sq}",
                    f"selection {sel}",
                    f"subsets {self.subsets_examined}",
                    f"mode {self.mode}",
                ]
            )
            + "\n"
        )


def exact_brute_force(
    M: RatMatrix, k: int, tau_sq, cap: int = DEFAULT_ENUMERATION_CAP
) -> SolveReport:
    """Global minimum of the projection residual over all C(c, k) selections.

    Enumerates positions in lexicographic order; ties keep the first and
    hence lexicographically smallest selection. Raises
    CombinatorialBlowupError before doing any work when C(c, k) > cap.
    """
    c = M.n_cols
    if not 1 <= k <= c:
        raise ShapeError(f"selection size {k} outside 1..{c}")
    tau_sq = as_rational(tau_sq)
    count = math.comb(c, k)
    if count > cap:
        raise CombinatorialBlowupError(f"C({c},{k}) = {count} exceeds the cap {cap}")
    best = None
    best_sel: tuple[int, ...] = ()
    for sel in itertools.combinations(range(c), k):
        r = projection_residual_sq(M, sel)
        if best is None or r < best:
            best, best_sel = r, sel
    return SolveReport(
        decision=bool(best <= tau_sq),
        delta_sq=best,
        best_selection=tuple(M.cols[j] for j in best_sel),
        subsets_examined=count,
        mode=MODE_EXACT_FULL,
    )


def exact_structured(inst: ReductionInstance) -> SolveReport:
    """Minimum residual over the 3^n structured selections of an instance.

    A selection below the threshold must pick exactly one copy column per
    vertex and no edge column, so enumerating color maps decides the
    threshold question exactly; the reported minimum is an upper bound on
    the global optimum and is flagged as such.
    """
    G = inst.graph
    vertices = range(1, G.n + 1)
    best = None
    best_psi: dict[int, int] = {}
    for assignment in itertools.product((1, 2, 3), repeat=G.n):
        psi = dict(zip(vertices, assignment))
        r = structured_residual_sq(inst, psi)
        if best is None or r < best:
            best, best_psi = r, psi
    return SolveReport(
        decision=bool(best <= inst.tau_sq),
        delta_sq=best,
        best_selection=coloring_to_selection(G, best_psi),
        subsets_examined=3**G.n,
        mode=MODE_EXACT_STRUCTURED,
        delta_is_upper_bound=True,
    )


def as_float_matrix(M: RatMatrix) -> np.ndarray:
    """Float copy of an exact matrix, for the heuristic baseline only."""
    return np.array([[float(x) for x in row] for row in M.data], dtype=float)


def greedy_forward(A, k: int) -> tuple[tuple[int, ...], float]:
    """Forward greedy column selection on a float matrix.

    At each of k steps, adds the column minimizing the squared Frobenius
    residual of the projection, ties to the lowest column index. The
    returned residual upper-bounds the exact optimum up to float error.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ShapeError("greedy expects a 2-d matrix")
    _, c = A.shape
    if not 1 <= k <= c:
        raise ShapeError(f"selection size {k} outside 1..{c}")
    selected: list[int] = []
    residual = float((A * A).sum())
    for _ in range(k):
        best_j = -1
        best_res = math.inf
        for j in range(c):
            if j in selected:
                continue
            B = A[:, selected + [j]]
            x, *_ = np.linalg.lstsq(B, A, rcond=None)
            res = float(((A - B @ x) ** 2).sum())
            if res < best_res:
                best_res, best_j = res, j
        selected.append(best_j)
        residual = best_res
    return tuple(selected), residual


def decide_cssp(
    M: RatMatrix,
    k: int,
    tau_sq,
    mode: str = MODE_EXACT_FULL,
    *,
    instance: ReductionInstance | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Exact answer to "is the optimal squared residual <= tau_sq?".

    exact-structured applies only to a reduction instance at its own stored
    threshold (the structure argument is threshold-specific); pass it via
    `instance`. Anything else raises ModeUnavailableError.
    """
    if mode == MODE_EXACT_FULL:
        return exact_brute_force(M, k, tau_sq, cap=cap).decision
    if mode == MODE_EXACT_STRUCTURED:
        tau_sq = as_rational(tau_sq)
        if instance is None or instance.M != M or instance.k != k:
            raise ModeUnavailableError("exact-structured needs the matching reduction instance")
        if instance.tau_sq != tau_sq:
            raise ModeUnavailableError("exact-structured decides only the instance's own threshold")
        return exact_structured(instance).decision
    raise ModeUnavailableError(f"unknown exact mode {mode!r}")
