"""Builds decision instances that encode graph three-colorability as a
column subset selection question.

A graph with n vertices and m edges maps to an (n+4) x (3n+m) rational
matrix: one column per vertex copy v^i (i in {1,2,3}) and one per edge,
with rows for the vertices, three color rows, and one extra "eps" row.
The scale parameter is t = 1/(4(m+n)^3) and the squared decision threshold
is m t^2 + 4n t^6 + m t^10. The module also provides the exact certifying
objects: witness coefficients for a proper coloring, the closed-form
residual projector for structured selections, and the matching lower bound
for structured selections that fail to be colorings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateGraphError,
    NotAColoringError,
    ParseError,
    PartialColoringError,
    ValidationError,
)
from .graphs import Coloring, Graph, is_three_coloring
from .linalg import (
    EPSILON,
    ColorRow,
    Edge,
    Epsilon,
    RatMatrix,
    Vertex,
    VertexCopy,
    col_sort_key,
)
from .rational import ONE, ZERO, Rational, as_rational

ColumnSelection = tuple  # sorted tuple of column labels, size k
StructuredSelection = dict[int, int]  # vertex -> copy index in {1, 2, 3}


def compute_t(n: int, m: int) -> Rational:
    """The exact scale parameter 1 / (4 (m + n)^3)."""
    if n < 1 or m < 1:
        raise DegenerateGraphError(f"reduction needs n >= 1 and m >= 1, got n={n}, m={m}")
    return Rational(1, 4 * (m + n) ** 3)


def threshold_sq(n: int, m: int, t) -> Rational:
    """The squared decision threshold m t^2 + 4 n t^6 + m t^10."""
    t = as_rational(t)
    t2 = t * t
    t6 = t2 * t2 * t2
    t10 = t6 * t2 * t2
    return m * t2 + 4 * n * t6 + m * t10


def lower_bound_sq(n: int, m: int, t) -> Rational:
    """Exact m t^2 + 4n (t^3/(1+n t^6))^2 + (m+2) (t^5/(1+n t^6))^2.

    Every structured selection whose color map has a monochromatic edge has
    at least this squared residual, and with t from compute_t the bound
    strictly exceeds threshold_sq.
    """
    t = as_rational(t)
    t2 = t * t
    t3 = t2 * t
    t5 = t3 * t2
    t6 = t3 * t3
    den = ONE + n * t6
    a = t3 / den
    b = t5 / den
    return m * t2 + 4 * n * a * a + (m + 2) * b * b


@dataclass(frozen=True)
class ReductionInstance:
    """A built instance: the matrix, selection size k = n, t, and threshold."""

    graph: Graph
    M: RatMatrix
    k: int
    t: Rational
    tau_sq: Rational

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def col_position(self, label) -> int:
        return self.M.col_position(label)

    def selection_positions(self, labels: Iterable) -> tuple[int, ...]:
        return tuple(self.M.col_position(lab) for lab in labels)

    def selection_submatrix(self, labels: Sequence) -> RatMatrix:
        """Columns of M at the given labels, in the given order."""
        positions = [self.M.col_position(lab) for lab in labels]
        data = [[row[j] for j in positions] for row in self.M.data]
        return RatMatrix(self.M.rows, tuple(labels), data)


def _entry(row, col, t, t2, t3, t5) -> Rational:
    if isinstance(row, Vertex):
        if isinstance(col, VertexCopy):
            return ONE if col.v == row.v else ZERO
        return t2 if row.v in (col.u, col.v) else ZERO
    if isinstance(row, ColorRow):
        if isinstance(col, VertexCopy):
            return t3 if col.i == row.i else ZERO
        return t5
    # eps row: t on every edge column, zero on copy columns
    return ZERO if isinstance(col, VertexCopy) else t


def build_instance(G: Graph) -> ReductionInstance:
    """Assemble the labeled instance matrix for G.

    Entry rules, for vertex row u, copy column v^i, edge column e:
      row u:       1 at each copy of u, t^2 at each edge incident to u
      color row i: t^3 at every column of copy block i, t^5 at every edge
      eps row:     t at every edge, 0 elsewhere
    Rows are ordered v_1..v_n, c1, c2, c3, eps; columns are the three copy
    blocks (vertices ascending) followed by the edges in sorted order.
    """
    n, m = G.n, G.m
    t = compute_t(n, m)
    t2 = t * t
    t3 = t2 * t
    t5 = t3 * t2
    rows = [Vertex(v) for v in range(1, n + 1)]
    rows += [ColorRow(i) for i in (1, 2, 3)]
    rows.append(EPSILON)
    cols: list = [VertexCopy(v, i) for i in (1, 2, 3) for v in range(1, n + 1)]
    cols += [Edge(u, v) for u, v in G.sorted_edges()]
    entries = [[_entry(r, c, t, t2, t3, t5) for c in cols] for r in rows]
    M = RatMatrix(rows, cols, entries)
    return ReductionInstance(graph=G, M=M, k=n, t=t, tau_sq=threshold_sq(n, m, t))


# ---------------------------------------------------------------------------
# Selections and assignments


def validate_assignment(G: Graph, psi: Mapping[int, int]) -> None:
    """Require psi to assign every vertex of G a color in {1, 2, 3}."""
    for v in range(1, G.n + 1):
        if v not in psi:
            raise PartialColoringError(f"vertex {v} has no assigned copy")
        if psi[v] not in (1, 2, 3):
            raise ValidationError(f"copy index {psi[v]!r} at vertex {v} is not in 1..3")


def coloring_to_selection(G: Graph, phi: Mapping[int, int]) -> ColumnSelection:
    """The n copy columns {v^{phi(v)}}, in canonical column order."""
    validate_assignment(G, phi)
    return tuple(sorted((VertexCopy(v, phi[v]) for v in range(1, G.n + 1)), key=col_sort_key))


def selection_to_structured(sel: Iterable, n: int) -> StructuredSelection | None:
    """Recover psi when sel is exactly one copy per vertex and no edges.

    Returns None for any other selection shape.
    """
    psi: StructuredSelection = {}
    for label in sel:
        if not isinstance(label, VertexCopy):
            return None
        if label.v in psi:
            return None
        psi[label.v] = label.i
    if set(psi) != set(range(1, n + 1)):
        return None
    return psi


def witness_coefficients(inst: ReductionInstance, phi: Mapping[int, int]) -> RatMatrix:
    """Coefficient matrix A over the selected columns of a proper coloring.

    Rows are indexed by the selected copies {v^{phi(v)}}; columns follow the
    instance matrix. Every copy column v^i maps to the selected copy of v
    with weight 1, and an edge column {u, v} maps to t^2 times the selected
    copies of u and v. With S the selected submatrix, the squared Frobenius
    norm of M - S A equals the instance threshold exactly.
    """
    G = inst.graph
    if not is_three_coloring(G, phi):
        raise NotAColoringError("assignment has a monochromatic edge")
    sel = coloring_to_selection(G, phi)
    pos = {label: idx for idx, label in enumerate(sel)}
    t2 = inst.t * inst.t
    entries = [[ZERO] * inst.M.n_cols for _ in sel]
    for j, col in enumerate(inst.M.cols):
        if isinstance(col, VertexCopy):
            entries[pos[VertexCopy(col.v, phi[col.v])]][j] = ONE
        else:
            entries[pos[VertexCopy(col.u, phi[col.u])]][j] = t2
            entries[pos[VertexCopy(col.v, phi[col.v])]][j] = t2
    return RatMatrix(sel, inst.M.cols, entries)


def _copy_counts(G: Graph, psi: Mapping[int, int]) -> dict[int, int]:
    counts = {1: 0, 2: 0, 3: 0}
    for v in range(1, G.n + 1):
        counts[psi[v]] += 1
    return counts


def closed_form_projector(inst: ReductionInstance, psi: Mapping[int, int]) -> RatMatrix:
    """I - S S^+ for the structured selection {v^{psi(v)}}, assembled
    directly from its closed form.

    With n_i = |psi^{-1}(i)| and u_i = 1/(1 + n_i t^6): vertex rows of one
    color class couple through u_i t^6 (including the diagonal), each class
    couples to its own color row through -u_i t^3, color row diagonals are
    u_i, the eps diagonal is 1, and everything else is zero. Empty classes
    degenerate to u_i = 1 with no couplings.
    """
    validate_assignment(inst.graph, psi)
    t = inst.t
    t3 = t * t * t
    t6 = t3 * t3
    counts = _copy_counts(inst.graph, psi)
    u = {i: ONE / (ONE + counts[i] * t6) for i in (1, 2, 3)}
    u_t6 = {i: u[i] * t6 for i in (1, 2, 3)}
    u_t3 = {i: u[i] * t3 for i in (1, 2, 3)}
    labels = inst.M.rows
    size = len(labels)
    entries = [[ZERO] * size for _ in range(size)]
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            if isinstance(la, Vertex):
                if isinstance(lb, Vertex):
                    if psi[la.v] == psi[lb.v]:
                        entries[a][b] = u_t6[psi[la.v]]
                elif isinstance(lb, ColorRow) and psi[la.v] == lb.i:
                    entries[a][b] = -u_t3[lb.i]
            elif isinstance(la, ColorRow):
                if isinstance(lb, Vertex):
                    if psi[lb.v] == la.i:
                        entries[a][b] = -u_t3[la.i]
                elif isinstance(lb, ColorRow) and la.i == lb.i:
                    entries[a][b] = u[la.i]
            elif isinstance(lb, Epsilon):
                entries[a][b] = ONE
    return RatMatrix(labels, labels, entries)


def structured_residual_sq(inst: ReductionInstance, psi: Mapping[int, int]) -> Rational:
    """Exact squared residual of M against the structured selection of psi.

    Expands the closed-form projector column by column: selected copies
    vanish; a non-selected copy v^j contributes t^6 (u_{psi(v)} + u_j); an
    edge contributes t^2 plus t^10 u_c when its endpoints use two colors
    (c the unused one), or t^2 plus t^10 (u_1 + u_2 + u_3) when they share
    a color. Agrees exactly with projection_residual_sq on the selection.
    """
    validate_assignment(inst.graph, psi)
    G = inst.graph
    n, m = G.n, G.m
    t = inst.t
    t2 = t * t
    t6 = t2 * t2 * t2
    t10 = t6 * t2 * t2
    counts = _copy_counts(G, psi)
    u = {i: ONE / (ONE + counts[i] * t6) for i in (1, 2, 3)}
    u_total = u[1] + u[2] + u[3]
    copy_part = sum(counts[i] * u[i] for i in (1, 2, 3)) + n * u_total
    mono = 0
    third = {1: 0, 2: 0, 3: 0}
    for a, b in G.edges:
        ca, cb = psi[a], psi[b]
        if ca == cb:
            mono += 1
        else:
            third[6 - ca - cb] += 1
    edge_part = sum(third[c] * u[c] for c in (1, 2, 3)) + mono * u_total
    return t6 * copy_part + m * t2 + t10 * edge_part


# ---------------------------------------------------------------------------
# Instance file format
#
# Line 1: "cssp-instance v1"; line 2: "n <n> m <m> k <k>"; line 3 "t <p/q>";
# line 4 "tau_sq <p/q>"; then one "<row> <col> <p/q>" line per nonzero entry
# in canonical (row, column) order. Absent entries are zero.

INSTANCE_HEADER = "cssp-instance v1"

_ROW_VERTEX_RE = re.compile(r"v(\d+)\Z")
_ROW_COLOR_RE = re.compile(r"c([123])\Z")
_COL_COPY_RE = re.compile(r"v(\d+)\^([123])\Z")
_COL_EDGE_RE = re.compile(r"e(\d+)_(\d+)\Z")


def row_label_from_str(text: str):
    if text == "eps":
        return EPSILON
    match = _ROW_VERTEX_RE.match(text)
    if match:
        return Vertex(int(match.group(1)))
    match = _ROW_COLOR_RE.match(text)
    if match:
        return ColorRow(int(match.group(1)))
    raise ParseError(f"bad row label {text!r}")


def col_label_from_str(text: str):
    match = _COL_COPY_RE.match(text)
    if match:
        return VertexCopy(int(match.group(1)), int(match.group(2)))
    match = _COL_EDGE_RE.match(text)
    if match:
        u, v = int(match.group(1)), int(match.group(2))
        if u >= v:
            raise ParseError(f"edge label {text!r} endpoints must be sorted")
        return Edge(u, v)
    raise ParseError(f"bad column label {text!r}")


def render_instance(inst: ReductionInstance) -> str:
    """Canonical text form, nonzero entries in (row, column) order."""
    lines = [
        INSTANCE_HEADER,
        f"n {inst.n} m {inst.m} k {inst.k}",
        f"t {inst.t}",
        f"tau_sq {inst.tau_sq}",
    ]
    for row_label, row in zip(inst.M.rows, inst.M.data):
        for col_label, x in zip(inst.M.cols, row):
            if x:
                lines.append(f"{row_label} {col_label} {x}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> ReductionInstance:
    """Read an instance file and validate it against the canonical build.

    The graph is recovered from the edge column labels, the instance is
    rebuilt from it, and every stored field and entry must match exactly;
    anything else raises ValidationError. This keeps the structured solver
    sound: it may assume the matrix really follows the entry rules.
    """
    lines = text.splitlines()
    if not lines or lines[0].strip() != INSTANCE_HEADER:
        raise ParseError(f"first line must be {INSTANCE_HEADER!r}")
    meta = lines[1].split() if len(lines) > 1 else []
    if len(meta) != 6 or meta[0] != "n" or meta[2] != "m" or meta[4] != "k":
        raise ParseError("second line must be 'n <n> m <m> k <k>'")
    try:
        n, m, k = int(meta[1]), int(meta[3]), int(meta[5])
    except ValueError:
        raise ParseError("non-integer counts in 'n .. m .. k ..' line") from None

    def _tagged_rational(index: int, tag: str):
        parts = lines[index].split() if len(lines) > index else []
        if len(parts) != 2 or parts[0] != tag:
            raise ParseError(f"line {index + 1} must be '{tag} <p/q>'")
        try:
            return as_rational(parts[1])
        except (TypeError, ValueError):
            raise ParseError(f"malformed rational in {tag!r} line") from None

    t = _tagged_rational(2, "t")
    tau_sq = _tagged_rational(3, "tau_sq")

    entries: dict[tuple, Rational] = {}
    for lineno, raw in enumerate(lines[4:], start=5):
        parts = raw.split()
        if not parts:
            continue
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected '<row> <col> <p/q>'")
        key = (row_label_from_str(parts[0]), col_label_from_str(parts[1]))
        if key in entries:
            raise ValidationError(f"line {lineno}: duplicate entry for {parts[0]} {parts[1]}")
        try:
            entries[key] = as_rational(parts[2])
        except (TypeError, ValueError):
            raise ParseError(f"line {lineno}: malformed rational {parts[2]!r}") from None

    edges = sorted({lab.endpoints for _, lab in entries if isinstance(lab, Edge)})
    if len(edges) != m:
        raise ValidationError(f"file declares m={m} but has {len(edges)} edge columns")
    inst = build_instance(Graph.make(n, edges))
    if inst.k != k:
        raise ValidationError(f"file declares k={k}, canonical value is {inst.k}")
    if inst.t != t:
        raise ValidationError(f"file t={t} disagrees with canonical {inst.t}")
    if inst.tau_sq != tau_sq:
        raise ValidationError(f"file tau_sq disagrees with canonical {inst.tau_sq}")
    for i, row_label in enumerate(inst.M.rows):
        for j, col_label in enumerate(inst.M.cols):
            stored = entries.pop((row_label, col_label), ZERO)
            if stored != inst.M.data[i][j]:
                raise ValidationError(
                    f"entry ({row_label}, {col_label}) = {stored} does not match "
                    f"the canonical construction"
                )
    if entries:
        row_label, col_label = next(iter(entries))
        raise ValidationError(f"entry ({row_label}, {col_label}) is outside the instance")
    return inst
