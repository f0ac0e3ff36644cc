"""Exact dense linear algebra over arbitrary-precision rationals.

Matrices carry ordered row and column labels so callers can address entries
by meaning instead of position. Everything here is exact: no floating point,
no tolerances. Elimination always pivots on the first nonzero entry, which
keeps every routine deterministic.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import SelectionError, ShapeError, SingularMatrixError, ValidationError
from .rational import ONE, ZERO, Rational, as_rational

Label = Hashable


# ---------------------------------------------------------------------------
# Row and column labels used by reduction matrices


@dataclass(frozen=True, slots=True)
class Vertex:
    """Row label: the vertex v of the input graph."""

    v: int

    def __str__(self) -> str:
        return f"v{self.v}"


@dataclass(frozen=True, slots=True)
class ColorRow:
    """Row label: one of the three color rows, i in {1, 2, 3}."""

    i: int

    def __str__(self) -> str:
        return f"c{self.i}"


@dataclass(frozen=True, slots=True)
class Epsilon:
    """Row label: the single extra row that pins edge columns."""

    def __str__(self) -> str:
        return "eps"


EPSILON = Epsilon()


@dataclass(frozen=True, slots=True)
class VertexCopy:
    """Column label: copy i in {1, 2, 3} of vertex v."""

    v: int
    i: int

    def __str__(self) -> str:
        return f"v{self.v}^{self.i}"


@dataclass(frozen=True, slots=True)
class Edge:
    """Column label: the undirected edge {u, v}; endpoints stored sorted."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValidationError(f"self-loop edge label at vertex {self.u}")
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def __str__(self) -> str:
        return f"e{self.u}_{self.v}"

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


def row_sort_key(label) -> tuple:
    """Canonical row order: vertices ascending, color rows 1..3, then eps."""
    if isinstance(label, Vertex):
        return (0, label.v)
    if isinstance(label, ColorRow):
        return (1, label.i)
    if isinstance(label, Epsilon):
        return (2, 0)
    raise TypeError(f"not a reduction row label: {label!r}")


def col_sort_key(label) -> tuple:
    """Canonical column order: first copies, second, third, then edges.

    Vertices ascend within each copy block; edges sort by endpoint pair.
    """
    if isinstance(label, VertexCopy):
        return (0, label.i, label.v)
    if isinstance(label, Edge):
        return (1, label.u, label.v)
    raise TypeError(f"not a reduction column label: {label!r}")


# ---------------------------------------------------------------------------
# Labeled dense matrix


class RatMatrix:
    """Immutable dense matrix of Rationals with labeled axes.

    Labels may be any hashable values as long as they are distinct within
    an axis; plain integers are used when no meaning is attached.
    """

    __slots__ = ("rows", "cols", "data", "_row_pos", "_col_pos")

    def __init__(self, rows: Sequence[Label], cols: Sequence[Label], entries):
        rows = tuple(rows)
        cols = tuple(cols)
        if len(set(rows)) != len(rows):
            raise ShapeError("row labels must be distinct")
        if len(set(cols)) != len(cols):
            raise ShapeError("column labels must be distinct")
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if len(data) != len(rows) or any(len(r) != len(cols) for r in data):
            raise ShapeError(f"entry grid does not match {len(rows)}x{len(cols)} labels")
        self.rows = rows
        self.cols = cols
        self.data = data
        self._row_pos = None
        self._col_pos = None

    @classmethod
    def from_rows(cls, entries, rows=None, cols=None) -> "RatMatrix":
        """Build from a list of entry rows, defaulting labels to 0..d-1."""
        entries = [list(r) for r in entries]
        n_rows = len(entries)
        n_cols = len(entries[0]) if entries else 0
        if rows is None:
            rows = range(n_rows)
        if cols is None:
            cols = range(n_cols)
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int, labels=None) -> "RatMatrix":
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        ent = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        return cls(labels, labels, ent)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "RatMatrix":
        ent = [[ZERO] * n_cols for _ in range(n_rows)]
        return cls(range(n_rows), range(n_cols), ent)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def row_position(self, label) -> int:
        if self._row_pos is None:
            self._row_pos = {lab: i for i, lab in enumerate(self.rows)}
        try:
            return self._row_pos[label]
        except KeyError:
            raise SelectionError(f"no row labeled {label!r}") from None

    def col_position(self, label) -> int:
        if self._col_pos is None:
            self._col_pos = {lab: j for j, lab in enumerate(self.cols)}
        try:
            return self._col_pos[label]
        except KeyError:
            raise SelectionError(f"no column labeled {label!r}") from None

    def entry(self, i: int, j: int) -> Rational:
        return self.data[i][j]

    def at(self, row_label, col_label) -> Rational:
        return self.data[self.row_position(row_label)][self.col_position(col_label)]

    def row_entries(self, i: int) -> tuple:
        return self.data[i]

    def column_entries(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, list(zip(*self.data)) if self.data else [])

    def select_columns(self, positions: Sequence[int]) -> "RatMatrix":
        """Submatrix of distinct column positions, keeping their labels."""
        positions = list(positions)
        labels = [self.cols[j] for j in positions]
        data = [[row[j] for j in positions] for row in self.data]
        return RatMatrix(self.rows, labels, data)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {other.shape} from {self.shape}")
        data = [
            [x - y for x, y in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return RatMatrix(self.rows, self.cols, data)

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {other.shape} to {self.shape}")
        data = [
            [x + y for x, y in zip(ra, rb)]
            for ra, rb in zip(self.data, other.data)
        ]
        return RatMatrix(self.rows, self.cols, data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.data == other.data

    __hash__ = None

    def __repr__(self) -> str:
        return f"RatMatrix({len(self.rows)}x{len(self.cols)})"


# ---------------------------------------------------------------------------
# Operations


def frobenius_sq(M: RatMatrix) -> Rational:
    """Sum of squared entries (the square of the Frobenius norm)."""
    total = ZERO
    for row in M.data:
        for x in row:
            if x:
                total += x * x
    return total


def _dot(row, col) -> Rational:
    acc = ZERO
    for x, y in zip(row, col):
        if x and y:
            acc += x * y
    return acc


def _matmul_data(a, b):
    bt = list(zip(*b)) if b else []
    return [[_dot(arow, bcol) for bcol in bt] for arow in a]


def matmul(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    """Exact product; output labels are (rows of A, cols of B)."""
    if A.n_cols != B.n_rows:
        raise ShapeError(f"inner dimensions differ: {A.shape} times {B.shape}")
    return RatMatrix(A.rows, B.cols, _matmul_data(A.data, B.data))


def invert(M: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination, first-nonzero pivoting."""
    if M.n_rows != M.n_cols:
        raise ShapeError("invert requires a square matrix")
    n = M.n_rows
    a = [list(row) for row in M.data]
    b = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError(f"matrix of order {n} has rank below {n}")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        p = a[col][col]
        if p != ONE:
            inv_p = ONE / p
            a[col] = [x * inv_p for x in a[col]]
            b[col] = [x * inv_p for x in b[col]]
        pivot_a, pivot_b = a[col], b[col]
        for r in range(n):
            if r == col:
                continue
            f = a[r][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], pivot_a)]
                b[r] = [x - f * y for x, y in zip(b[r], pivot_b)]
    return RatMatrix(M.cols, M.rows, b)


def _rref_data(a, n_cols: int):
    """In-place reduced row echelon form; returns (rows, pivot positions)."""
    n_rows = len(a)
    pivots = []
    pr = 0
    for pc in range(n_cols):
        if pr == n_rows:
            break
        piv = None
        for r in range(pr, n_rows):
            if a[r][pc]:
                piv = r
                break
        if piv is None:
            continue
        if piv != pr:
            a[pr], a[piv] = a[piv], a[pr]
        p = a[pr][pc]
        if p != ONE:
            inv_p = ONE / p
            a[pr] = [x * inv_p for x in a[pr]]
        pivot_row = a[pr]
        for r in range(n_rows):
            if r != pr and a[r][pc]:
                f = a[r][pc]
                a[r] = [x - f * y for x, y in zip(a[r], pivot_row)]
        pivots.append(pc)
        pr += 1
    return a, pivots


def rref(M: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot column positions.

    The pivot positions index a maximal linearly independent column set.
    """
    reduced, pivots = _rref_data([list(r) for r in M.data], M.n_cols)
    return RatMatrix(M.rows, M.cols, reduced), tuple(pivots)


def pseudoinverse_full_rank(S: RatMatrix) -> RatMatrix:
    """(S^T S)^-1 S^T for a matrix of full column rank.

    Raises SingularMatrixError when S^T S is singular, which signals that
    the columns are linearly dependent.
    """
    St = S.transpose()
    G = matmul(St, S)
    try:
        G_inv = invert(G)
    except SingularMatrixError:
        raise SingularMatrixError("columns are linearly dependent; use a basis first") from None
    return matmul(G_inv, St)


def projection_residual_sq(M: RatMatrix, selection: Iterable[int]) -> Rational:
    """Squared Frobenius distance from M to the span of selected columns.

    The selection may repeat positions or be rank deficient: a column basis
    is extracted by row reduction first, so only the spanned subspace
    matters. Exact; an empty or all-zero selection projects onto nothing.
    """
    n_cols = M.n_cols
    sel = []
    for p in selection:
        try:
            p = operator.index(p)
        except TypeError:
            raise SelectionError(f"column position {p!r} is not an integer") from None
        if not 0 <= p < n_cols:
            raise SelectionError(f"column position {p} outside 0..{n_cols - 1}")
        sel.append(p)
    if not sel:
        return frobenius_sq(M)
    s_data = [[row[j] for j in sel] for row in M.data]
    _, piv = _rref_data([row[:] for row in s_data], len(sel))
    if not piv:
        return frobenius_sq(M)
    B = RatMatrix(M.rows, range(len(piv)), [[row[j] for j in piv] for row in s_data])
    B_pinv = pseudoinverse_full_rank(B)
    PM = matmul(B, matmul(B_pinv, M))
    total = ZERO
    for m_row, p_row in zip(M.data, PM.data):
        for x, y in zip(m_row, p_row):
            d = x - y
            if d:
                total += d * d
    return total


def is_strictly_column_diagonally_dominant(D: RatMatrix) -> bool:
    """Each diagonal entry exceeds the absolute column sum of the others.

    Such matrices are always nonsingular (Levy-Desplanques).
    """
    if D.n_rows != D.n_cols:
        raise ShapeError("dominance test requires a square matrix")
    for j in range(D.n_cols):
        off = ZERO
        for i in range(D.n_rows):
            if i != j:
                off += abs(D.data[i][j])
        if not D.data[j][j] > off:
            return False
    return True
