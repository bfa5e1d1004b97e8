"""Dense exact linear algebra over Q(i).

Matrices are dense row-major lists of scalars.  Rank uses fraction-free
Bareiss-style elimination (exact division by the previous pivot), and the
reduced-echelon routines behind nullspaces, solving and span membership use
ordinary Gauss-Jordan steps.  Inner loops skip zero entries, which is what
keeps the larger adjoint matrices (a few hundred rows) fast without any
sparse machinery.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar, as_scalar

Vector = list[Scalar]


class ExactMatrix:
    """An immutable-by-convention dense matrix of scalars."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Sequence[Sequence[Scalar]], ncols: int | None = None):
        data = [[as_scalar(x) for x in row] for row in rows]
        if data:
            ncols = len(data[0])
            if any(len(row) != ncols for row in data):
                raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        self.rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = ONE
        return cls(rows, ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], nrows: int | None = None) -> "ExactMatrix":
        if not columns:
            return cls.zeros(nrows or 0, 0)
        nrows = len(columns[0])
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return cls(rows, ncols=len(columns))

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return [row[j] for row in self.rows]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_columns(self.rows if self.nrows else [], nrows=self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        out = [[ZERO] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                other_row = other.rows[k]
                for j, b in enumerate(other_row):
                    if b:
                        acc[j] = acc[j] + a * b
        return ExactMatrix(out, ncols=other.ncols)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return ExactMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            ncols=self.ncols,
        )

    def scale(self, coeff) -> "ExactMatrix":
        coeff = as_scalar(coeff)
        return ExactMatrix([[x * coeff for x in row] for row in self.rows], ncols=self.ncols)

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        out = [ZERO] * self.nrows
        for i, row in enumerate(self.rows):
            acc = ZERO
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out[i] = acc
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return all(not x for row in self.rows for x in row)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExactMatrix)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"ExactMatrix[{self.nrows}x{self.ncols}]({body})"

    def rank(self) -> int:
        """Rank by fraction-free Bareiss elimination with row pivoting."""
        work = [row[:] for row in self.rows]
        nrows, ncols = self.nrows, self.ncols
        prev = ONE
        r = 0
        for c in range(ncols):
            pivot_row = None
            for i in range(r, nrows):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                work[r], work[pivot_row] = work[pivot_row], work[r]
            pivot = work[r][c]
            for i in range(r + 1, nrows):
                head = work[i][c]
                if not head:
                    continue
                row_i, row_r = work[i], work[r]
                for j in range(c + 1, ncols):
                    a, b = row_i[j], row_r[j]
                    if a or b:
                        row_i[j] = (pivot * a - head * b) / prev
                    # both zero stays zero under the Bareiss update
                row_i[c] = ZERO
            prev = pivot
            r += 1
            if r == nrows:
                break
        return r

    def rref(self) -> tuple[list[Vector], list[int]]:
        """Gauss-Jordan reduced rows (leading ones) and their pivot columns."""
        work = [row[:] for row in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            _normalize_row(work[r], c)
            for i in range(self.nrows):
                if i != r and work[i][c]:
                    _row_submul(work[i], work[r], work[i][c], c)
            pivots.append(c)
            r += 1
        return work[:r], pivots

    def nullspace(self) -> list[Vector]:
        """Deterministic kernel basis: one vector per free column, ascending."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        out: list[Vector] = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vec = [ZERO] * self.ncols
            vec[free] = ONE
            for row, pc in zip(reduced, pivots):
                if row[free]:
                    vec[pc] = -row[free]
            out.append(vec)
        return out


def _normalize_row(row: Vector, start: int) -> None:
    inv = ONE / row[start]
    row[start] = ONE
    for j in range(start + 1, len(row)):
        if row[j]:
            row[j] = row[j] * inv


def _row_submul(target: Vector, source: Vector, factor: Scalar, start: int) -> None:
    target[start] = ZERO
    for j in range(start + 1, len(source)):
        s = source[j]
        if s:
            target[j] = target[j] - factor * s


def solve_columns(
    basis_columns: Sequence[Vector], rhs_columns: Sequence[Vector]
) -> list[Vector | None]:
    """Solve basis * x = rhs for every rhs column in one elimination pass.

    Returns, per right-hand side, the coordinate vector in terms of
    ``basis_columns`` or None when the column is outside their span.  Free
    basis columns (if the basis is dependent) get coordinate zero.
    """
    ncols = len(basis_columns)
    if not rhs_columns:
        return []
    nrows = len(rhs_columns[0]) if rhs_columns else (len(basis_columns[0]) if basis_columns else 0)
    width = ncols + len(rhs_columns)
    work = [
        [
            (basis_columns[j][i] if j < ncols else rhs_columns[j - ncols][i])
            for j in range(width)
        ]
        for i in range(nrows)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        _normalize_row(work[r], c)
        for i in range(nrows):
            if i != r and work[i][c]:
                _row_submul(work[i], work[r], work[i][c], c)
        pivots.append(c)
        r += 1
    out: list[Vector | None] = []
    for n in range(len(rhs_columns)):
        col = ncols + n
        consistent = all(not work[i][col] for i in range(r, nrows))
        if not consistent:
            out.append(None)
            continue
        coords = [ZERO] * ncols
        for row_idx, pc in enumerate(pivots):
            coords[pc] = work[row_idx][col]
        out.append(coords)
    return out


class SpanReducer:
    """Incremental row-reduction for greedy independent selection.

    Vectors are reduced against the pivot rows accumulated so far; a vector
    with a nonzero residue is independent and (on ``add``) contributes a new
    normalized pivot row.  Deterministic: pivots are leading indices.
    """

    def __init__(self, vectors: Iterable[Vector] = ()):
        self._rows: list[tuple[int, Vector]] = []  # (pivot index, row), sorted
        for vec in vectors:
            self.add(vec)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence[Scalar]) -> Vector:
        out = list(vec)
        for pivot, row in self._rows:
            head = out[pivot]
            if head:
                for j in range(pivot, len(out)):
                    if row[j]:
                        out[j] = out[j] - head * row[j]
        return out

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence[Scalar]) -> bool:
        """Insert ``vec`` if independent; returns True when it was added."""
        residue = self._reduce(vec)
        pivot = next((j for j, x in enumerate(residue) if x), None)
        if pivot is None:
            return False
        inv = ONE / residue[pivot]
        row = [x * inv if x else ZERO for x in residue]
        row[pivot] = ONE
        self._rows.append((pivot, row))
        self._rows.sort(key=lambda pr: pr[0])
        return True


def select_independent(vectors: Sequence[Vector]) -> list[int]:
    """Indices of a greedy maximal independent subset, in enumeration order."""
    reducer = SpanReducer()
    return [n for n, vec in enumerate(vectors) if reducer.add(vec)]


def span_rank(vectors: Iterable[Vector]) -> int:
    return SpanReducer(vectors).rank


def same_span(first: Sequence[Vector], second: Sequence[Vector]) -> bool:
    a = SpanReducer(first)
    b = SpanReducer(second)
    if a.rank != b.rank:
        return False
    return all(a.contains(v) for v in second) and all(b.contains(v) for v in first)
