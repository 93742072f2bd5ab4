"""
Exact linear algebra over ℚ(i).

Matrices are stored as sparse triplets of :class:`GaussianRational`; rank,
row reduction and inversion are delegated to sympy's ``DomainMatrix`` over
``QQ_I``. There is no numerical tolerance anywhere: a pivot is nonzero or it
is not.
"""

import logging
from collections.abc import Iterable, Sequence
from typing import Optional

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from .scalar import ONE, ZERO, GaussianRational

logger = logging.getLogger(__name__)

Vector = tuple[GaussianRational, ...]


class SparseMatrix:
    """A ``rows × cols`` matrix holding only its nonzero entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(
        self,
        rows: int,
        cols: int,
        entries: Optional[dict[tuple[int, int], GaussianRational]] = None,
    ):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], GaussianRational] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            value = GaussianRational.coerce(value)
            if value:
                self.entries[(i, j)] = value

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, size: int) -> "SparseMatrix":
        return cls(size, size, {(i, i): ONE for i in range(size)})

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[GaussianRational]], rows: int):
        entries = {}
        for j, column in enumerate(columns):
            for i, value in enumerate(column):
                if value:
                    entries[(i, j)] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None):
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                value = GaussianRational.coerce(value)
                if value:
                    entries[(i, j)] = value
        return cls(len(rows), width, entries)

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        return self.entries.get(key, ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def to_rows(self) -> list[list[GaussianRational]]:
        dense = [[ZERO] * self.cols for _ in range(self.rows)]
        for (i, j), value in self.entries.items():
            dense[i][j] = value
        return dense

    def column(self, j: int) -> Vector:
        column = [ZERO] * self.rows
        for (i, jj), value in self.entries.items():
            if jj == j:
                column[i] = value
        return tuple(column)

    def columns(self) -> list[Vector]:
        dense = [[ZERO] * self.rows for _ in range(self.cols)]
        for (i, j), value in self.entries.items():
            dense[j][i] = value
        return [tuple(c) for c in dense]

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(
            self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def map_entries(self, fn) -> "SparseMatrix":
        return SparseMatrix(
            self.rows, self.cols, {k: fn(v) for k, v in self.entries.items()}
        )

    def scale(self, factor) -> "SparseMatrix":
        factor = GaussianRational.coerce(factor)
        return self.map_entries(lambda v: v * factor)

    def __neg__(self) -> "SparseMatrix":
        return self.map_entries(lambda v: -v)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries.get(key, ZERO) + value
        return SparseMatrix(self.rows, self.cols, entries)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list[tuple[int, GaussianRational]]] = {}
        for (k, j), value in other.entries.items():
            by_row.setdefault(k, []).append((j, value))
        entries: dict[tuple[int, int], GaussianRational] = {}
        for (i, k), left in self.entries.items():
            for j, right in by_row.get(k, ()):
                entries[(i, j)] = entries.get((i, j), ZERO) + left * right
        return SparseMatrix(self.rows, other.cols, entries)

    def apply(self, vector: Sequence[GaussianRational]) -> Vector:
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape}")
        result = [ZERO] * self.rows
        for (i, j), value in self.entries.items():
            if vector[j]:
                result[i] = result[i] + value * vector[j]
        return tuple(result)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SparseMatrix":
        row_pos = {r: a for a, r in enumerate(rows)}
        col_pos = {c: b for b, c in enumerate(cols)}
        return SparseMatrix(
            len(rows),
            len(cols),
            {
                (row_pos[i], col_pos[j]): v
                for (i, j), v in self.entries.items()
                if i in row_pos and j in col_pos
            },
        )

    def to_domain(self) -> DomainMatrix:
        dok = {key: value.to_domain() for key, value in self.entries.items()}
        return DomainMatrix.from_dok(dok, (self.rows, self.cols), QQ_I)

    @classmethod
    def from_domain(cls, matrix: DomainMatrix) -> "SparseMatrix":
        rows, cols = matrix.shape
        entries = {}
        for i, row in enumerate(matrix.to_list()):
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = GaussianRational.from_domain(value)
        return cls(rows, cols, entries)


def hstack(blocks: Sequence[SparseMatrix], rows: Optional[int] = None) -> SparseMatrix:
    height = rows if rows is not None else (blocks[0].rows if blocks else 0)
    entries = {}
    offset = 0
    for block in blocks:
        if block.rows != height:
            raise ValueError("hstack height mismatch")
        for (i, j), value in block.entries.items():
            entries[(i, j + offset)] = value
        offset += block.cols
    return SparseMatrix(height, offset, entries)


def vstack(blocks: Sequence[SparseMatrix], cols: Optional[int] = None) -> SparseMatrix:
    width = cols if cols is not None else (blocks[0].cols if blocks else 0)
    entries = {}
    offset = 0
    for block in blocks:
        if block.cols != width:
            raise ValueError("vstack width mismatch")
        for (i, j), value in block.entries.items():
            entries[(i + offset, j)] = value
        offset += block.rows
    return SparseMatrix(offset, width, entries)


def block_diagonal(blocks: Sequence[SparseMatrix]) -> SparseMatrix:
    entries = {}
    row_offset = col_offset = 0
    for block in blocks:
        for (i, j), value in block.entries.items():
            entries[(i + row_offset, j + col_offset)] = value
        row_offset += block.rows
        col_offset += block.cols
    return SparseMatrix(row_offset, col_offset, entries)


# -- reductions -----------------------------------------------------------


def rref(matrix: SparseMatrix) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row echelon form as a list of ``QQ_I`` rows plus pivot columns."""
    if matrix.rows == 0 or matrix.cols == 0 or matrix.is_zero:
        return [[QQ_I.zero] * matrix.cols for _ in range(matrix.rows)], ()
    reduced, pivots = matrix.to_domain().rref()
    return reduced.to_list(), tuple(pivots)


def rank(matrix: SparseMatrix) -> int:
    return len(rref(matrix)[1])


def kernel(matrix: SparseMatrix) -> list[Vector]:
    """Basis of the null space, one vector per free column of the echelon form."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * matrix.cols
        vector[free] = ONE
        for row, pivot in enumerate(pivots):
            value = reduced[row][free]
            if value:
                vector[pivot] = -GaussianRational.from_domain(value)
        basis.append(tuple(vector))
    return basis


def solve(matrix: SparseMatrix, rhs: Sequence[GaussianRational]) -> Optional[Vector]:
    """First solution of ``matrix · x = rhs`` in echelon order, or ``None``."""
    if len(rhs) != matrix.rows:
        raise ValueError(f"rhs of length {len(rhs)} for {matrix.shape}")
    if not any(rhs):
        return tuple([ZERO] * matrix.cols)
    augmented = hstack([matrix, SparseMatrix.from_columns([rhs], matrix.rows)])
    reduced, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None
    solution = [ZERO] * matrix.cols
    for row, pivot in enumerate(pivots):
        value = reduced[row][matrix.cols]
        if value:
            solution[pivot] = GaussianRational.from_domain(value)
    return tuple(solution)


def pivot_columns(matrix: SparseMatrix) -> tuple[int, ...]:
    return rref(matrix)[1]


def span_rank(vectors: Sequence[Sequence[GaussianRational]], dimension: int) -> int:
    if not vectors:
        return 0
    return rank(SparseMatrix.from_columns(vectors, dimension))


def in_span(
    vector: Sequence[GaussianRational],
    vectors: Sequence[Sequence[GaussianRational]],
) -> bool:
    if not any(vector):
        return True
    if not vectors:
        return False
    dimension = len(vector)
    return span_rank(list(vectors) + [vector], dimension) == span_rank(
        vectors, dimension
    )


def extend_to_complement(
    subspace: Sequence[Vector], candidates: Iterable[Vector], dimension: int
) -> list[Vector]:
    """Greedily pick candidates independent modulo ``subspace``.

    Deterministic in the order of ``candidates``.
    """
    chosen: list[Vector] = []
    current = list(subspace)
    current_rank = span_rank(current, dimension)
    for candidate in candidates:
        trial_rank = span_rank(current + [candidate], dimension)
        if trial_rank > current_rank:
            chosen.append(candidate)
            current.append(candidate)
            current_rank = trial_rank
    return chosen


def left_inverse(matrix: SparseMatrix) -> SparseMatrix:
    """``Φ`` with ``Φ · matrix = I`` for a matrix of full column rank."""
    k = matrix.cols
    if k == 0:
        return SparseMatrix(0, matrix.rows)
    rows = pivot_columns(matrix.transpose())
    if len(rows) != k:
        raise ValueError("left_inverse needs full column rank")
    square = matrix.submatrix(list(rows), list(range(k)))
    inverse = SparseMatrix.from_domain(square.to_domain().to_dense().inv())
    entries = {}
    for (i, j), value in inverse.entries.items():
        entries[(i, rows[j])] = value
    return SparseMatrix(k, matrix.rows, entries)


def coordinates(basis: SparseMatrix, vector: Sequence[GaussianRational]) -> Vector:
    """Coordinates of ``vector`` in the column basis ``basis`` (must lie in its span)."""
    solution = solve(basis, vector)
    if solution is None:
        raise ValueError("vector is not in the span of the basis")
    return solution
