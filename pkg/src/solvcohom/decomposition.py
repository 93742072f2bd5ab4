"""
Decomposition of bounded double complexes into squares and zigzags.

Squares are split off first, one anchor at a time, through an explicit
retraction whose kernel is a complementary subcomplex. What remains has
∂∂̄ = 0 and falls apart along antidiagonals into zigzag-quiver
representations, whose interval multiplicities are read off from ranks of
limit-to-colimit maps. The result is checked against direct cohomology in
all four bigraded flavours before it is returned.
"""

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional, Union

from .bicomplex import Bicomplex
from .cohomology import BIGRADED_FLAVORS, Flavor, compute
from .core.exceptions import DecompositionException
from .forms import SyntheticLabel
from .linalg import (
    SparseMatrix,
    hstack,
    kernel,
    left_inverse,
    pivot_columns,
    rank,
    vstack,
)
from .scalar import ONE
from .shapes import SQUARE, Cell, Shape

logger = logging.getLogger(__name__)


@dataclass
class Decomposition:
    """Multiset of shapes, sorted by (min p, min q, kind)."""

    entries: list[tuple[Shape, int]] = field(default_factory=list)

    @classmethod
    def from_counter(cls, counts: Union[Counter, dict]) -> "Decomposition":
        entries = [(shape, mult) for shape, mult in counts.items() if mult > 0]
        entries.sort(key=lambda item: item[0].sort_key())
        return cls(entries)

    def as_counter(self) -> Counter:
        return Counter({shape: mult for shape, mult in self.entries})

    def multiplicity(self, shape: Shape) -> int:
        return self.as_counter().get(shape, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self.as_counter() == other.as_counter()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.entries)

    def dots(self) -> list[tuple[Shape, int]]:
        return [(s, m) for s, m in self.entries if s.is_dot]

    def lines(self) -> list[tuple[Shape, int]]:
        return [(s, m) for s, m in self.entries if s.is_line]

    def squares(self) -> list[tuple[Shape, int]]:
        return [(s, m) for s, m in self.entries if s.kind == SQUARE]

    def longer_zigzags(self) -> list[tuple[Shape, int]]:
        return [
            (s, m)
            for s, m in self.entries
            if s.kind != SQUARE and len(s.cells) > 2
        ]

    @property
    def has_squares(self) -> bool:
        return bool(self.squares())

    def dimension_at(self, p: int, q: int) -> int:
        return sum(mult for shape, mult in self.entries if (p, q) in shape.cells)

    def cells(self) -> list[Cell]:
        return sorted({cell for shape, _ in self.entries for cell in shape.cells})

    def bounds(self) -> Optional[tuple[int, int, int, int]]:
        cells = self.cells()
        if not cells:
            return None
        ps = [p for p, _ in cells]
        qs = [q for _, q in cells]
        return min(ps), max(ps), min(qs), max(qs)

    def summary(self) -> str:
        parts = []
        for shape, mult in self.entries:
            parts.append(shape.label() if mult == 1 else f"({shape.label()})^{mult}")
        return " ⊕ ".join(parts) if parts else "0"


# -- phase 1: squares ----------------------------------------------------------


def _unit_columns(indices: Iterable[int], size: int) -> SparseMatrix:
    columns = list(indices)
    return SparseMatrix(size, len(columns), {(i, j): ONE for j, i in enumerate(columns)})


def _restrict(b: Bicomplex, subspaces: dict[Cell, SparseMatrix], step: int) -> Bicomplex:
    """The subcomplex spanned column-wise by ``subspaces`` (identity elsewhere)."""
    frames: dict[Cell, SparseMatrix] = {}
    basis = {}
    for cell in b.cells():
        if cell in subspaces:
            frame = subspaces[cell]
            if frame.cols == 0:
                continue
            frames[cell] = frame
            basis[cell] = tuple(
                SyntheticLabel(f"w{step}.{cell[0]},{cell[1]}.{i}") for i in range(frame.cols)
            )
        else:
            frames[cell] = SparseMatrix.identity(b.dim(*cell))
            basis[cell] = b.labels(*cell)
    inverses = {
        cell: frame if cell not in subspaces else left_inverse(frame)
        for cell, frame in frames.items()
    }

    def induced(getter, step_):
        result = {}
        for (p, q), frame in frames.items():
            target = (p + step_[0], q + step_[1])
            if target not in frames:
                continue
            matrix = inverses[target] @ getter(p, q) @ frame
            if not matrix.is_zero:
                result[(p, q)] = matrix
        return result

    return Bicomplex(basis, induced(b.del_at, (1, 0)), induced(b.delbar_at, (0, 1)), b.notation)


def _split_square(b: Bicomplex, anchor: Cell, step: int) -> tuple[int, Bicomplex]:
    """Split all squares anchored at ``anchor``; returns their number and the rest."""
    p, q = anchor
    M = b.ddbar_at(p, q)
    pivots = pivot_columns(M)
    V = _unit_columns(pivots, b.dim(p, q))
    W = M @ V
    Phi = left_inverse(W)
    dV = b.del_at(p, q) @ V
    dbarV = b.delbar_at(p, q) @ V
    retractions = {
        (p + 1, q + 1): W @ Phi,
        (p + 1, q): -(dV @ Phi @ b.delbar_at(p + 1, q)),
        (p, q + 1): dbarV @ Phi @ b.del_at(p, q + 1),
        (p, q): V @ Phi @ M,
    }
    complements = {
        cell: SparseMatrix.from_columns(kernel(r), r.cols)
        for cell, r in retractions.items()
    }
    return len(pivots), _restrict(b, complements, step)


def split_squares(b: Bicomplex) -> tuple[Counter, Bicomplex]:
    """Remove every square; the residual complex has ∂∂̄ = 0."""
    squares: Counter = Counter()
    current = b
    step = 0
    while True:
        anchor = next((cell for cell in current.cells() if not current.ddbar_at(*cell).is_zero), None)
        if anchor is None:
            break
        count, current = _split_square(current, anchor, step)
        squares[Shape.square(*anchor)] += count
        logger.debug(f"split {count} square(s) at {anchor}")
        step += 1
    return squares, current


# -- phase 2: zigzags ----------------------------------------------------------


@dataclass(frozen=True)
class _Vertex:
    kind: str  # "S" (source) or "T" (sink)
    cell: Cell


class _Line:
    """One antidiagonal of a complex with ∂∂̄ = 0 as a zigzag quiver.

    Sources sit on p + q = d, sinks on p + q = d + 1; ``T_p ← S_p → T_{p+1}``
    with ∂̄ on the left arrow and ∂ on the right one.
    """

    def __init__(self, b: Bicomplex, vertices: list[_Vertex]):
        self.b = b
        self.vertices = vertices

    def dim(self, i: int) -> int:
        return self.b.dim(*self.vertices[i].cell)

    def arrow(self, i: int) -> tuple[int, int, SparseMatrix]:
        """(source index, target index, matrix) of the arrow between i and i + 1."""
        left, right = self.vertices[i], self.vertices[i + 1]
        if left.kind == "S":
            return i, i + 1, self.b.del_at(*left.cell)
        return i + 1, i, self.b.delbar_at(*right.cell)

    def singleton_rank(self, i: int) -> int:
        vertex = self.vertices[i]
        size = self.dim(i)
        if size == 0:
            return 0
        p, q = vertex.cell
        stacked = rank(vstack([self.b.del_at(p, q), self.b.delbar_at(p, q)], cols=size))
        return stacked if vertex.kind == "S" else size - stacked

    def interval_rank(self, a: int, z: int) -> int:
        """Number of interval summands whose support contains ``[a, z]``."""
        if a < 0 or z >= len(self.vertices):
            return 0
        if any(self.dim(i) == 0 for i in range(a, z + 1)):
            return 0
        if a == z:
            return self.singleton_rank(a)
        offsets = {}
        total = 0
        for i in range(a, z + 1):
            offsets[i] = total
            total += self.dim(i)

        relations = {}
        constraints = {}
        relation_col = 0
        constraint_row = 0
        for i in range(a, z):
            source, target, F = self.arrow(i)
            s0, t0 = offsets[source], offsets[target]
            for (r, c), value in F.entries.items():
                relations[(t0 + r, relation_col + c)] = value
                constraints[(constraint_row + r, s0 + c)] = -value
            for c in range(F.cols):
                relations[(s0 + c, relation_col + c)] = -ONE
            for r in range(F.rows):
                constraints[(constraint_row + r, t0 + r)] = ONE
            relation_col += F.cols
            constraint_row += F.rows

        R = SparseMatrix(total, relation_col, relations)
        C = SparseMatrix(constraint_row, total, constraints)
        limit = kernel(C)
        width = self.dim(a)
        start = offsets[a]
        image = SparseMatrix(
            total,
            len(limit),
            {
                (start + r, j): vector[start + r]
                for j, vector in enumerate(limit)
                for r in range(width)
                if vector[start + r]
            },
        )
        return rank(hstack([R, image], rows=total)) - rank(R)

    def multiplicities(self) -> Counter:
        result: Counter = Counter()
        n = len(self.vertices)
        cache: dict[tuple[int, int], int] = {}

        def rk(a: int, z: int) -> int:
            if (a, z) not in cache:
                cache[(a, z)] = self.interval_rank(a, z)
            return cache[(a, z)]

        for a in range(n):
            if self.dim(a) == 0:
                continue
            for z in range(a, n):
                if self.dim(z) == 0:
                    break
                mult = rk(a, z) - rk(a - 1, z) - rk(a, z + 1) + rk(a - 1, z + 1)
                if mult:
                    cells = [self.vertices[i].cell for i in range(a, z + 1)]
                    result[Shape.from_cells(cells)] += mult
        return result


def _lines(b: Bicomplex) -> list[_Line]:
    bounds = b.bounds()
    if bounds is None:
        return []
    p_min, p_max, _, _ = bounds
    degrees = b.total_degrees()
    lines = []
    for d in range(degrees[0] - 1, degrees[-1] + 1):
        vertices = []
        for p in range(p_min, p_max + 1):
            vertices.append(_Vertex("T", (p, d + 1 - p)))
            vertices.append(_Vertex("S", (p, d - p)))
        vertices.append(_Vertex("T", (p_max + 1, d - p_max)))
        lines.append(_Line(b, vertices))
    return lines


def split_zigzags(b: Bicomplex) -> Counter:
    """Zigzag multiplicities of a complex with ∂∂̄ = 0."""
    result: Counter = Counter()
    for line in _lines(b):
        result.update(line.multiplicities())
    return result


# -- counting ------------------------------------------------------------------


def _counts_for(shape: Shape, flavor: Flavor, p: int, q: int) -> int:
    if shape.kind == SQUARE or (p, q) not in shape.cells:
        return 0
    cells = shape.cells
    if flavor == Flavor.CONJ_DOLBEAULT:
        return int((p - 1, q) not in cells and (p + 1, q) not in cells)
    if flavor == Flavor.DOLBEAULT:
        return int((p, q - 1) not in cells and (p, q + 1) not in cells)
    if flavor == Flavor.BOTT_CHERN:
        return int((p + 1, q) not in cells and (p, q + 1) not in cells)
    if flavor == Flavor.AEPPLI:
        return int((p - 1, q) not in cells and (p, q - 1) not in cells)
    raise ValueError(f"no cell-wise count for {flavor}")


def cohomology_counts(d: Decomposition, flavor: Union[Flavor, str], p: int, q: int) -> int:
    """Cohomology dimension at (p, q) read off the shapes."""
    flavor = Flavor(flavor)
    return sum(mult * _counts_for(shape, flavor, p, q) for shape, mult in d.entries)


def verify(b: Bicomplex, d: Decomposition) -> None:
    """Raise :class:`DecompositionException` unless ``d`` reproduces ``b``'s invariants."""
    for cell in b.cells():
        counted = d.dimension_at(*cell)
        if counted != b.dim(*cell):
            logger.error(f"dimension mismatch at {cell}: {counted} != {b.dim(*cell)}")
            raise DecompositionException("dimension", cell, b.dim(*cell), counted)
    for cell in sorted(set(d.cells()) - set(b.cells())):
        raise DecompositionException("dimension", cell, 0, d.dimension_at(*cell))
    for cell in b.cells():
        for flavor in BIGRADED_FLAVORS:
            expected = compute(b, flavor, *cell).dimension
            counted = cohomology_counts(d, flavor, *cell)
            if expected != counted:
                logger.error(
                    f"{flavor.value} mismatch at {cell}: expected {expected}, counted {counted}"
                )
                raise DecompositionException(flavor.value, cell, expected, counted)


def decompose(b: Bicomplex) -> Decomposition:
    """Unique multiplicities of squares and zigzags in ``b``, checked against its cohomology."""
    squares, residual = split_squares(b)
    zigzags = split_zigzags(residual)
    decomposition = Decomposition.from_counter(squares + zigzags)
    logger.debug(
        f"decomposed into {sum(squares.values())} squares and {sum(zigzags.values())} zigzags"
    )
    verify(b, decomposition)
    return decomposition


@dataclass(frozen=True)
class Page1Report:
    dots_and_len2_only: bool
    has_squares: bool


def page1_check(b: Union[Bicomplex, Decomposition]) -> Page1Report:
    """Whether only dots and length-two zigzags occur, and whether squares do."""
    d = b if isinstance(b, Decomposition) else decompose(b)
    return Page1Report(
        dots_and_len2_only=all(shape.is_dot or shape.is_line for shape, _ in d.entries),
        has_squares=d.has_squares,
    )


def shape_sum(d: Decomposition) -> Bicomplex:
    """The direct sum of standard complexes realising ``d``."""
    from .bicomplex import direct_sum_all, shape_complex

    return direct_sum_all(shape_complex(shape) for shape, mult in d.entries for _ in range(mult))


# -- rendering ------------------------------------------------------------------


def _arrows(d: Decomposition) -> tuple[set, set]:
    horizontal, vertical = set(), set()
    for shape, _ in d.entries:
        for source, _target, kind in shape.arrows():
            (horizontal if kind == "del" else vertical).add(source)
    return horizontal, vertical


def render_ascii(d: Decomposition, bounds: Optional[tuple[int, int, int, int]] = None) -> str:
    """Grid with per-cell dimensions (``C``, ``C^2``, ...) and arrows inside shapes."""
    bounds = bounds or d.bounds()
    if bounds is None:
        return ""
    p_min, p_max, q_min, q_max = bounds
    horizontal, vertical = _arrows(d)

    def text(p, q):
        k = d.dimension_at(p, q)
        return "." if k == 0 else ("C" if k == 1 else f"C^{k}")

    width = max(len(text(p, q)) for p in range(p_min, p_max + 1) for q in range(q_min, q_max + 1))
    lines = []
    for q in range(q_max, q_min - 1, -1):
        if q != q_max:
            marks = []
            for p in range(p_min, p_max + 1):
                marks.append(("↑" if (p, q) in vertical else " ").center(width))
            lines.append("   ".join(marks).rstrip())
        row = []
        for p in range(p_min, p_max + 1):
            row.append(text(p, q).center(width))
            if p != p_max:
                row.append(" → " if (p, q) in horizontal else "   ")
        lines.append("".join(row).rstrip())
    return "\n".join(lines)


def render_dot(d: Decomposition) -> str:
    """Graphviz description, one cluster per shape instance."""
    out = ["digraph decomposition {", "  node [shape=plaintext];"]
    for index, (shape, mult) in enumerate(d.entries):
        out.append(f'  subgraph cluster_{index} {{ label="{shape.label()} x{mult}";')
        for p, q in sorted(shape.cells):
            out.append(f'    s{index}_{p}_{q} [label="({p},{q})", pos="{p},{q}!"];')
        for (p, q), (r, s), kind in shape.arrows():
            style = "solid" if kind == "del" else "dashed"
            out.append(f"    s{index}_{p}_{q} -> s{index}_{r}_{s} [style={style}];")
        out.append("  }")
    out.append("}")
    return "\n".join(out)
