"""
Dolbeault, conjugate Dolbeault, Bott-Chern, Aeppli and de Rham cohomology.

Every dimension is ``dim(cycles) − rank(boundaries)`` computed exactly, and
representatives are picked greedily from the cycles, preferring basis
vectors, so that output is stable under repeated runs.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from .bicomplex import Bicomplex, CochainElement
from .core.exceptions import InternalInconsistencyException
from .linalg import (
    SparseMatrix,
    Vector,
    extend_to_complement,
    hstack,
    in_span,
    kernel,
    span_rank,
    vstack,
)
from .scalar import ONE, ZERO
from .shapes import Cell

logger = logging.getLogger(__name__)


class Flavor(str, Enum):
    """Cohomology flavours of a double complex"""

    DOLBEAULT = "dolbeault"
    CONJ_DOLBEAULT = "conj_dolbeault"
    BOTT_CHERN = "bott_chern"
    AEPPLI = "aeppli"
    DE_RHAM = "de_rham"


BIGRADED_FLAVORS = (Flavor.DOLBEAULT, Flavor.CONJ_DOLBEAULT, Flavor.BOTT_CHERN, Flavor.AEPPLI)


@dataclass(frozen=True)
class TotalCochain:
    """An element of the total complex in degree ``degree``, one component per cell."""

    degree: int
    components: tuple[CochainElement, ...]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.components)


@dataclass
class CohomologyGroup:
    flavor: Flavor
    bidegree: Union[Cell, int]
    dimension: int
    representatives: list[Union[CochainElement, TotalCochain]] = field(default_factory=list)

    def __post_init__(self):
        if len(self.representatives) != self.dimension:
            raise InternalInconsistencyException(
                f"{self.flavor.value} at {self.bidegree}: {len(self.representatives)} "
                f"representatives for dimension {self.dimension}"
            )


def _unit(size: int, index: int) -> Vector:
    vector = [ZERO] * size
    vector[index] = ONE
    return tuple(vector)


def _candidates(cycle_matrix: SparseMatrix, size: int) -> list[Vector]:
    """Basis vectors that are cycles first, then a kernel basis."""
    zero_columns = [
        j for j in range(size) if all(i_j[1] != j for i_j in cycle_matrix.entries)
    ]
    return [_unit(size, j) for j in zero_columns] + kernel(cycle_matrix)


def _quotient(
    flavor: Flavor,
    cell: Cell,
    size: int,
    cycles: SparseMatrix,
    boundaries: SparseMatrix,
) -> CohomologyGroup:
    if size == 0:
        return CohomologyGroup(flavor, cell, 0, [])
    cycle_basis = kernel(cycles)
    boundary_vectors = [v for v in boundaries.columns() if any(v)]
    boundary_rank = span_rank(boundary_vectors, size)
    dimension = len(cycle_basis) - boundary_rank
    chosen = extend_to_complement(boundary_vectors, _candidates(cycles, size), size)
    if len(chosen) != dimension:
        raise InternalInconsistencyException(
            f"{flavor.value} at {cell}: boundaries are not inside the cycles"
        )
    return CohomologyGroup(
        flavor, cell, dimension, [CochainElement(cell, v) for v in chosen]
    )


def dolbeault(b: Bicomplex, p: int, q: int) -> CohomologyGroup:
    """ker ∂̄ / im ∂̄ at (p, q)."""
    return _quotient(
        Flavor.DOLBEAULT, (p, q), b.dim(p, q), b.delbar_at(p, q), b.delbar_at(p, q - 1)
    )


def conj_dolbeault(b: Bicomplex, p: int, q: int) -> CohomologyGroup:
    """ker ∂ / im ∂ at (p, q)."""
    return _quotient(
        Flavor.CONJ_DOLBEAULT, (p, q), b.dim(p, q), b.del_at(p, q), b.del_at(p - 1, q)
    )


def bott_chern(b: Bicomplex, p: int, q: int) -> CohomologyGroup:
    """(ker ∂ ∩ ker ∂̄) / im ∂∂̄ at (p, q)."""
    size = b.dim(p, q)
    cycles = vstack([b.del_at(p, q), b.delbar_at(p, q)], cols=size)
    return _quotient(Flavor.BOTT_CHERN, (p, q), size, cycles, b.ddbar_at(p - 1, q - 1))


def aeppli(b: Bicomplex, p: int, q: int) -> CohomologyGroup:
    """ker ∂∂̄ / (im ∂ + im ∂̄) at (p, q)."""
    size = b.dim(p, q)
    boundaries = hstack([b.del_at(p - 1, q), b.delbar_at(p, q - 1)], rows=size)
    return _quotient(Flavor.AEPPLI, (p, q), size, b.ddbar_at(p, q), boundaries)


def total_cells(b: Bicomplex, k: int) -> list[Cell]:
    return [(p, q) for p, q in b.cells() if p + q == k]


def total_differential(b: Bicomplex, k: int) -> SparseMatrix:
    """d = ∂ + ∂̄ from degree k to k + 1 in the cell order of :func:`total_cells`."""
    sources = total_cells(b, k)
    targets = total_cells(b, k + 1)
    row_offset = {}
    offset = 0
    for cell in targets:
        row_offset[cell] = offset
        offset += b.dim(*cell)
    rows = offset
    entries = {}
    col = 0
    for p, q in sources:
        for matrix, target in ((b.del_at(p, q), (p + 1, q)), (b.delbar_at(p, q), (p, q + 1))):
            if target not in row_offset:
                continue
            base = row_offset[target]
            for (i, j), value in matrix.entries.items():
                key = (base + i, col + j)
                entries[key] = entries.get(key, ZERO) + value
        col += b.dim(p, q)
    return SparseMatrix(rows, col, entries)


def de_rham(b: Bicomplex, k: int) -> CohomologyGroup:
    """Cohomology of the total complex in degree k."""
    cells = total_cells(b, k)
    size = sum(b.dim(*cell) for cell in cells)
    if size == 0:
        return CohomologyGroup(Flavor.DE_RHAM, k, 0, [])
    group = _quotient(
        Flavor.DE_RHAM, (k, 0), size, total_differential(b, k), total_differential(b, k - 1)
    )
    representatives = []
    for element in group.representatives:
        components = []
        offset = 0
        for cell in cells:
            width = b.dim(*cell)
            components.append(CochainElement(cell, element.coefficients[offset : offset + width]))
            offset += width
        representatives.append(TotalCochain(k, tuple(components)))
    return CohomologyGroup(Flavor.DE_RHAM, k, group.dimension, representatives)


_BIGRADED = {
    Flavor.DOLBEAULT: dolbeault,
    Flavor.CONJ_DOLBEAULT: conj_dolbeault,
    Flavor.BOTT_CHERN: bott_chern,
    Flavor.AEPPLI: aeppli,
}


def compute(b: Bicomplex, flavor: Union[Flavor, str], p: int, q: int) -> CohomologyGroup:
    return _BIGRADED[Flavor(flavor)](b, p, q)


def dimension_table(
    b: Bicomplex, flavor: Union[Flavor, str], cells: Optional[Iterable[Cell]] = None
) -> dict[Cell, int]:
    """Dimensions of one bigraded flavour over ``cells`` (default: the nonzero cells)."""
    flavor = Flavor(flavor)
    cells = list(cells) if cells is not None else b.cells()
    table = {cell: _BIGRADED[flavor](b, *cell).dimension for cell in cells}
    logger.debug(f"{flavor.value} table over {len(table)} cells")
    return table


def betti_numbers(b: Bicomplex) -> dict[int, int]:
    degrees = b.total_degrees()
    if not degrees:
        return {}
    return {k: de_rham(b, k).dimension for k in range(degrees[0], degrees[-1] + 1)}


def bounding_cells(b: Bicomplex) -> list[Cell]:
    bounds = b.bounds()
    if bounds is None:
        return []
    p0, p1, q0, q1 = bounds
    return [(p, q) for q in range(q0, q1 + 1) for p in range(p0, p1 + 1)]


def dimension_equality(b: Bicomplex) -> Optional[Cell]:
    """First cell where h_BC, h_∂̄, h_∂ and h_A differ, or ``None``."""
    for cell in b.cells():
        values = {_BIGRADED[flavor](b, *cell).dimension for flavor in BIGRADED_FLAVORS}
        if len(values) > 1:
            return cell
    return None


@dataclass(frozen=True)
class DdbarVerdict:
    holds: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def ddbar_lemma(b: Bicomplex) -> DdbarVerdict:
    """∂∂̄-lemma: the decomposition has only dots and squares.

    Cross-checked against equality of the four bigraded dimensions.
    """
    from .decomposition import decompose

    decomposition = decompose(b)
    lines = [shape for shape, _ in decomposition.entries if not (shape.is_dot or shape.kind == "square")]
    by_decomposition = not lines
    failing_cell = dimension_equality(b)
    by_dimensions = failing_cell is None
    if by_decomposition != by_dimensions:
        raise InternalInconsistencyException(
            f"∂∂̄-lemma: decomposition says {by_decomposition}, dimensions say {by_dimensions}"
        )
    if by_decomposition:
        return DdbarVerdict(True)
    witness = f"{lines[0].label()} in the decomposition; dimensions differ at {failing_cell}"
    return DdbarVerdict(False, witness)


def in_boundary_span(
    b: Bicomplex,
    element: CochainElement,
    extra: Sequence[Sequence] = (),
) -> bool:
    """Whether ``element`` lies in im ∂ + im ∂̄ + span(extra) at its bidegree."""
    p, q = element.bidegree
    vectors = list(b.del_at(p - 1, q).columns()) + list(b.delbar_at(p, q - 1).columns())
    vectors += [tuple(v) for v in extra]
    vectors = [v for v in vectors if any(v)]
    return in_span(element.coefficients, vectors)
