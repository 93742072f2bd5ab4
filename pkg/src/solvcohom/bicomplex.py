"""
Bounded double complexes over ℚ(i).

A :class:`Bicomplex` holds, for each bidegree ``(p, q)``, an ordered tuple of
basis labels and the sparse matrices of ``∂: A^{p,q} → A^{p+1,q}`` and
``∂̄: A^{p,q} → A^{p,q+1}``. Complexes are treated as immutable once built.
"""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import Any, Optional

from .core.errors import ErrorCode
from .core.exceptions import BidegreeMismatchException, ParseException
from .forms import FormLabel, Label, SyntheticLabel, label_sort_key, render_label
from .linalg import SparseMatrix, Vector, block_diagonal
from .scalar import ONE, ZERO, GaussianRational
from .shapes import SQUARE, Cell, Shape

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CochainElement:
    """A vector in the basis of one bidegree."""

    bidegree: Cell
    coefficients: Vector

    @classmethod
    def zero(cls, bidegree: Cell, size: int) -> "CochainElement":
        return cls(bidegree, tuple([ZERO] * size))

    @classmethod
    def basis_vector(cls, bidegree: Cell, size: int, index: int) -> "CochainElement":
        coefficients = [ZERO] * size
        coefficients[index] = ONE
        return cls(bidegree, tuple(coefficients))

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def total_degree(self) -> int:
        return self.bidegree[0] + self.bidegree[1]

    def __add__(self, other: "CochainElement") -> "CochainElement":
        if other.bidegree != self.bidegree:
            raise BidegreeMismatchException(self.bidegree, other.bidegree)
        return CochainElement(
            self.bidegree,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "CochainElement") -> "CochainElement":
        return self + other.scale(-ONE)

    def scale(self, factor) -> "CochainElement":
        factor = GaussianRational.coerce(factor)
        return CochainElement(
            self.bidegree, tuple(c * factor for c in self.coefficients)
        )


class Bicomplex:
    """A bounded bigraded vector space with sparse ∂ and ∂̄ matrices."""

    def __init__(
        self,
        basis: Mapping[Cell, Sequence[Label]],
        del_: Optional[Mapping[Cell, SparseMatrix]] = None,
        delbar: Optional[Mapping[Cell, SparseMatrix]] = None,
        notation: Any = None,
    ):
        self.basis: dict[Cell, tuple[Label, ...]] = {
            cell: tuple(labels) for cell, labels in basis.items() if labels
        }
        self.del_: dict[Cell, SparseMatrix] = {
            cell: m for cell, m in (del_ or {}).items() if not m.is_zero
        }
        self.delbar: dict[Cell, SparseMatrix] = {
            cell: m for cell, m in (delbar or {}).items() if not m.is_zero
        }
        self.notation = notation
        self._index: dict[Cell, dict[Label, int]] = {}

    # -- shape ----------------------------------------------------------

    def dim(self, p: int, q: int) -> int:
        return len(self.basis.get((p, q), ()))

    def cells(self) -> list[Cell]:
        return sorted(self.basis)

    def bounds(self) -> Optional[tuple[int, int, int, int]]:
        """``(p_min, p_max, q_min, q_max)`` of the nonzero cells."""
        if not self.basis:
            return None
        ps = [p for p, _ in self.basis]
        qs = [q for _, q in self.basis]
        return min(ps), max(ps), min(qs), max(qs)

    def total_dimension(self) -> int:
        return sum(len(labels) for labels in self.basis.values())

    def labels(self, p: int, q: int) -> tuple[Label, ...]:
        return self.basis.get((p, q), ())

    def index_of(self, label: Label) -> Optional[int]:
        cell = label_bidegree(label, self)
        if cell is None:
            return None
        if cell not in self._index:
            self._index[cell] = {lab: i for i, lab in enumerate(self.labels(*cell))}
        return self._index[cell].get(label)

    def total_degrees(self) -> list[int]:
        return sorted({p + q for p, q in self.basis})

    # -- differentials ----------------------------------------------------

    def del_at(self, p: int, q: int) -> SparseMatrix:
        matrix = self.del_.get((p, q))
        if matrix is None:
            return SparseMatrix(self.dim(p + 1, q), self.dim(p, q))
        return matrix

    def delbar_at(self, p: int, q: int) -> SparseMatrix:
        matrix = self.delbar.get((p, q))
        if matrix is None:
            return SparseMatrix(self.dim(p, q + 1), self.dim(p, q))
        return matrix

    def ddbar_at(self, p: int, q: int) -> SparseMatrix:
        """∂∂̄: A^{p,q} → A^{p+1,q+1}."""
        return self.del_at(p, q + 1) @ self.delbar_at(p, q)

    def apply_del(self, element: CochainElement) -> CochainElement:
        p, q = element.bidegree
        return CochainElement((p + 1, q), self.del_at(p, q).apply(element.coefficients))

    def apply_delbar(self, element: CochainElement) -> CochainElement:
        p, q = element.bidegree
        return CochainElement((p, q + 1), self.delbar_at(p, q).apply(element.coefficients))

    @property
    def has_zero_differentials(self) -> bool:
        return not self.del_ and not self.delbar

    # -- elements -------------------------------------------------------

    def element(self, bidegree: Cell, terms: Mapping[Label, Any]) -> CochainElement:
        """Build a cochain from ``{label: coefficient}``."""
        size = self.dim(*bidegree)
        coefficients = [ZERO] * size
        for label, value in terms.items():
            index = self.index_of(label)
            if index is None or label_bidegree(label, self) != bidegree:
                raise KeyError(f"{render_label(label, self.notation or _default())} not in basis at {bidegree}")
            coefficients[index] = coefficients[index] + GaussianRational.coerce(value)
        return CochainElement(bidegree, tuple(coefficients))

    def basis_element(self, label: Label) -> CochainElement:
        cell = label_bidegree(label, self)
        return self.element(cell, {label: ONE})

    def describe(self, element: CochainElement, style: str = "unicode") -> str:
        """Readable linear combination of basis labels."""
        labels = self.labels(*element.bidegree)
        notation = self.notation or _default()
        terms = []
        for label, value in zip(labels, element.coefficients):
            if not value:
                continue
            text = render_label(label, notation, style)
            if value == ONE:
                terms.append(f"+{text}")
            elif value == -ONE:
                terms.append(f"-{text}")
            else:
                terms.append(f"+({value}){text}")
        if not terms:
            return "0"
        joined = "".join(terms)
        return joined[1:] if joined.startswith("+") else joined

    # -- structural operations ---------------------------------------------

    def canonical(self) -> "Bicomplex":
        """Same complex with each cell's basis sorted by label."""
        orders = {
            cell: sorted(range(len(labels)), key=lambda i, ls=labels: label_sort_key(ls[i]))
            for cell, labels in self.basis.items()
        }
        return self._reindexed(orders)

    def _reindexed(self, orders: dict[Cell, list[int]]) -> "Bicomplex":
        position = {cell: {old: new for new, old in enumerate(order)} for cell, order in orders.items()}
        basis = {cell: tuple(self.basis[cell][i] for i in order) for cell, order in orders.items()}

        def permute(matrices, step):
            result = {}
            for (p, q), matrix in matrices.items():
                target = (p + step[0], q + step[1])
                result[(p, q)] = SparseMatrix(
                    matrix.rows,
                    matrix.cols,
                    {
                        (position[target][i], position[(p, q)][j]): v
                        for (i, j), v in matrix.entries.items()
                    },
                )
            return result

        return Bicomplex(
            basis,
            permute(self.del_, (1, 0)),
            permute(self.delbar, (0, 1)),
            notation=self.notation,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.del_ == other.del_
            and self.delbar == other.delbar
        )

    def __repr__(self) -> str:
        dims = ", ".join(f"{cell}:{len(labels)}" for cell, labels in sorted(self.basis.items()))
        return f"Bicomplex({dims})"

    def dimensions(self) -> dict[Cell, int]:
        return {cell: len(labels) for cell, labels in sorted(self.basis.items())}

    # -- JSON -----------------------------------------------------------

    def to_json(self, style: str = "unicode") -> dict[str, Any]:
        notation = self.notation or _default()
        return {
            "cells": [
                {"p": p, "q": q, "basis": [render_label(l, notation, style) for l in self.basis[(p, q)]]}
                for p, q in self.cells()
            ],
            "del": _matrices_json(self.del_),
            "delbar": _matrices_json(self.delbar),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any], source: str = "<bicomplex>") -> "Bicomplex":
        """Build a complex from the raw-bicomplex JSON format."""
        try:
            basis = {}
            for cell in data.get("cells", []):
                key = (int(cell["p"]), int(cell["q"]))
                names = [str(name) for name in cell.get("basis", [])]
                if len(set(names)) != len(names):
                    raise ValueError(f"duplicate basis names at {key}")
                basis[key] = tuple(SyntheticLabel(name) for name in names)
            dims = {cell: len(labels) for cell, labels in basis.items()}

            def read(section, step):
                matrices = {}
                for block in data.get(section, []):
                    p, q = int(block["p"]), int(block["q"])
                    rows = dims.get((p + step[0], q + step[1]), 0)
                    cols = dims.get((p, q), 0)
                    entries = {}
                    for row, col, value in block.get("entries", []):
                        entries[(int(row), int(col))] = GaussianRational.parse(str(value))
                    matrices[(p, q)] = SparseMatrix(rows, cols, entries)
                return matrices

            return cls(basis, read("del", (1, 0)), read("delbar", (0, 1)))
        except ParseException:
            raise
        except (KeyError, TypeError, ValueError, IndexError) as e:
            raise ParseException(
                ErrorCode.PRS004,
                text=source,
                context={"path": source, "line": 1, "column": 1, "reason": str(e)},
                original_exception=e,
            ) from e


def _default():
    from .forms import DEFAULT_NOTATION

    return DEFAULT_NOTATION


def _matrices_json(matrices: Mapping[Cell, SparseMatrix]) -> list[dict[str, Any]]:
    return [
        {
            "p": p,
            "q": q,
            "entries": [[i, j, str(v)] for (i, j), v in sorted(matrices[(p, q)].entries.items())],
        }
        for p, q in sorted(matrices)
    ]


def label_bidegree(label: Label, complex_: Optional[Bicomplex] = None) -> Optional[Cell]:
    if isinstance(label, FormLabel):
        return label.bidegree
    if complex_ is not None:
        for cell, labels in complex_.basis.items():
            if label in labels:
                return cell
    return None


# -- operations -----------------------------------------------------------


def validate(b: Bicomplex) -> list[str]:
    """Violations of shape consistency and of ∂∂ = 0, ∂̄∂̄ = 0, ∂∂̄ + ∂̄∂ = 0."""
    violations = []
    for (p, q), matrix in sorted(b.del_.items()):
        if matrix.shape != (b.dim(p + 1, q), b.dim(p, q)):
            violations.append(f"∂ at ({p},{q}) has shape {matrix.shape}")
    for (p, q), matrix in sorted(b.delbar.items()):
        if matrix.shape != (b.dim(p, q + 1), b.dim(p, q)):
            violations.append(f"∂̄ at ({p},{q}) has shape {matrix.shape}")
    if violations:
        return violations

    for p, q in b.cells():
        if not (b.del_at(p + 1, q) @ b.del_at(p, q)).is_zero:
            violations.append(f"∂∂ ≠ 0 at ({p},{q})")
        if not (b.delbar_at(p, q + 1) @ b.delbar_at(p, q)).is_zero:
            violations.append(f"∂̄∂̄ ≠ 0 at ({p},{q})")
        anti = b.del_at(p, q + 1) @ b.delbar_at(p, q)
        anti = anti + b.delbar_at(p + 1, q) @ b.del_at(p, q)
        if not anti.is_zero:
            violations.append(f"∂∂̄ + ∂̄∂ ≠ 0 at ({p},{q})")
    return violations


def conjugate(b: Bicomplex) -> Bicomplex:
    """Swap bidegrees and differentials, conjugating entries and labels."""
    basis = {}
    signs = {}
    for (p, q), labels in b.basis.items():
        conjugated = [label.conjugate() for label in labels]
        basis[(q, p)] = tuple(label for label, _ in conjugated)
        signs[(q, p)] = [sign for _, sign in conjugated]

    def flip(matrices, step):
        result = {}
        for (p, q), matrix in matrices.items():
            source = (q, p)
            target = (q + step[1], p + step[0])
            result[source] = SparseMatrix(
                matrix.rows,
                matrix.cols,
                {
                    (i, j): value.conjugate() * (signs[target][i] * signs[source][j])
                    for (i, j), value in matrix.entries.items()
                },
            )
        return result

    # ∂̄ at (p,q) becomes ∂ at (q,p) and vice versa
    new_del = flip(b.delbar, (0, 1))
    new_delbar = flip(b.del_, (1, 0))
    return Bicomplex(basis, new_del, new_delbar, notation=b.notation)


def direct_sum(a: Bicomplex, b: Bicomplex) -> Bicomplex:
    """Block-diagonal sum; labels are tagged only when the two sides collide."""
    collide = any(
        set(a.labels(*cell)) & set(b.labels(*cell)) for cell in set(a.basis) & set(b.basis)
    )

    def tag(labels, side):
        if not collide:
            return tuple(labels)
        return tuple(SyntheticLabel(f"{side}.{label}") for label in labels)

    cells = set(a.basis) | set(b.basis)
    basis = {cell: tag(a.labels(*cell), "0") + tag(b.labels(*cell), "1") for cell in cells}
    new_del = {}
    new_delbar = {}
    for p, q in cells:
        new_del[(p, q)] = block_diagonal([a.del_at(p, q), b.del_at(p, q)])
        new_delbar[(p, q)] = block_diagonal([a.delbar_at(p, q), b.delbar_at(p, q)])
    return Bicomplex(basis, new_del, new_delbar, notation=a.notation or b.notation)


def direct_sum_all(complexes: Iterable[Bicomplex]) -> Bicomplex:
    result = Bicomplex({})
    for index, complex_ in enumerate(complexes):
        result = direct_sum(result, _tagged(complex_, str(index)))
    return result


def _tagged(b: Bicomplex, tag: str) -> Bicomplex:
    basis = {
        cell: tuple(SyntheticLabel(f"{tag}.{label}") for label in labels)
        for cell, labels in b.basis.items()
    }
    return Bicomplex(basis, b.del_, b.delbar)


def shape_complex(shape: Shape) -> Bicomplex:
    """The standard complex C(S) with every nonzero component equal to the field."""
    if not isinstance(shape, Shape):
        shape = Shape.from_cells(shape)
    else:
        shape = Shape.from_cells(shape.cells)
    basis = {
        cell: (SyntheticLabel(f"{shape.label()}@{cell[0]},{cell[1]}"),)
        for cell in shape.cells
    }
    new_del = {}
    new_delbar = {}
    for source, _target, kind in shape.arrows():
        if kind == "del":
            new_del[source] = SparseMatrix(1, 1, {(0, 0): ONE})
        else:
            new_delbar[source] = SparseMatrix(1, 1, {(0, 0): ONE})
    if shape.kind == SQUARE:
        # ∂ along the top edge carries the sign making ∂∂̄ + ∂̄∂ = 0
        p, q = shape.anchor
        new_del[(p, q + 1)] = SparseMatrix(1, 1, {(0, 0): -ONE})
    return Bicomplex(basis, new_del, new_delbar)
