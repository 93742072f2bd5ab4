"""
The finite complexes B, C = B + B̄ and the closure algebra B ∧ B̄.
"""

import logging
from collections.abc import Iterable, Mapping

from ..bicomplex import Bicomplex, CochainElement, conjugate
from ..core.exceptions import BidegreeMismatchException, InternalInconsistencyException
from ..forms import FormLabel, Notation, del_terms, delbar_terms, label_sort_key, wedge_labels
from ..linalg import SparseMatrix
from ..scalar import ZERO
from ..shapes import Cell
from .splitting import SplittingData

logger = logging.getLogger(__name__)


def notation_for(data: SplittingData) -> Notation:
    return Notation(t=data.t, base=data.base)


def assemble(labels: Iterable[FormLabel], base, notation=None) -> Bicomplex:
    """Complex spanned by ``labels`` with ∂ and ∂̄ from the exponential rule.

    Every differential must land inside the span; a missing target label is
    an internal inconsistency.
    """
    by_cell: dict[Cell, list[FormLabel]] = {}
    for label in set(labels):
        by_cell.setdefault(label.bidegree, []).append(label)
    basis = {cell: tuple(sorted(ls, key=label_sort_key)) for cell, ls in by_cell.items()}
    index = {cell: {label: i for i, label in enumerate(ls)} for cell, ls in basis.items()}

    def matrices(rule, step):
        result = {}
        for (p, q), labels_here in basis.items():
            target = (p + step[0], q + step[1])
            entries = {}
            for j, label in enumerate(labels_here):
                for coefficient, image in rule(label, base):
                    row = index.get(target, {}).get(image)
                    if row is None:
                        raise InternalInconsistencyException(
                            f"differential of {label} leaves the complex at {target}"
                        )
                    entries[(row, j)] = entries.get((row, j), ZERO) + coefficient
            if entries:
                result[(p, q)] = SparseMatrix(len(basis.get(target, ())), len(labels_here), entries)
        return result

    complex_ = Bicomplex(basis, matrices(del_terms, (1, 0)), matrices(delbar_terms, (0, 1)), notation)
    logger.debug(f"assembled complex with {complex_.total_dimension()} generators")
    return complex_


def b_labels(data: SplittingData) -> list[FormLabel]:
    return [generator.label for generator in data.generators()]


def bbar_labels(data: SplittingData) -> list[FormLabel]:
    return [label.conjugate()[0] for label in b_labels(data)]


def build_B(data: SplittingData) -> Bicomplex:
    """The complex B: admissible twisted monomials, with ∂̄ ≡ 0."""
    complex_ = assemble(b_labels(data), data.base, notation_for(data))
    if complex_.delbar:
        raise InternalInconsistencyException("∂̄ does not vanish on B")
    return complex_


def build_C(data: SplittingData) -> Bicomplex:
    """C = B + B̄, identifying labels common to both sides."""
    labels = set(b_labels(data)) | set(bbar_labels(data))
    return assemble(labels, data.base, notation_for(data))


def closure_labels(data: SplittingData) -> set[FormLabel]:
    result = set()
    bbar = bbar_labels(data)
    for left in b_labels(data):
        for right in bbar:
            wedge = wedge_labels(left, right)
            if wedge is not None:
                result.add(wedge[1])
    return result


class ClosureAlgebra(Bicomplex):
    """B ∧ B̄ together with its wedge product."""

    def wedge(self, u: CochainElement, v: CochainElement) -> CochainElement:
        p, q = u.bidegree
        r, s = v.bidegree
        target = (p + r, q + s)
        coefficients = [ZERO] * self.dim(*target)
        left_labels = self.labels(p, q)
        right_labels = self.labels(r, s)
        for a, x in zip(left_labels, u.coefficients):
            if not x:
                continue
            for b, y in zip(right_labels, v.coefficients):
                if not y:
                    continue
                wedge = wedge_labels(a, b)
                if wedge is None:
                    continue
                sign, label = wedge
                index = self.index_of(label)
                if index is None:
                    raise InternalInconsistencyException(f"closure not closed under {a} ∧ {b}")
                coefficients[index] = coefficients[index] + x * y * sign
        return CochainElement(target, tuple(coefficients))

    def wedge_checked(self, u: CochainElement, v: CochainElement, expected: Cell) -> CochainElement:
        result = self.wedge(u, v)
        if result.bidegree != expected:
            raise BidegreeMismatchException(expected, result.bidegree)
        return result

    def conjugate_symmetric(self) -> bool:
        return set(self._all_labels()) == {label.conjugate()[0] for label in self._all_labels()}

    def _all_labels(self):
        for labels in self.basis.values():
            yield from labels


def build_closure(data: SplittingData) -> ClosureAlgebra:
    """The smallest bigraded algebra containing C: all wedges of B with B̄."""
    base_complex = assemble(closure_labels(data), data.base, notation_for(data))
    return ClosureAlgebra(
        base_complex.basis, base_complex.del_, base_complex.delbar, base_complex.notation
    )


def labels_of(complex_: Bicomplex) -> set:
    return {label for labels in complex_.basis.values() for label in labels}


def is_conjugation_fixed(complex_: Bicomplex) -> bool:
    """Label-level equality of a complex with its conjugate."""
    return labels_of(complex_) == labels_of(conjugate(complex_))


def dims_of(complex_: Bicomplex) -> Mapping[Cell, int]:
    return complex_.dimensions()
