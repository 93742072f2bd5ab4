"""
Formality verdicts and triple Aeppli-Bott-Chern-Massey products.

Massey products are evaluated in the closure algebra B ∧ B̄, which is
closed under the wedge product while C = B + B̄ in general is not.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .bicomplex import Bicomplex, CochainElement, conjugate
from .builder.cases import FAMILY_ALIASES
from .builder.complexes import ClosureAlgebra, build_B, build_C, build_closure, labels_of
from .builder.splitting import SplittingData
from .cohomology import aeppli, ddbar_lemma, in_boundary_span
from .core.config import EngineConfig
from .core.errors import ErrorCode
from .core.exceptions import (
    BidegreeMismatchException,
    InternalInconsistencyException,
    NotClosedException,
    ParseException,
    SolvcohomException,
    UndefinedProductException,
)
from .decomposition import decompose
from .forms import parse_monomial
from .linalg import solve, span_rank
from .shapes import Cell

logger = logging.getLogger(__name__)


# Nonvanishing triples in the notation of the built complexes, keyed by
# (family, case). Cases whose only squares are T^{∓2}T̄^{±2}dz_{121̄2̄}
# carry no nonvanishing triple and are left to the scan.
WITNESSES: dict[tuple[str, str], tuple[str, str, str]] = {
    ("g1", "i"): ("T dz_{32̄}", "T̄^{-1}dz_{1̄3̄}", "T̄ dz_{23̄}"),
    ("g8", "ii"): ("T^{-1}dz_{13}", "T̄ dz_{2̄3̄}", "T̄^{-1}dz_{1̄3̄}"),
    ("g8", "iii"): ("T̄^{-1}dz_{13̄}", "T dz_{32̄}", "T^{-1}dz_{31̄}"),
}
WITNESSES[("g8", "vii")] = WITNESSES[("g1", "i")]
WITNESSES[("g2", "odd")] = WITNESSES[("g1", "i")]


@dataclass(frozen=True)
class BottChernClass:
    bidegree: Cell
    representative: CochainElement
    name: str = ""

    def __post_init__(self):
        if self.representative.bidegree != self.bidegree:
            raise BidegreeMismatchException(self.bidegree, self.representative.bidegree)


@dataclass
class MasseyResult:
    inputs: tuple[BottChernClass, BottChernClass, BottChernClass]
    representative: CochainElement
    quotient_dimension: int
    nonvanishing: bool
    primitives: tuple[CochainElement, CochainElement]

    @property
    def bidegree(self) -> Cell:
        return self.representative.bidegree


def bc_class(alg: Bicomplex, text: str) -> BottChernClass:
    """A class given by one monomial of ``alg``, e.g. ``T^{-2}dz_{131̄}``."""
    sign, label = parse_monomial(text, alg.notation)
    if alg.index_of(label) is None:
        raise ParseException(
            ErrorCode.PRS002,
            text=text,
            column=1,
            context={"reason": "not a generator of the closure algebra"},
        )
    element = alg.basis_element(label).scale(sign)
    return BottChernClass(label.bidegree, element, text.strip())


def _check_closed(alg: Bicomplex, cls: BottChernClass) -> None:
    if not (alg.apply_del(cls.representative).is_zero and alg.apply_delbar(cls.representative).is_zero):
        raise NotClosedException(cls.name or "class", cls.bidegree)


def _sign(cell: Cell) -> int:
    return -1 if (cell[0] + cell[1]) % 2 else 1


def _primitive(alg: ClosureAlgebra, element: CochainElement, name: str) -> CochainElement:
    """x with ∂∂̄x = element."""
    p, q = element.bidegree
    source = (p - 1, q - 1)
    solution = solve(alg.ddbar_at(*source), element.coefficients)
    if solution is None:
        raise UndefinedProductException(name, element.bidegree)
    return CochainElement(source, solution)


def massey_abc(
    alg: ClosureAlgebra,
    a12: BottChernClass,
    a23: BottChernClass,
    a34: BottChernClass,
    adjust: Optional[tuple[CochainElement, CochainElement]] = None,
) -> MasseyResult:
    """⟨a12, a23, a34⟩ in H_A modulo a12 ∪ H_A + H_A ∪ a34.

    ``adjust`` adds ∂∂̄-closed corrections to the two primitives; the verdict
    does not depend on them.
    """
    for cls in (a12, a23, a34):
        _check_closed(alg, cls)
    first = alg.wedge(a12.representative, a23.representative).scale(_sign(a12.bidegree))
    second = alg.wedge(a23.representative, a34.representative).scale(_sign(a23.bidegree))
    x = _primitive(alg, first, f"{a12.name or 'a12'} ∪ {a23.name or 'a23'}")
    y = _primitive(alg, second, f"{a23.name or 'a23'} ∪ {a34.name or 'a34'}")
    if adjust is not None:
        x, y = x + adjust[0], y + adjust[1]

    representative = alg.wedge(a12.representative, y).scale(_sign(a12.bidegree)) - alg.wedge(
        x, a34.representative
    ).scale(_sign(a23.bidegree))
    if any(alg.ddbar_at(*representative.bidegree).apply(representative.coefficients)):
        raise InternalInconsistencyException("Massey representative is not ∂∂̄-closed")

    denominator = [
        alg.wedge(a12.representative, h).coefficients
        for h in aeppli(alg, *y.bidegree).representatives
    ] + [
        alg.wedge(h, a34.representative).coefficients
        for h in aeppli(alg, *x.bidegree).representatives
    ]
    target = representative.bidegree
    size = alg.dim(*target)
    boundaries = [
        v
        for v in list(alg.del_at(target[0] - 1, target[1]).columns())
        + list(alg.delbar_at(target[0], target[1] - 1).columns())
        if any(v)
    ]
    extra = [v for v in denominator if any(v)]
    denominator_rank = span_rank(boundaries + extra, size) - span_rank(boundaries, size)
    quotient_dimension = aeppli(alg, *target).dimension - denominator_rank
    nonvanishing = not in_boundary_span(alg, representative, extra)
    logger.debug(
        f"Massey product at {target}: nonvanishing={nonvanishing}, quotient dimension {quotient_dimension}"
    )
    return MasseyResult((a12, a23, a34), representative, quotient_dimension, nonvanishing, (x, y))


def strong_formality(data: SplittingData) -> bool:
    """B = B̄ as label sets, with both differentials vanishing on B."""
    b = build_B(data)
    return labels_of(b) == labels_of(conjugate(b)) and b.has_zero_differentials


def _closed_monomials(alg: ClosureAlgebra, max_degree: int) -> list[BottChernClass]:
    """Basis monomials that are ∂- and ∂̄-closed and not ∂∂̄-exact."""
    result = []
    for cell in alg.cells():
        if not 1 <= cell[0] + cell[1] <= max_degree:
            continue
        exact = [v for v in alg.ddbar_at(cell[0] - 1, cell[1] - 1).columns() if any(v)]
        for label in alg.labels(*cell):
            element = alg.basis_element(label)
            if not (alg.apply_del(element).is_zero and alg.apply_delbar(element).is_zero):
                continue
            if exact and span_rank(exact + [element.coefficients], alg.dim(*cell)) == span_rank(
                exact, alg.dim(*cell)
            ):
                continue
            result.append(BottChernClass(cell, element, str(label)))
    return result


@dataclass
class ScanResult:
    witness: Optional[MasseyResult]
    examined: int


def scan_massey(alg: ClosureAlgebra, budget: int, max_degree: int = 4) -> ScanResult:
    """Search basis-monomial triples for a nonvanishing Massey product."""
    classes = _closed_monomials(alg, max_degree)
    exactness: dict[tuple[int, int], bool] = {}

    def defined(i: int, j: int) -> bool:
        if (i, j) not in exactness:
            product_ = alg.wedge(classes[i].representative, classes[j].representative)
            ddbar = alg.ddbar_at(product_.bidegree[0] - 1, product_.bidegree[1] - 1)
            exactness[(i, j)] = solve(ddbar, product_.coefficients) is not None
        return exactness[(i, j)]

    examined = 0
    for i, j, k in product(range(len(classes)), repeat=3):
        if examined >= budget:
            break
        if not (defined(i, j) and defined(j, k)):
            continue
        examined += 1
        result = massey_abc(alg, classes[i], classes[j], classes[k])
        if result.nonvanishing:
            logger.info(f"Massey scan found a witness after {examined} triples")
            return ScanResult(result, examined)
    logger.info(f"Massey scan examined {examined} triples")
    return ScanResult(None, examined)


def describe_triple(alg: Bicomplex, result: MasseyResult) -> str:
    names = ", ".join(f"[{alg.describe(cls.representative)}]" for cls in result.inputs)
    return f"⟨{names}⟩ ≠ 0 at {result.bidegree}"


def catalogue_witness(alg: ClosureAlgebra, family: str, case: str) -> Optional[MasseyResult]:
    triple = WITNESSES.get((FAMILY_ALIASES.get(family, family), case))
    if triple is None:
        return None
    try:
        classes = [bc_class(alg, text) for text in triple]
        result = massey_abc(alg, *classes)
    except SolvcohomException as e:
        logger.warning(f"catalogue triple for {family}-{case} unusable: {e}")
        return None
    return result if result.nonvanishing else None


@dataclass
class FormalityReport:
    weak: bool
    ddbar: Optional[bool] = None
    strong: Optional[bool] = None
    dolbeault: Optional[bool] = None
    geometric_bc_obstructed: Optional[bool] = None
    massey_witness: Optional[str] = None
    triples_examined: int = 0
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "ddbar": self.ddbar,
            "strong": self.strong,
            "weak": self.weak,
            "dolbeault": self.dolbeault,
            "geometric_bc_obstructed": self.geometric_bc_obstructed,
            "massey_witness": self.massey_witness,
            "triples_examined": self.triples_examined,
            "notes": list(self.notes),
        }


def formality_report(data: SplittingData, config: Optional[EngineConfig] = None) -> FormalityReport:
    """Verdicts for one manifold; strong, weak and ∂∂̄ are cross-checked."""
    config = config or EngineConfig()
    ddbar = ddbar_lemma(build_C(data)).holds
    strong = strong_formality(data)
    if strong != ddbar:
        raise InternalInconsistencyException(
            f"strong formality {strong} but ∂∂̄-lemma {ddbar} for {data.family}-{data.case}"
        )
    closure = build_closure(data)
    weak = not decompose(closure).has_squares
    notes = []
    if data.dimension == 3:
        if weak != strong:
            raise InternalInconsistencyException(
                f"weak formality {weak} but strong formality {strong} in complex dimension 3"
            )
    else:
        notes.append("weak formality read off the no-squares criterion on B ∧ B̄")

    witness = catalogue_witness(closure, data.family, data.case)
    examined = 1 if witness is not None else 0
    if witness is None:
        scan = scan_massey(closure, config.scan_budget, config.max_total_degree)
        witness, examined = scan.witness, scan.examined
    if witness is not None and strong:
        raise InternalInconsistencyException("nonvanishing Massey product on a strongly formal manifold")
    if witness is None and not strong:
        notes.append(f"no nonvanishing triple among {examined} examined")

    return FormalityReport(
        weak=weak,
        ddbar=ddbar,
        strong=strong,
        dolbeault=True,
        geometric_bc_obstructed=witness is not None,
        massey_witness=describe_triple(closure, witness) if witness is not None else None,
        triples_examined=examined,
        notes=notes,
    )


def raw_formality_report(complex_: Bicomplex) -> FormalityReport:
    """Weak formality of a bare bicomplex; the other verdicts need a manifold."""
    weak = not decompose(complex_).has_squares
    return FormalityReport(
        weak=weak,
        notes=[
            "weak formality read off the no-squares criterion; it matches strong "
            "formality only for splitting-type manifolds of complex dimension 3"
        ],
    )
