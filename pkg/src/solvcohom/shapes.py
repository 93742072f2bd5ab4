"""
Shapes of the indecomposable bounded double complexes: squares and zigzags.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from .core.exceptions import MalformedShapeException

Cell = tuple[int, int]

SQUARE = "square"
ZIGZAG = "zigzag"


@dataclass(frozen=True)
class Shape:
    """Cell set of a square or a zigzag."""

    kind: str
    cells: frozenset

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Shape":
        """Classify a cell set, raising :class:`MalformedShapeException` if invalid."""
        cell_set = frozenset((int(p), int(q)) for p, q in cells)
        if not cell_set:
            raise MalformedShapeException(sorted(cell_set))
        if _is_square(cell_set):
            return cls(SQUARE, cell_set)
        if _is_zigzag(cell_set):
            return cls(ZIGZAG, cell_set)
        raise MalformedShapeException(sorted(cell_set))

    @classmethod
    def dot(cls, p: int, q: int) -> "Shape":
        return cls(ZIGZAG, frozenset({(p, q)}))

    @classmethod
    def horizontal(cls, p: int, q: int) -> "Shape":
        return cls(ZIGZAG, frozenset({(p, q), (p + 1, q)}))

    @classmethod
    def vertical(cls, p: int, q: int) -> "Shape":
        return cls(ZIGZAG, frozenset({(p, q), (p, q + 1)}))

    @classmethod
    def square(cls, p: int, q: int) -> "Shape":
        return cls(SQUARE, frozenset({(p, q), (p + 1, q), (p, q + 1), (p + 1, q + 1)}))

    @property
    def anchor(self) -> Cell:
        return min(self.cells)

    @property
    def name(self) -> str:
        """``D``, ``Sh``, ``Sv``, ``square`` or ``zigzag``."""
        if self.kind == SQUARE:
            return "square"
        if len(self.cells) == 1:
            return "D"
        if len(self.cells) == 2:
            (p0, q0), (p1, q1) = sorted(self.cells)
            return "Sh" if q0 == q1 else "Sv"
        return "zigzag"

    @property
    def is_dot(self) -> bool:
        return self.kind == ZIGZAG and len(self.cells) == 1

    @property
    def is_line(self) -> bool:
        return self.kind == ZIGZAG and len(self.cells) == 2

    def sort_key(self) -> tuple:
        p_min = min(p for p, _ in self.cells)
        q_min = min(q for _, q in self.cells)
        return (p_min, q_min, self.kind, len(self.cells), tuple(sorted(self.cells)))

    def label(self) -> str:
        """Display name such as ``D^{1,1}`` or ``S_h^{1,2}``."""
        p, q = self.anchor
        if self.kind == SQUARE:
            return f"Sq^{{{p},{q}}}"
        return {
            "D": f"D^{{{p},{q}}}",
            "Sh": f"S_h^{{{p},{q}}}",
            "Sv": f"S_v^{{{p},{q}}}",
        }.get(self.name, "Z{" + ",".join(f"({a},{b})" for a, b in sorted(self.cells)) + "}")

    def arrows(self) -> list[tuple[Cell, Cell, str]]:
        """Adjacent cell pairs joined by ∂ (``del``) or ∂̄ (``delbar``) arrows."""
        arrows = []
        for p, q in sorted(self.cells):
            if (p + 1, q) in self.cells:
                arrows.append(((p, q), (p + 1, q), "del"))
            if (p, q + 1) in self.cells:
                arrows.append(((p, q), (p, q + 1), "delbar"))
        return arrows


def _is_square(cells: frozenset) -> bool:
    if len(cells) != 4:
        return False
    p, q = min(cells)
    return cells == {(p, q), (p + 1, q), (p, q + 1), (p + 1, q + 1)}


def _is_zigzag(cells: frozenset) -> bool:
    degrees = {p + q for p, q in cells}
    if len(cells) == 1:
        return True
    if len(degrees) != 2 or max(degrees) - min(degrees) != 1:
        return False
    # connected through horizontal/vertical neighbours
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        p, q = stack.pop()
        for neighbour in ((p + 1, q), (p - 1, q), (p, q + 1), (p, q - 1)):
            if neighbour in cells and neighbour not in seen:
                seen.add(neighbour)
                stack.append(neighbour)
    return seen == cells
