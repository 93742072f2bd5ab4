"""
Base class for the report emitters.

Each emitter turns a :class:`ReportModel` into the bytes written to stdout or
to an artifact file. Rendering must be deterministic.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional

from ..cohomology import Flavor
from ..models import OutputFormat, ReportModel

FLAVOR_TITLES = {
    Flavor.DOLBEAULT.value: "h_∂̄",
    Flavor.CONJ_DOLBEAULT.value: "h_∂",
    Flavor.BOTT_CHERN.value: "h_BC",
    Flavor.AEPPLI.value: "h_A",
}


class EmitterInterface(ABC):
    """Abstract base class for all emitters"""

    def __init__(self, report: ReportModel, config: Optional[dict[str, Any]] = None):
        """
        Initialize emitter with a report and configuration

        Args:
            report: Computed report
            config: Emitter-specific configuration
        """
        self.report = report
        self.config = config or {}
        self.validate_report()

    def validate_report(self) -> None:
        """Check that every dims table covers the same cells"""
        shapes = {tuple((c.p, c.q) for c in table.cells) for table in self.report.dims}
        if len(shapes) > 1:
            raise ValueError("dimension tables cover different cells")

    @abstractmethod
    def render(self) -> str:
        """Render the report to a string"""
        pass

    @property
    @abstractmethod
    def output_format(self) -> OutputFormat:
        """The format this emitter produces"""
        pass

    @property
    def extension(self) -> str:
        return {"text": "txt", "json": "json", "latex": "tex"}[self.output_format.value]

    def rows(self) -> list[tuple[tuple[int, int], list[int]]]:
        """``((p, q), [value per dims table])`` in table order."""
        if not self.report.dims:
            return []
        tables = [table.as_dict() for table in self.report.dims]
        order = [(c.p, c.q) for c in self.report.dims[0].cells]
        return [(cell, [table[cell] for table in tables]) for cell in order]
