from ..models import OutputFormat
from .base import EmitterInterface


class JSONEmitter(EmitterInterface):
    """Report as indented JSON; round-trips through :class:`ReportModel`."""

    @property
    def output_format(self) -> OutputFormat:
        return OutputFormat.JSON

    def render(self) -> str:
        return self.report.model_dump_json(indent=2, exclude_none=True) + "\n"
