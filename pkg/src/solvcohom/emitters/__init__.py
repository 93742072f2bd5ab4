"""
Report emitters for text, JSON and LaTeX output.
"""

from typing import Any, Optional

from ..models import OutputFormat, ReportModel
from .base import EmitterInterface
from .json_emitter import JSONEmitter
from .latex import LaTeXEmitter
from .text import TextEmitter, diamond

EMITTERS: dict[OutputFormat, type[EmitterInterface]] = {
    OutputFormat.TEXT: TextEmitter,
    OutputFormat.JSON: JSONEmitter,
    OutputFormat.LATEX: LaTeXEmitter,
}


def get_emitter(
    output_format: OutputFormat, report: ReportModel, config: Optional[dict[str, Any]] = None
) -> EmitterInterface:
    return EMITTERS[OutputFormat(output_format)](report, config)


__all__ = [
    "EMITTERS",
    "EmitterInterface",
    "JSONEmitter",
    "LaTeXEmitter",
    "TextEmitter",
    "diamond",
    "get_emitter",
]
