"""
LaTeX emitter: dimension tables in the usual row order, the decomposition
as lists of dots and lines, and formality verdicts.
"""

from jinja2 import Environment, PackageLoader, StrictUndefined

from ..cohomology import Flavor
from ..models import OutputFormat
from .base import EmitterInterface

LATEX_TITLES = {
    Flavor.DOLBEAULT.value: r"h_{\bar\partial}^{p,q}",
    Flavor.CONJ_DOLBEAULT.value: r"h_{\partial}^{p,q}",
    Flavor.BOTT_CHERN.value: r"h_{BC}^{p,q}",
    Flavor.AEPPLI.value: r"h_{A}^{p,q}",
}

_environment = Environment(
    loader=PackageLoader("solvcohom.emitters", "templates"),
    block_start_string=r"\BLOCK{",
    block_end_string="}",
    variable_start_string=r"\VAR{",
    variable_end_string="}",
    comment_start_string=r"\#{",
    comment_end_string="}",
    trim_blocks=True,
    lstrip_blocks=True,
    autoescape=False,
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)


class LaTeXEmitter(EmitterInterface):
    @property
    def output_format(self) -> OutputFormat:
        return OutputFormat.LATEX

    def render(self) -> str:
        template = _environment.get_template("report.tex.j2")
        return template.render(
            source=self.report.source,
            columns=[LATEX_TITLES.get(t.flavor, t.flavor) for t in self.report.dims],
            rows=self.rows(),
            decomposition=self._decomposition(),
            verdicts=self._verdicts(),
        )

    def _decomposition(self) -> list[tuple[str, str]]:
        model = self.report.decomposition
        if model is None:
            return []
        titles = {"D": "dots", "Sh": "horizontal lines", "Sv": "vertical lines", "square": "squares"}
        groups: dict[str, list[str]] = {title: [] for title in titles.values()}
        groups["zigzags"] = []
        for shape, mult in model.to_decomposition().entries:
            label = shape.label().replace("Sq^", r"\square^")
            groups[titles.get(shape.name, "zigzags")].append(label if mult == 1 else f"({label})^{{\\oplus {mult}}}")
        return [(title, r" \oplus ".join(items) if items else r"\emptyset") for title, items in groups.items()]

    def _verdicts(self) -> list[tuple[str, str]]:
        verdicts = []
        if self.report.formality is not None:
            for key, value in self.report.formality.model_dump().items():
                if isinstance(value, bool):
                    verdicts.append((key.replace("_", r"\_"), r"\checkmark" if value else "--"))
        if self.report.massey is not None:
            verdicts.append(("Massey product", "nonzero" if self.report.massey.nonvanishing else "zero"))
        return verdicts
