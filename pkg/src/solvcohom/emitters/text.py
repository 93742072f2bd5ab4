"""
Plain-text emitter, with an optional rich rendering for terminals.
"""

from rich.console import Console
from rich.table import Table

from ..models import DecompositionModel, OutputFormat
from ..decomposition import render_ascii
from .base import FLAVOR_TITLES, EmitterInterface


def diamond(values: dict[tuple[int, int], int]) -> str:
    """Dimension grid printed as a rotated diamond, h^{0,0} on top."""
    if not values:
        return ""
    d = max(max(p, q) for p, q in values)
    width = max(len(str(v)) for v in values.values())
    lines = []
    for i in range(2 * d + 1):
        slots = [""] * (2 * d + 1)
        start = abs(d - i)
        for offset, j in enumerate(range(max(0, i - d), min(i, d) + 1)):
            slots[start + 2 * offset] = str(values.get((j, i - j), 0))
        lines.append(" ".join(slot.center(width) for slot in slots).rstrip())
    return "\n".join(lines)


class TextEmitter(EmitterInterface):
    """Human-readable report"""

    @property
    def output_format(self) -> OutputFormat:
        return OutputFormat.TEXT

    def render(self) -> str:
        return "\n".join(self._sections(with_table=True)) + "\n"

    def _sections(self, with_table: bool) -> list[str]:
        report = self.report
        out = [f"# {report.source}"]
        if report.dims:
            if with_table:
                out.append(self._dims_table())
            for table in report.dims:
                if self.config.get("diamond"):
                    out.append(f"\n{FLAVOR_TITLES.get(table.flavor, table.flavor)}:")
                    out.append(diamond(table.as_dict()))
                if table.representatives:
                    out.append(f"\n{FLAVOR_TITLES.get(table.flavor, table.flavor)} generators:")
                    for cell, reps in table.representatives.items():
                        out.append(f"  ({cell}): [{', '.join(reps)}]")
        if report.generators is not None:
            out.append("\nbasis:")
            for cell, labels in report.generators.items():
                out.append(f"  ({cell}): {', '.join(labels)}")
        if report.decomposition is not None:
            out.append("\n" + self._decomposition(report.decomposition))
            out.append(f"∂∂̄-lemma: {'yes' if report.ddbar_lemma else 'no'}")
        if report.betti is not None:
            out.append("\nBetti numbers:")
            out.extend(f"  b_{k} = {v}" for k, v in report.betti.items())
        if report.formality is not None:
            out.append("\nformality:")
            for key, value in report.formality.model_dump().items():
                if key == "notes":
                    out.extend(f"  note: {note}" for note in value)
                elif value is not None:
                    out.append(f"  {key}: {_yes_no(value)}")
        if report.massey is not None:
            m = report.massey
            out.append("\nMassey product:")
            out.append(f"  inputs: {'; '.join(m.inputs)}")
            out.append(f"  bidegree: ({m.bidegree[0]},{m.bidegree[1]})")
            out.append(f"  representative: {m.representative}")
            out.append(f"  quotient dimension: {m.quotient_dimension}")
            out.append(f"  nonvanishing: {_yes_no(m.nonvanishing)}")
        if report.diagram is not None:
            out.append("\n" + report.diagram)
        return out

    def _dims_table(self) -> str:
        titles = ["(p,q)"] + [FLAVOR_TITLES.get(t.flavor, t.flavor) for t in self.report.dims]
        body = [[f"({p},{q})"] + [str(v) for v in values] for (p, q), values in self.rows()]
        widths = [max(len(row[i]) for row in [titles] + body) for i in range(len(titles))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in [titles] + body]
        return "\n".join(lines)

    @staticmethod
    def _decomposition(model: DecompositionModel) -> str:
        decomposition = model.to_decomposition()
        groups = {"dots": [], "horizontal lines": [], "vertical lines": [], "squares": [], "zigzags": []}
        for shape, mult in decomposition.entries:
            key = {"D": "dots", "Sh": "horizontal lines", "Sv": "vertical lines", "square": "squares"}.get(
                shape.name, "zigzags"
            )
            groups[key].append(shape.label() if mult == 1 else f"({shape.label()})^{mult}")
        lines = ["decomposition:"]
        for key, items in groups.items():
            lines.append(f"  {key}: {' ⊕ '.join(items) if items else '∅'}")
        grid = render_ascii(decomposition)
        if grid:
            lines.append("")
            lines.append(grid)
        return "\n".join(lines)

    def print_rich(self, console: Console) -> None:
        """Coloured tables for interactive terminals."""
        if self.report.dims:
            table = Table(title=self.report.source)
            table.add_column("(p,q)", style="cyan")
            for dims in self.report.dims:
                table.add_column(FLAVOR_TITLES.get(dims.flavor, dims.flavor), justify="right")
            for (p, q), values in self.rows():
                table.add_row(f"({p},{q})", *(str(v) for v in values))
            console.print(table)
            rest = self._sections(with_table=False)[1:]
        else:
            rest = self._sections(with_table=False)
        if rest:
            console.print("\n".join(rest), highlight=False, markup=False)


def _yes_no(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)
