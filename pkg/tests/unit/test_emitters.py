"""Unit tests for the text, JSON and LaTeX emitters."""

import io
import json

import pytest
from rich.console import Console

from solvcohom.emitters import (
    JSONEmitter,
    LaTeXEmitter,
    TextEmitter,
    diamond,
    get_emitter,
)
from solvcohom.models import (
    CellValueModel,
    DecompositionModel,
    DimsModel,
    FormalityModel,
    MasseyModel,
    OutputFormat,
    ReportModel,
)
from solvcohom.shapes import Shape
from solvcohom.decomposition import Decomposition


def table(flavor, values):
    return DimsModel(
        flavor=flavor,
        cells=[CellValueModel(p=p, q=q, value=v) for (p, q), v in values.items()],
    )


@pytest.fixture
def report() -> ReportModel:
    decomposition = Decomposition.from_counter({Shape.dot(0, 0): 1, Shape.horizontal(1, 0): 2})
    return ReportModel(
        source="sample",
        dims=[
            table("dolbeault", {(1, 0): 1, (0, 1): 2}),
            table("bott_chern", {(1, 0): 0, (0, 1): 3}),
        ],
        decomposition=DecompositionModel.from_decomposition(decomposition),
        ddbar_lemma=False,
        formality=FormalityModel(
            ddbar=False,
            strong=False,
            weak=False,
            dolbeault=True,
            geometric_bc_obstructed=True,
            massey_witness="⟨[a], [b], [c]⟩ ≠ 0 at (1, 2)",
            triples_examined=1,
        ),
        massey=MasseyModel(
            inputs=["a", "b", "c"],
            bidegree=(1, 2),
            representative="a",
            quotient_dimension=1,
            nonvanishing=True,
        ),
    )


class TestEmitterInterface:
    """Test shared behaviour"""

    def test_get_emitter(self, report):
        """Test lookup by format"""
        assert isinstance(get_emitter("text", report), TextEmitter)
        assert isinstance(get_emitter(OutputFormat.JSON, report), JSONEmitter)
        assert isinstance(get_emitter("latex", report), LaTeXEmitter)

    def test_extensions(self, report):
        """Test artifact extensions"""
        assert get_emitter("text", report).extension == "txt"
        assert get_emitter("json", report).extension == "json"
        assert get_emitter("latex", report).extension == "tex"

    def test_rows(self, report):
        """Test that rows follow the first table"""
        assert TextEmitter(report).rows() == [((1, 0), [1, 0]), ((0, 1), [2, 3])]

    def test_mismatched_tables(self):
        """Test that tables must cover the same cells"""
        bad = ReportModel(
            source="bad",
            dims=[table("dolbeault", {(1, 0): 1}), table("bott_chern", {(0, 1): 1})],
        )
        with pytest.raises(ValueError):
            TextEmitter(bad)


class TestTextEmitter:
    """Test the plain-text report"""

    def test_render(self, report):
        """Test the sections"""
        text = TextEmitter(report).render()
        lines = text.splitlines()
        assert lines[0] == "# sample"
        assert lines[1] == "(p,q)  h_∂̄  h_BC"
        assert "dots: D^{0,0}" in text
        assert "horizontal lines: (S_h^{1,0})^2" in text
        assert "∂∂̄-lemma: no" in text
        assert "  dolbeault: yes" in text
        assert "  bidegree: (1,2)" in text
        assert text.endswith("\n")

    def test_diamond_option(self, report):
        """Test diamonds under each table"""
        text = TextEmitter(report, {"diamond": True}).render()
        assert "h_∂̄:" in text

    def test_diamond(self):
        """Test the rotated grid"""
        assert diamond({(0, 0): 1, (1, 0): 2, (0, 1): 3, (1, 1): 4}) == "  1\n3   2\n  4"
        assert diamond({}) == ""

    def test_print_rich(self, report):
        """Test the terminal rendering"""
        buffer = io.StringIO()
        TextEmitter(report).print_rich(Console(file=buffer, width=120, color_system=None))
        output = buffer.getvalue()
        assert "sample" in output
        assert "h_BC" in output
        assert "nonvanishing: yes" in output


class TestJSONEmitter:
    """Test the JSON report"""

    def test_round_trip(self, report):
        """Test that the output parses back into the same report"""
        text = JSONEmitter(report).render()
        assert ReportModel.model_validate_json(text) == report

    def test_none_fields_omitted(self, report):
        """Test that absent sections are left out"""
        data = json.loads(JSONEmitter(report).render())
        assert "betti" not in data
        assert data["massey"]["bidegree"] == [1, 2]


class TestLaTeXEmitter:
    """Test the LaTeX report"""

    def test_table(self, report):
        """Test header and rows"""
        text = LaTeXEmitter(report).render()
        assert text.startswith("%% sample\n")
        assert "\\begin{tabular}{c|cc}" in text
        assert "$(1,0)$ & 1 & 0 \\\\" in text
        assert "$h_{\\bar\\partial}^{p,q}$" in text

    def test_decomposition_and_verdicts(self, report):
        """Test the itemised shapes and the verdict table"""
        text = LaTeXEmitter(report).render()
        assert "\\item dots: $D^{0,0}$" in text
        assert "(S_h^{1,0})^{\\oplus 2}" in text
        assert "strong & --" in text
        assert "dolbeault & \\checkmark" in text
        assert "Massey product & nonzero" in text
