"""Unit tests for the request and report models."""

import pytest
from pydantic import ValidationError

from solvcohom.models import (
    CellValueModel,
    DecompositionEntryModel,
    DecompositionModel,
    DimsModel,
    EmitTarget,
    OutputFormat,
    ReportModel,
    RunRequest,
)
from solvcohom.shapes import Shape
from tests.fixtures.golden_tables import GoldenTables


class TestRunRequest:
    """Test request validation"""

    def test_defaults(self):
        """Test that dims in text is the default output"""
        request = RunRequest(family="g8", case="v")
        assert request.emit == [EmitTarget.DIMS]
        assert request.format == OutputFormat.TEXT
        assert request.massey is None

    def test_emit_is_deduplicated(self):
        """Test that repeated targets collapse in order"""
        request = RunRequest(family="g1", case="i", emit=["dims", "formality", "dims"])
        assert request.emit == [EmitTarget.DIMS, EmitTarget.FORMALITY]

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"family": "g8", "emit": []},
            {"emit": ["dims"]},
            {"family": "g8", "bicomplex_path": "f.json"},
            {"bicomplex_path": "f.json", "emit": ["massey"]},
            {"family": "g8", "emit": ["pictures"]},
            {"family": "g8", "format": "pdf"},
        ],
    )
    def test_invalid(self, kwargs):
        """Test rejected combinations"""
        with pytest.raises(ValidationError):
            RunRequest(**kwargs)

    @pytest.mark.parametrize("emit", [["formality"], ["generators"], ["formality", "generators"]])
    def test_raw_bicomplex_targets(self, emit):
        """Formality and generators work on a raw bicomplex"""
        request = RunRequest(bicomplex_path="f.json", emit=emit)
        assert [t.value for t in request.emit] == emit

    def test_frozen(self):
        """Test that requests are immutable"""
        request = RunRequest(family="g8", case="i")
        with pytest.raises(ValidationError):
            request.case = "ii"


class TestReportModels:
    """Test report containers"""

    def test_dims_as_dict(self):
        """Test the cell mapping"""
        model = DimsModel(flavor="dolbeault", cells=[CellValueModel(p=1, q=0, value=3)])
        assert model.as_dict() == {(1, 0): 3}

    def test_decomposition_round_trip(self):
        """Test that shapes survive the model"""
        decomposition = GoldenTables.decomposition("g8", "ii")
        model = DecompositionModel.from_decomposition(decomposition)
        assert model.to_decomposition() == decomposition

    def test_entry_fields(self):
        """Test the serialised form of one shape"""
        entry = DecompositionEntryModel.from_entry(Shape.vertical(2, 1), 2)
        assert entry.shape == "Sv"
        assert entry.anchor == (2, 1)
        assert entry.cells == [(2, 1), (2, 2)]

    def test_multiplicity_positive(self):
        """Test that zero multiplicities are rejected"""
        with pytest.raises(ValidationError):
            DecompositionEntryModel(shape="D", anchor=(0, 0), cells=[(0, 0)], mult=0)

    def test_report_json_round_trip(self):
        """Test that a report parses back from its JSON"""
        report = ReportModel(
            source="g8-i",
            dims=[DimsModel(flavor="bott_chern", cells=[CellValueModel(p=0, q=1, value=1)])],
            betti={0: 1, 1: 2},
            ddbar_lemma=True,
        )
        text = report.model_dump_json(exclude_none=True)
        assert ReportModel.model_validate_json(text) == report
