"""Integration tests over the fifteen catalogue manifolds."""

import pytest

from solvcohom.builder import CATALOGUE
from solvcohom.cohomology import Flavor, compute, ddbar_lemma
from solvcohom.core.config import EngineConfig
from solvcohom.decomposition import decompose, page1_check
from solvcohom.formality import bc_class, formality_report, massey_abc
from solvcohom.shapes import Shape
from tests.fixtures.golden_tables import ROWS, GoldenTables

CASES = [(entry.family, entry.case) for entry in CATALOGUE]
CASE_IDS = [entry.key for entry in CATALOGUE]

WITNESSED = sorted(GoldenTables.massey_witnesses())
VANISHING = sorted(GoldenTables.massey_vanishing())
OBSTRUCTED = set(WITNESSED) | {("g2", "odd")}

ISOMORPHIC = [
    (("g1", "i"), ("g8", "vii")),
    (("g1", "ii"), ("g8", "vi")),
    (("g1", "iii"), ("g8", "iv")),
    (("g2", "odd"), ("g1", "i")),
    (("g2", "even"), ("g1", "ii")),
    (("g2", "generic"), ("g1", "iii")),
    (("g2", "alpha0-other"), ("g8", "iv")),
]


@pytest.fixture
def small_scan_config(tmp_path, monkeypatch) -> EngineConfig:
    """Configuration with a short Massey scan."""
    monkeypatch.delenv("SOLVCOHOM_SCAN_BUDGET", raising=False)
    path = tmp_path / "solvcohom.yaml"
    path.write_text("massey:\n  scan_budget: 25\n  max_total_degree: 3\n", encoding="utf-8")
    return EngineConfig(str(path))


def table(complex_, flavor):
    return {cell: compute(complex_, flavor, *cell).dimension for cell in ROWS}


class TestCohomologyTables:
    """Test the Dolbeault and Bott-Chern tables of C"""

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_dolbeault(self, key, c_complexes):
        """Test h_∂̄ against the transcribed table"""
        assert table(c_complexes[key], Flavor.DOLBEAULT) == GoldenTables.dolbeault(*key)

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_bott_chern(self, key, c_complexes):
        """Test h_BC against the transcribed table"""
        assert table(c_complexes[key], Flavor.BOTT_CHERN) == GoldenTables.bott_chern(*key)

    @pytest.mark.parametrize("entry", CATALOGUE, ids=CASE_IDS)
    def test_ddbar_lemma(self, entry, c_complexes):
        """Test the ∂∂̄-lemma verdicts"""
        key = (entry.family, entry.case)
        expected = key in GoldenTables.ddbar_cases()
        assert entry.ddbar == expected
        assert ddbar_lemma(c_complexes[key]).holds == expected


class TestDecompositions:
    """Test the zigzag decompositions of C"""

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_against_transcription(self, key, c_decompositions):
        """Test dots and lines against the transcribed decomposition"""
        assert c_decompositions[key] == GoldenTables.decomposition(*key)

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_sizes(self, key, c_complexes, c_decompositions):
        """Test that the shapes account for every generator"""
        decomposition = c_decompositions[key]
        assert sum(len(shape.cells) * mult for shape, mult in decomposition) == c_complexes[
            key
        ].total_dimension()

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_page1(self, key, c_decompositions):
        """Test that C has only dots and lines"""
        report = page1_check(c_decompositions[key])
        assert report.dots_and_len2_only
        assert not report.has_squares

    def test_lattice_sizes(self, c_complexes):
        """Test the total dimension of two extreme lattices"""
        assert c_complexes[("g1", "i")].total_dimension() == 104
        assert c_complexes[("g8", "i")].total_dimension() == 16

    @pytest.mark.parametrize("key, squares", [(("g8", "i"), False), (("g8", "ii"), True)])
    def test_closure_squares(self, key, squares, closures):
        """Test squares in B ∧ B̄ for a formal and a non-formal case"""
        assert decompose(closures[key]).has_squares == squares

    @pytest.mark.parametrize(
        "key", GoldenTables.twisted_square_cases(), ids=lambda key: f"{key[0]}-{key[1]}"
    )
    def test_closure_squares_at_top_fiber_form(self, key, closures):
        """Test that the only squares are the two T^{∓2}T̄^{±2}dz_{121̄2̄} pieces"""
        assert decompose(closures[key]).squares() == [(Shape.square(2, 2), 2)]


class TestIsomorphicCases:
    """Test that cases with the same lattice give the same answers"""

    @pytest.mark.parametrize("first, second", ISOMORPHIC)
    def test_same_tables(self, first, second, c_complexes):
        """Test equal h_∂̄ and h_BC tables"""
        for flavor in (Flavor.DOLBEAULT, Flavor.BOTT_CHERN):
            assert table(c_complexes[first], flavor) == table(c_complexes[second], flavor)

    @pytest.mark.parametrize("first, second", ISOMORPHIC)
    def test_same_decomposition(self, first, second, c_decompositions):
        """Test equal multisets of shapes"""
        assert c_decompositions[first] == c_decompositions[second]


class TestMasseyWitnesses:
    """Test the catalogued nonvanishing Massey products"""

    @pytest.mark.parametrize("key", WITNESSED, ids=[f"{f}-{c}" for f, c in WITNESSED])
    def test_nonvanishing(self, key, closures):
        """Test that each witness is nonzero in the expected bidegree"""
        triple, bidegree = GoldenTables.massey_witnesses()[key]
        closure = closures[key]
        result = massey_abc(closure, *(bc_class(closure, text) for text in triple))
        assert result.nonvanishing
        assert result.bidegree == bidegree
        assert result.quotient_dimension > 0

    @pytest.mark.parametrize("key", VANISHING, ids=[f"{f}-{c}" for f, c in VANISHING])
    def test_closing_on_dz3_vanishes(self, key, closures):
        """Test that a third factor dz₃ or dz̄₃ gives an A-exact product"""
        closure = closures[key]
        triple = GoldenTables.massey_vanishing()[key]
        result = massey_abc(closure, *(bc_class(closure, text) for text in triple))
        assert not result.nonvanishing


class TestFormality:
    """Test the formality verdicts"""

    @pytest.mark.parametrize("key", CASES, ids=CASE_IDS)
    def test_verdicts(self, key, splitting_data, small_scan_config):
        """Test that ∂∂̄, strong and weak agree and match the witnesses"""
        report = formality_report(splitting_data[key], small_scan_config)
        formal = key in GoldenTables.ddbar_cases()
        assert report.ddbar == formal
        assert report.strong == formal
        assert report.weak == formal
        assert report.dolbeault
        assert report.geometric_bc_obstructed == (key in OBSTRUCTED)
        if key in OBSTRUCTED:
            assert report.triples_examined == 1
            assert report.massey_witness.startswith("⟨[")
        elif not formal:
            assert report.massey_witness is None
            assert any(note.startswith("no nonvanishing triple among") for note in report.notes)
