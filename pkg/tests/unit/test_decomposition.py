"""Unit tests for the square/zigzag decomposition."""

from collections import Counter

import pytest

from solvcohom.bicomplex import Bicomplex, direct_sum, shape_complex
from solvcohom.cohomology import Flavor
from solvcohom.core.errors import ErrorCode
from solvcohom.core.exceptions import DecompositionException
from solvcohom.decomposition import (
    Decomposition,
    cohomology_counts,
    decompose,
    page1_check,
    render_ascii,
    render_dot,
    shape_sum,
    split_squares,
    verify,
)
from solvcohom.shapes import Shape


def decomposition(*shapes: Shape) -> Decomposition:
    return Decomposition.from_counter(Counter(shapes))


class TestDecomposition:
    """Test the multiset container"""

    def test_from_counter_drops_zero(self):
        """Zero multiplicities disappear"""
        d = Decomposition.from_counter({Shape.dot(0, 0): 0, Shape.dot(1, 1): 2})
        assert d.entries == [(Shape.dot(1, 1), 2)]
        assert d.total == 2

    def test_equality_ignores_order(self):
        """Equality is multiset equality"""
        a = Decomposition([(Shape.dot(0, 0), 1), (Shape.horizontal(0, 0), 1)])
        b = Decomposition([(Shape.horizontal(0, 0), 1), (Shape.dot(0, 0), 1)])
        assert a == b

    def test_partitions(self):
        """Dots, lines, squares and longer zigzags"""
        zig = Shape.from_cells([(0, 0), (1, 0), (0, 1)])
        d = decomposition(Shape.dot(0, 0), Shape.vertical(1, 1), Shape.square(2, 2), zig)
        assert len(d.dots()) == len(d.lines()) == len(d.squares()) == len(d.longer_zigzags()) == 1
        assert d.has_squares
        assert d.dimension_at(0, 0) == 2
        assert d.bounds() == (0, 3, 0, 3)

    def test_summary(self):
        """Multiplicities are written as powers"""
        d = Decomposition.from_counter({Shape.dot(0, 0): 2, Shape.horizontal(0, 0): 1})
        assert d.summary() == "(D^{0,0})^2 ⊕ S_h^{0,0}"
        assert Decomposition().summary() == "0"


class TestCounting:
    """Test cohomology read off the shapes"""

    @pytest.mark.parametrize(
        "flavor,expected",
        [
            (Flavor.DOLBEAULT, {(0, 0): 1, (1, 0): 1}),
            (Flavor.CONJ_DOLBEAULT, {(0, 0): 0, (1, 0): 0}),
            (Flavor.BOTT_CHERN, {(0, 0): 0, (1, 0): 1}),
            (Flavor.AEPPLI, {(0, 0): 1, (1, 0): 0}),
        ],
    )
    def test_horizontal_line(self, flavor, expected):
        """Counting rules on S_h^{0,0}"""
        d = decomposition(Shape.horizontal(0, 0))
        assert {cell: cohomology_counts(d, flavor, *cell) for cell in expected} == expected

    def test_squares_count_nothing(self):
        """Squares are invisible to every flavour"""
        d = decomposition(Shape.square(0, 0))
        assert cohomology_counts(d, "bott_chern", 1, 1) == 0
        assert cohomology_counts(d, "aeppli", 0, 0) == 0


class TestDecompose:
    """Test decompose on known shape sums"""

    @pytest.mark.parametrize(
        "shapes",
        [
            [Shape.dot(0, 0)],
            [Shape.square(0, 0)],
            [Shape.horizontal(0, 0), Shape.vertical(0, 0)],
            [Shape.square(0, 0), Shape.dot(1, 1), Shape.horizontal(1, 0)],
            [Shape.from_cells([(0, 1), (1, 1), (1, 0)]), Shape.dot(1, 1)],
            [Shape.square(0, 0), Shape.square(0, 0), Shape.vertical(1, 0)],
        ],
    )
    def test_recovers_shape_sums(self, shapes):
        """decompose inverts shape_sum"""
        expected = decomposition(*shapes)
        assert decompose(shape_sum(expected)) == expected

    def test_l_zigzag_from_raw_complex(self):
        """x ↦ (y, z) is a single zigzag of length three"""
        b = Bicomplex.from_json(
            {
                "cells": [
                    {"p": 0, "q": 0, "basis": ["x"]},
                    {"p": 1, "q": 0, "basis": ["y"]},
                    {"p": 0, "q": 1, "basis": ["z"]},
                ],
                "del": [{"p": 0, "q": 0, "entries": [[0, 0, "2"]]}],
                "delbar": [{"p": 0, "q": 0, "entries": [[0, 0, "i"]]}],
            }
        )
        d = decompose(b)
        assert d == decomposition(Shape.from_cells([(0, 0), (1, 0), (0, 1)]))
        report = page1_check(d)
        assert not report.dots_and_len2_only
        assert not report.has_squares

    def test_split_squares_leaves_ddbar_zero(self):
        """The residual complex has ∂∂̄ = 0"""
        b = direct_sum(shape_complex(Shape.square(0, 0)), shape_complex(Shape.dot(1, 0)))
        squares, residual = split_squares(b)
        assert squares == Counter({Shape.square(0, 0): 1})
        assert all(residual.ddbar_at(*cell).is_zero for cell in residual.cells())
        assert residual.dimensions() == {(1, 0): 1}

    def test_empty_complex(self):
        """Nothing in, nothing out"""
        assert decompose(Bicomplex({})) == Decomposition()

    def test_page1(self):
        """Lines and squares"""
        assert page1_check(shape_complex(Shape.horizontal(0, 0))).dots_and_len2_only
        assert page1_check(shape_complex(Shape.square(0, 0))).has_squares


class TestVerify:
    """Test verification against direct cohomology"""

    def test_wrong_shapes_are_rejected(self):
        """Two dots have the dimensions of a line but not its cohomology"""
        b = shape_complex(Shape.horizontal(0, 0))
        with pytest.raises(DecompositionException) as exc_info:
            verify(b, decomposition(Shape.dot(0, 0), Shape.dot(1, 0)))
        assert exc_info.value.error_code == ErrorCode.DEC001

    def test_wrong_dimensions_are_rejected(self):
        """Missing and extra cells"""
        b = shape_complex(Shape.dot(0, 0))
        with pytest.raises(DecompositionException):
            verify(b, Decomposition())
        with pytest.raises(DecompositionException):
            verify(b, decomposition(Shape.dot(0, 0), Shape.dot(2, 2)))

    def test_decompose_always_verifies(self, mocker):
        """A miscounted zigzag is caught by decompose itself"""
        mocker.patch(
            "solvcohom.decomposition.split_zigzags",
            return_value=Counter({Shape.dot(0, 0): 1, Shape.dot(1, 0): 1}),
        )
        with pytest.raises(DecompositionException) as exc_info:
            decompose(shape_complex(Shape.horizontal(0, 0)))
        assert exc_info.value.error_code == ErrorCode.DEC001


class TestRendering:
    """Test the text and graph renderings"""

    def test_ascii_horizontal(self):
        """One row with an arrow"""
        assert render_ascii(decomposition(Shape.horizontal(0, 0))) == "C → C"

    def test_ascii_vertical(self):
        """Rows top down with an upward arrow"""
        assert render_ascii(decomposition(Shape.vertical(0, 0))) == "C\n↑\nC"

    def test_ascii_multiplicity_and_gaps(self):
        """Empty cells print as dots"""
        d = Decomposition.from_counter({Shape.dot(0, 0): 2, Shape.dot(1, 1): 1})
        assert render_ascii(d) == " .     C\n\nC^2    ."

    def test_ascii_empty(self):
        """Empty decompositions render as nothing"""
        assert render_ascii(Decomposition()) == ""

    def test_dot(self):
        """∂ solid, ∂̄ dashed"""
        text = render_dot(decomposition(Shape.square(0, 0)))
        assert text.startswith("digraph decomposition {")
        assert "style=solid" in text and "style=dashed" in text
        assert 'label="Sq^{0,0} x1"' in text
