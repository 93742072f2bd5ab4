"""Unit tests for squares and zigzags."""

import pytest

from solvcohom.core.errors import ErrorCode
from solvcohom.core.exceptions import MalformedShapeException
from solvcohom.shapes import Shape


class TestClassification:
    """Test from_cells"""

    def test_dot(self):
        """A single cell is a dot"""
        shape = Shape.from_cells([(1, 2)])
        assert shape == Shape.dot(1, 2)
        assert shape.is_dot and shape.name == "D"

    def test_lines(self):
        """Horizontal and vertical lines"""
        assert Shape.from_cells([(0, 0), (1, 0)]) == Shape.horizontal(0, 0)
        assert Shape.from_cells([(2, 1), (2, 2)]).name == "Sv"
        assert Shape.horizontal(0, 0).is_line

    def test_square(self):
        """Four cells of a unit square"""
        shape = Shape.from_cells([(1, 1), (2, 1), (1, 2), (2, 2)])
        assert shape == Shape.square(1, 1)
        assert shape.name == "square"
        assert not shape.is_dot

    def test_longer_zigzag(self):
        """An L of three cells in two adjacent total degrees"""
        shape = Shape.from_cells([(0, 1), (1, 1), (1, 0)])
        assert shape.name == "zigzag"
        assert shape.anchor == (0, 1)

    @pytest.mark.parametrize(
        "cells",
        [[], [(1, 0), (0, 1)], [(0, 0), (2, 0)], [(0, 0), (1, 0), (1, 1)]],
    )
    def test_malformed(self, cells):
        """Cell sets that are neither squares nor zigzags"""
        with pytest.raises(MalformedShapeException) as exc_info:
            Shape.from_cells(cells)
        assert exc_info.value.error_code == ErrorCode.ALG004


class TestPresentation:
    """Test labels, arrows and ordering"""

    def test_labels(self):
        """D, S_h, S_v and Sq names"""
        assert Shape.dot(0, 0).label() == "D^{0,0}"
        assert Shape.horizontal(1, 2).label() == "S_h^{1,2}"
        assert Shape.vertical(2, 1).label() == "S_v^{2,1}"
        assert Shape.square(0, 1).label() == "Sq^{0,1}"

    def test_arrows(self):
        """A square has two ∂ and two ∂̄ arrows"""
        arrows = Shape.square(0, 0).arrows()
        kinds = sorted(kind for _, _, kind in arrows)
        assert kinds == ["del", "del", "delbar", "delbar"]
        assert ((0, 0), (1, 0), "del") in arrows
        assert Shape.dot(3, 3).arrows() == []

    def test_sort_key_orders_by_position(self):
        """Lower cells sort first"""
        shapes = [Shape.vertical(1, 0), Shape.dot(0, 0), Shape.horizontal(0, 1)]
        ordered = sorted(shapes, key=Shape.sort_key)
        assert ordered[0] == Shape.dot(0, 0)
        assert ordered[-1] == Shape.vertical(1, 0)
