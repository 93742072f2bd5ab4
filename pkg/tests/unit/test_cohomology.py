"""Unit tests for the cohomology computations on small complexes."""

import pytest

from solvcohom.bicomplex import Bicomplex, direct_sum, shape_complex
from solvcohom.cohomology import (
    BIGRADED_FLAVORS,
    CohomologyGroup,
    Flavor,
    aeppli,
    betti_numbers,
    bott_chern,
    compute,
    conj_dolbeault,
    ddbar_lemma,
    de_rham,
    dimension_equality,
    dimension_table,
    dolbeault,
    in_boundary_span,
)
from solvcohom.core.exceptions import InternalInconsistencyException
from solvcohom.scalar import ONE
from solvcohom.shapes import Shape


def zigzag_l() -> Bicomplex:
    """x at (0,0) with ∂x = y and ∂̄x = z."""
    return Bicomplex.from_json(
        {
            "cells": [
                {"p": 0, "q": 0, "basis": ["x"]},
                {"p": 1, "q": 0, "basis": ["y"]},
                {"p": 0, "q": 1, "basis": ["z"]},
            ],
            "del": [{"p": 0, "q": 0, "entries": [[0, 0, "1"]]}],
            "delbar": [{"p": 0, "q": 0, "entries": [[0, 0, "1"]]}],
        }
    )


class TestShapeComplexes:
    """Test the four bigraded flavours on single shapes"""

    @pytest.mark.parametrize("flavor", BIGRADED_FLAVORS)
    def test_dot(self, flavor):
        """A dot is one-dimensional in every flavour"""
        b = shape_complex(Shape.dot(1, 2))
        group = compute(b, flavor, 1, 2)
        assert group.dimension == 1
        assert group.representatives[0].coefficients == (ONE,)

    def test_horizontal_line(self):
        """S_h^{0,0}: ∂̄-cohomology everywhere, BC at the end, Aeppli at the start"""
        b = shape_complex(Shape.horizontal(0, 0))
        assert dimension_table(b, Flavor.DOLBEAULT) == {(0, 0): 1, (1, 0): 1}
        assert dimension_table(b, Flavor.CONJ_DOLBEAULT) == {(0, 0): 0, (1, 0): 0}
        assert dimension_table(b, Flavor.BOTT_CHERN) == {(0, 0): 0, (1, 0): 1}
        assert dimension_table(b, Flavor.AEPPLI) == {(0, 0): 1, (1, 0): 0}

    def test_vertical_line_is_conjugate(self):
        """S_v swaps the roles of ∂ and ∂̄"""
        b = shape_complex(Shape.vertical(0, 0))
        assert dimension_table(b, "dolbeault") == {(0, 0): 0, (0, 1): 0}
        assert dimension_table(b, "conj_dolbeault") == {(0, 0): 1, (0, 1): 1}

    @pytest.mark.parametrize("flavor", BIGRADED_FLAVORS)
    def test_square_is_acyclic(self, flavor):
        """Squares contribute to no flavour"""
        b = shape_complex(Shape.square(0, 0))
        assert set(dimension_table(b, flavor).values()) == {0}

    def test_empty_cell(self):
        """Cells outside the complex have zero cohomology"""
        b = shape_complex(Shape.dot(0, 0))
        assert bott_chern(b, 3, 3).dimension == 0
        assert dimension_table(b, Flavor.AEPPLI, [(5, 5)]) == {(5, 5): 0}

    def test_l_shaped_zigzag(self):
        """x ↦ (y, z)"""
        b = zigzag_l()
        assert dolbeault(b, 1, 0).dimension == 1
        assert dolbeault(b, 0, 1).dimension == 0
        assert conj_dolbeault(b, 0, 1).dimension == 1
        assert bott_chern(b, 1, 0).dimension == 1
        assert bott_chern(b, 0, 1).dimension == 1
        assert aeppli(b, 0, 0).dimension == 1
        assert aeppli(b, 1, 0).dimension == 0


class TestDeRham:
    """Test the total complex"""

    def test_betti_numbers(self):
        """A dot in degree 3 and an acyclic line"""
        b = direct_sum(shape_complex(Shape.dot(1, 2)), shape_complex(Shape.horizontal(0, 0)))
        assert betti_numbers(b) == {0: 0, 1: 0, 2: 0, 3: 1}

    def test_zigzag_has_one_class(self):
        """y and z are cohomologous up to sign"""
        b = zigzag_l()
        assert betti_numbers(b) == {0: 0, 1: 1}
        group = de_rham(b, 1)
        assert group.representatives[0].degree == 1
        assert [c.bidegree for c in group.representatives[0].components] == [(0, 1), (1, 0)]

    def test_empty_degree(self):
        """Degrees without cells"""
        assert de_rham(shape_complex(Shape.dot(0, 0)), 4).dimension == 0
        assert betti_numbers(Bicomplex({})) == {}


class TestDdbarLemma:
    """Test the ∂∂̄-lemma verdict"""

    def test_dots_and_squares(self):
        """Only dots and squares"""
        b = direct_sum(shape_complex(Shape.square(0, 0)), shape_complex(Shape.dot(1, 1)))
        verdict = ddbar_lemma(b)
        assert verdict.holds
        assert bool(verdict)
        assert dimension_equality(b) is None

    def test_line_breaks_the_lemma(self):
        """A line is a witness"""
        verdict = ddbar_lemma(shape_complex(Shape.horizontal(0, 0)))
        assert not verdict
        assert "S_h^{0,0}" in verdict.witness

    def test_first_differing_cell(self):
        """Dimensions first differ at the start of the line"""
        assert dimension_equality(shape_complex(Shape.vertical(2, 1))) == (2, 1)


class TestHelpers:
    """Test representatives and boundary membership"""

    def test_representative_count_is_checked(self):
        """A group must carry one representative per dimension"""
        with pytest.raises(InternalInconsistencyException):
            CohomologyGroup(Flavor.DOLBEAULT, (0, 0), 1, [])

    def test_in_boundary_span(self):
        """∂x lies in im ∂"""
        b = shape_complex(Shape.horizontal(0, 0))
        y = b.basis_element(b.labels(1, 0)[0])
        assert in_boundary_span(b, y)
        dot = shape_complex(Shape.dot(0, 0))
        x = dot.basis_element(dot.labels(0, 0)[0])
        assert not in_boundary_span(dot, x)
        assert in_boundary_span(dot, x, extra=[(ONE,)])
