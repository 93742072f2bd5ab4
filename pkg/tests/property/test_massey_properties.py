"""Property tests for Massey products in B ∧ B̄."""

from functools import reduce

from hypothesis import given, settings
from hypothesis import strategies as st

from solvcohom.bicomplex import CochainElement
from solvcohom.formality import WITNESSES, bc_class, massey_abc
from solvcohom.linalg import kernel
from solvcohom.scalar import ZERO


NONVANISHING = [("g8", "ii"), ("g8", "iii"), ("g1", "i")]


def combination(vectors, coefficients, size):
    terms = [tuple(c * coefficient for c in v) for v, coefficient in zip(vectors, coefficients)]
    return reduce(lambda a, b: tuple(x + y for x, y in zip(a, b)), terms, (ZERO,) * size)


class TestMasseyInvariance:
    """The verdict does not depend on the chosen primitives"""

    @settings(max_examples=1000, deadline=None)
    @given(data=st.data())
    def test_primitive_choice(self, data, closures):
        """∂∂̄-closed corrections keep the product and its indeterminacy"""
        key = data.draw(st.sampled_from(NONVANISHING))
        algebra = closures[key]
        classes = [bc_class(algebra, text) for text in WITNESSES[key]]
        base = massey_abc(algebra, *classes)
        assert base.nonvanishing

        corrections = []
        for primitive in base.primitives:
            closed = kernel(algebra.ddbar_at(*primitive.bidegree))
            coefficients = data.draw(
                st.lists(st.integers(-3, 3), min_size=len(closed), max_size=len(closed))
            )
            size = algebra.dim(*primitive.bidegree)
            corrections.append(
                CochainElement(primitive.bidegree, combination(closed, coefficients, size))
            )

        adjusted = massey_abc(algebra, *classes, adjust=tuple(corrections))
        assert adjusted.nonvanishing == base.nonvanishing
        assert adjusted.quotient_dimension == base.quotient_dimension
        assert adjusted.bidegree == base.bidegree
