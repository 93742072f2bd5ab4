"""Unit tests for exact Gaussian-rational arithmetic."""

from fractions import Fraction

import pytest
from sympy import QQ_I

from solvcohom.core.errors import ErrorCode
from solvcohom.core.exceptions import DivisionByZeroException, ParseException
from solvcohom.scalar import I, ONE, ZERO, GaussianRational, add, conj, gr, inv, mul


class TestArithmetic:
    """Test field operations"""

    def test_conjugate_pair_sum(self):
        """(1+i) + (1−i) is 2"""
        assert add(gr("1+i"), gr("1-i")) == gr(2)

    def test_rational_sum(self):
        """1/2 + 1/3 is 5/6"""
        assert gr("1/2") + gr("1/3") == GaussianRational(Fraction(5, 6))

    def test_additive_identity(self):
        """x + 0 is x"""
        x = gr("3/7-2/5*i")
        assert x + ZERO == x
        assert x + 0 == x

    def test_inverse_of_one_plus_i(self):
        """inv(1+i) is (1−i)/2"""
        assert inv(gr("1+i")) == gr("1/2-1/2*i")

    def test_i_squared(self):
        """i·i is −1"""
        assert mul(I, I) == -ONE

    def test_conjugate(self):
        """conj(2+3i) is 2−3i"""
        assert conj(gr("2+3*i")) == gr("2-3*i")

    def test_division(self):
        """Division multiplies by the inverse"""
        assert gr("2+2*i") / gr("1+i") == gr(2)
        assert 1 / gr("i") == -I

    def test_inverse_of_zero_raises(self):
        """inv(0) signals division by zero"""
        with pytest.raises(DivisionByZeroException) as exc_info:
            inv(ZERO)
        assert exc_info.value.error_code == ErrorCode.ALG001
        assert isinstance(exc_info.value, ZeroDivisionError)

    def test_mixed_operands(self):
        """Integers and fractions coerce on either side"""
        assert 3 * gr("i") == gr("3*i")
        assert gr("1/2") - Fraction(1, 2) == ZERO
        assert 1 - gr("i") == gr("1-i")


class TestCanonicalForm:
    """Test canonical representation and equality"""

    def test_lowest_terms(self):
        """Components are reduced with positive denominators"""
        x = GaussianRational(Fraction(2, -4), Fraction(6, 8))
        assert x.re == Fraction(-1, 2)
        assert x.im.denominator == 4

    def test_structural_equality_and_hash(self):
        """Equal values hash alike"""
        a = GaussianRational(Fraction(2, 4), 1)
        b = gr("1/2+i")
        assert a == b
        assert len({a, b}) == 1

    def test_integer_equality(self):
        """A real Gaussian rational equals the matching integer"""
        assert gr(5) == 5
        assert gr("5+i") != 5

    def test_truthiness(self):
        """Only zero is falsy"""
        assert not ZERO
        assert gr("i")
        assert ZERO.is_zero
        assert gr(3).is_rational


class TestTextFormat:
    """Test the a/b+c/d*i serialization"""

    @pytest.mark.parametrize(
        "value,text",
        [
            (ZERO, "0"),
            (gr(2), "2"),
            (I, "i"),
            (GaussianRational(0, Fraction(-1, 2)), "-1/2*i"),
            (GaussianRational(1, 1), "1+i"),
            (GaussianRational(Fraction(-2, 3), 4), "-2/3+4*i"),
        ],
    )
    def test_render(self, value, text):
        """Zero parts are omitted"""
        assert str(value) == text

    @pytest.mark.parametrize("text", ["2", "i", "-1/2*i", "1+i", "-2/3+4*i", "3 - i"])
    def test_parse_accepts_rendered_grammar(self, text):
        """parse reads what str writes"""
        value = GaussianRational.parse(text)
        assert GaussianRational.parse(str(value)) == value

    @pytest.mark.parametrize("text,column", [("", 1), ("1+", 2), ("1/0", 1), ("2 3", 3), ("1+2+i", 2)])
    def test_parse_errors_carry_column(self, text, column):
        """Malformed scalars raise PRS001 with a column"""
        with pytest.raises(ParseException) as exc_info:
            GaussianRational.parse(text)
        assert exc_info.value.error_code == ErrorCode.PRS001
        assert exc_info.value.column == column

    def test_sympy_round_trip(self):
        """Conversion through QQ_I keeps the value"""
        x = gr("-7/3+5/2*i")
        assert GaussianRational.from_domain(x.to_domain()) == x

    def test_value_lives_in_qq_i(self):
        """The stored value is a QQ_I element and arithmetic stays there"""
        x = gr("1/2+i") * gr("2-i")
        assert QQ_I.of_type(x.to_domain())
        assert x.to_domain() == QQ_I(QQ_I.dom(2), QQ_I.dom(3, 2))
        assert x == gr("2+3/2*i")

    def test_from_domain_accepts_integers(self):
        """Plain integers convert through QQ_I"""
        assert GaussianRational.from_domain(3) == gr(3)
