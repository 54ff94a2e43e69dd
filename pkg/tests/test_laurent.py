import unittest
from fractions import Fraction

from hypothesis import given

from qt_bialgebra.errors import ParseError
from qt_bialgebra.laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    RatFunc,
    add,
    format_ratfunc,
    is_zero,
    mul,
    parse_ratfunc,
    q_pow,
)
from tests.strategies import nonzero_laurents, ratfuncs


Q = q_pow(1)


class TestArithmetic(unittest.TestCase):
    def test_additive_inverses(self) -> None:
        self.assertTrue(is_zero(add(Q, -Q)))
        a = ONE / (Q - 1)
        b = ONE / (1 - Q)
        self.assertEqual(a + b, ZERO)

    def test_inverse_plus_q(self) -> None:
        got = add(q_pow(-1), Q)
        expected = RatFunc.of(LaurentPoly.from_dict({2: 1, 0: 1}), LaurentPoly.monomial(1))
        self.assertEqual(got, expected)
        self.assertEqual(got * Q, Q * Q + 1)
        self.assertEqual(format_ratfunc(got), "(q^2+1)/q")

    def test_products(self) -> None:
        self.assertEqual(mul(q_pow(2), q_pow(3)), q_pow(5))
        self.assertEqual((Q - 1) * (ONE / (Q - 1)), ONE)
        self.assertEqual(mul(1 - Q, q_pow(-1)), (1 - Q) / Q)
        self.assertEqual(format_ratfunc((1 - Q) / Q), "(-q+1)/q")

    def test_q_pow(self) -> None:
        self.assertEqual(q_pow(0), ONE)
        self.assertEqual(q_pow(6).num.as_dict(), {6: Fraction(1)})
        self.assertEqual(q_pow(-3) * q_pow(3), ONE)

    def test_is_zero(self) -> None:
        self.assertTrue(is_zero(Q - Q))
        self.assertFalse(is_zero(q_pow(5) - 1))
        self.assertTrue(is_zero((Q * Q - 1) / (Q - 1) - (Q + 1)))

    def test_canonical_denominator(self) -> None:
        x = (Q * 2 + 2) / (Q * Q * 4 - 4)
        # denominators are primitive with positive leading term
        self.assertEqual(x.num.as_dict(), {0: Fraction(1, 2)})
        self.assertEqual(x.den.as_dict(), {1: Fraction(1), 0: Fraction(-1)})
        self.assertEqual(format_ratfunc(x), "1/(2*q-2)")

    def test_division_by_zero(self) -> None:
        with self.assertRaises(ZeroDivisionError):
            _ = ONE / ZERO
        with self.assertRaises(ZeroDivisionError):
            ZERO.inverse()

    def test_powers(self) -> None:
        self.assertEqual((Q + 1) ** 2, Q * Q + Q * 2 + 1)
        self.assertEqual(Q ** -2, q_pow(-2))
        self.assertEqual((Q - 1) ** 0, ONE)

    def test_evaluate(self) -> None:
        self.assertEqual(((Q + 1) / (Q - 1)).evaluate(3), Fraction(2))
        self.assertEqual(q_pow(-2).evaluate(Fraction(1, 2)), Fraction(4))

    def test_scalar_coercion(self) -> None:
        self.assertEqual(Q + Fraction(1, 2), RatFunc.laurent({1: 1, 0: Fraction(1, 2)}))
        self.assertEqual(3 * Q, RatFunc.laurent({1: 3}))
        self.assertEqual(2 - Q, RatFunc.laurent({0: 2, 1: -1}))

    @given(ratfuncs(), ratfuncs(), ratfuncs())
    def test_field_laws(self, a: RatFunc, b: RatFunc, c: RatFunc) -> None:
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a - a, ZERO)

    @given(ratfuncs(), nonzero_laurents())
    def test_division_undoes_multiplication(self, a: RatFunc, b: RatFunc) -> None:
        self.assertEqual((a * b) / b, a)
        self.assertEqual(b * b.inverse(), ONE)


class TestTextualForm(unittest.TestCase):
    def test_render(self) -> None:
        self.assertEqual(format_ratfunc(ZERO), "0")
        self.assertEqual(format_ratfunc(q_pow(-3)), "q^-3")
        self.assertEqual(format_ratfunc(1 - Q), "-q+1")
        self.assertEqual(format_ratfunc(RatFunc.scalar(Fraction(1, 2))), "1/2")
        self.assertEqual(format_ratfunc(q_pow(-1) / 2), "1/(2*q)")
        self.assertEqual(format_ratfunc((Q + 3) / 2), "(q+3)/2")
        self.assertEqual(str(Q * 3 - 5), "3*q-5")
        self.assertEqual(repr(Q), "RatFunc('q')")

    def test_parse(self) -> None:
        self.assertEqual(parse_ratfunc("q^-3"), q_pow(-3))
        self.assertEqual(parse_ratfunc(" -q + 1 "), 1 - Q)
        self.assertEqual(parse_ratfunc("(q^2+1)/q"), q_pow(1) + q_pow(-1))
        self.assertEqual(parse_ratfunc("1/2"), RatFunc.scalar(Fraction(1, 2)))
        self.assertEqual(parse_ratfunc("2*q^+2-3"), Q * Q * 2 - 3)
        self.assertEqual(parse_ratfunc("1/(q-1)"), ONE / (Q - 1))
        self.assertEqual(parse_ratfunc("0"), ZERO)

    def test_parse_errors_report_column(self) -> None:
        with self.assertRaises(ParseError) as ctx:
            parse_ratfunc("q^")
        self.assertEqual(ctx.exception.column, 3)

        with self.assertRaises(ParseError) as ctx:
            parse_ratfunc("q+x")
        self.assertEqual(ctx.exception.column, 3)

        with self.assertRaises(ParseError) as ctx:
            parse_ratfunc("(q+1")
        self.assertEqual(ctx.exception.column, 5)

        with self.assertRaises(ParseError):
            parse_ratfunc("1/0")
        with self.assertRaises(ParseError):
            parse_ratfunc("")

    @given(ratfuncs())
    def test_render_then_parse(self, a: RatFunc) -> None:
        text = format_ratfunc(a)
        self.assertEqual(parse_ratfunc(text), a)
        self.assertEqual(format_ratfunc(parse_ratfunc(text)), text)


if __name__ == "__main__":
    unittest.main()
