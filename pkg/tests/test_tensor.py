import unittest
from fractions import Fraction

from hypothesis import given, settings

from qt_bialgebra.algebra import D, D1, AlgElement, bracket, e, f, g, h
from qt_bialgebra.tensor import (
    Tensor2Element,
    Tensor3Element,
    act2,
    act3,
    act_on_slot,
    cyclic,
    degrees,
    homogeneous_components2,
    is_skew,
    skew_part,
    tensor2,
    tensor3,
    twist,
    wedge,
)
from tests.strategies import elements, tensors2, tensors3


class TestActions(unittest.TestCase):
    def test_act2_examples(self) -> None:
        t = tensor2(e(1, 2), g(-1, -2))
        self.assertEqual(act2(D(), t), t.scale(2))
        self.assertEqual(act2(e(0, 0), tensor2(f(0, 0), e(0, 0))), tensor2(D(), e(0, 0)))
        self.assertTrue(act2(e(1, 0), Tensor2Element.zero()).is_zero())
        self.assertEqual(
            act2(e(0, 0), tensor2(h(1, 1), g(-1, -1))),
            tensor2(e(1, 1), g(-1, -1)) - tensor2(h(1, 1), e(-1, -1)),
        )

    def test_act3_examples(self) -> None:
        e0, f0 = e(0, 0), f(0, 0)
        t = tensor3(e0, e0, f0)
        self.assertEqual(act3(D(), t), t.scale(2))
        self.assertTrue(act3(D(), Tensor3Element.zero()).is_zero())
        t = tensor3(e(1, 0), f(2, 0), D())
        self.assertEqual(act3(D1(), t), t.scale(3))

    def test_act3_is_sum_over_slots(self) -> None:
        t = tensor3(e(1, 0), f(0, 1), g(1, 1))
        x = h(0, 1)
        total = act_on_slot(x, t, 0) + act_on_slot(x, t, 1) + act_on_slot(x, t, 2)
        self.assertEqual(act3(x, t), total)
        with self.assertRaises(ValueError):
            act_on_slot(x, t, 3)

    @settings(max_examples=40, deadline=None)
    @given(elements(), elements(), tensors2())
    def test_act2_is_a_module(self, x: AlgElement, y: AlgElement, t: Tensor2Element) -> None:
        self.assertEqual(act2(bracket(x, y), t), act2(x, act2(y, t)) - act2(y, act2(x, t)))

    @settings(max_examples=25, deadline=None)
    @given(elements(), elements(), tensors3())
    def test_act3_is_a_module(self, x: AlgElement, y: AlgElement, t: Tensor3Element) -> None:
        self.assertEqual(act3(bracket(x, y), t), act3(x, act3(y, t)) - act3(y, act3(x, t)))

    @settings(max_examples=40, deadline=None)
    @given(elements(), tensors2())
    def test_twist_commutes_with_action(self, x: AlgElement, t: Tensor2Element) -> None:
        self.assertEqual(twist(act2(x, t)), act2(x, twist(t)))


class TestSymmetries(unittest.TestCase):
    def test_twist(self) -> None:
        self.assertEqual(twist(tensor2(e(0, 0), f(0, 0))), tensor2(f(0, 0), e(0, 0)))
        self.assertEqual(twist(tensor2(D(), D())), tensor2(D(), D()))

    @given(tensors2())
    def test_twist_is_an_involution(self, t: Tensor2Element) -> None:
        self.assertEqual(twist(twist(t)), t)

    def test_cyclic(self) -> None:
        a, b, c = e(1, 0), f(0, 1), D()
        self.assertEqual(cyclic(tensor3(a, b, c)), tensor3(b, c, a))
        self.assertEqual(cyclic(tensor3(D(), D(), D())), tensor3(D(), D(), D()))

    @given(tensors3())
    def test_cyclic_has_order_three(self, t: Tensor3Element) -> None:
        self.assertEqual(cyclic(cyclic(cyclic(t))), t)

    def test_is_skew(self) -> None:
        self.assertTrue(is_skew(wedge(e(0, 0), f(0, 0))))
        self.assertFalse(is_skew(tensor2(D(), D())))
        self.assertTrue(is_skew(Tensor2Element.zero()))

    def test_skew_part(self) -> None:
        self.assertTrue(skew_part(tensor2(D(), D())).is_zero())
        e0, f0 = e(0, 0), f(0, 0)
        self.assertEqual(skew_part(tensor2(e0, f0)), wedge(e0, f0).scale(Fraction(1, 2)))
        self.assertEqual(skew_part(wedge(e0, f0)), wedge(e0, f0))

    @given(tensors2())
    def test_skew_part_is_a_projection(self, t: Tensor2Element) -> None:
        s = skew_part(t)
        self.assertTrue(is_skew(s))
        self.assertEqual(skew_part(s), s)


class TestTensorDegrees(unittest.TestCase):
    def test_components(self) -> None:
        t = tensor2(e(1, 0), f(0, 0)) + tensor2(g(0, 1), g(0, -1))
        parts = homogeneous_components2(t)
        self.assertEqual(set(parts), {(1, 0), (0, 0)})
        self.assertEqual(parts[(0, 0)], tensor2(g(0, 1), g(0, -1)))
        self.assertEqual(degrees(t), {(1, 0), (0, 0)})


if __name__ == "__main__":
    unittest.main()
