import unittest

from hypothesis import given, settings

from qt_bialgebra.algebra import (
    D,
    D1,
    D2,
    AlgElement,
    BasisVector,
    Kind,
    basis_in_window,
    bracket,
    bracket_basis,
    degree_of,
    e,
    element,
    f,
    g,
    h,
    homogeneous_components,
    is_homogeneous,
    jacobi_defect,
)
from qt_bialgebra.laurent import ONE, q_pow
from tests.strategies import elements


class TestBasis(unittest.TestCase):
    def test_g_h_at_origin_are_zero(self) -> None:
        self.assertTrue(g(0, 0).is_zero())
        self.assertTrue(h(0, 0).is_zero())
        self.assertTrue(element("g", 0, 0, q_pow(3)).is_zero())
        with self.assertRaises(ValueError):
            BasisVector(Kind.G, (0, 0))

    def test_derivations_take_no_index(self) -> None:
        with self.assertRaises(ValueError):
            BasisVector(Kind.D1, (1, 0))
        self.assertEqual(BasisVector("d2"), BasisVector(Kind.D2))

    def test_degrees(self) -> None:
        self.assertEqual(degree_of(BasisVector(Kind.E, (2, -3))), (2, -3))
        self.assertEqual(degree_of(BasisVector(Kind.D1)), (0, 0))
        self.assertEqual(degree_of(BasisVector(Kind.H, (0, 1))), (0, 1))

    def test_rendering(self) -> None:
        self.assertEqual(str(e(1, 0) - f(0, 0).scale(q_pow(2)) + D()), "d + e(1,0) + (-q^2)*f(0,0)")
        self.assertEqual(str(AlgElement.zero()), "0")

    def test_window_enumeration(self) -> None:
        vectors = basis_in_window(1)
        # 3 derivations, 9 e, 9 f, 8 g, 8 h
        self.assertEqual(len(vectors), 37)
        self.assertEqual(vectors[:3], [BasisVector(k) for k in (Kind.D, Kind.D1, Kind.D2)])
        self.assertEqual(len(set(vectors)), len(vectors))


class TestBracket(unittest.TestCase):
    def test_relations(self) -> None:
        self.assertEqual(bracket(g(1, 2), e(3, 4)), e(4, 6).scale(q_pow(6)))
        self.assertEqual(bracket(e(1, 0), f(-1, 0)), D())
        self.assertEqual(bracket(h(1, 0), h(0, 1)), h(1, 1).scale(ONE - q_pow(1)))
        self.assertEqual(bracket(e(1, 1), f(0, 1)), g(1, 2) - h(1, 2).scale(q_pow(1)))

    def test_derivations(self) -> None:
        self.assertEqual(bracket(D(), e(2, 1)), e(2, 1).scale(2))
        self.assertEqual(bracket(D(), f(2, 1)), f(2, 1).scale(-2))
        self.assertTrue(bracket(D(), g(2, 1)).is_zero())
        self.assertEqual(bracket(D1(), h(3, -1)), h(3, -1).scale(3))
        self.assertEqual(bracket(D2(), h(3, -1)), h(3, -1).scale(-1))
        self.assertEqual(bracket(e(0, 2), D2()), e(0, 2).scale(-2))
        self.assertTrue(bracket(D1(), D2()).is_zero())

    def test_g_h_mixed_bracket_vanishes(self) -> None:
        self.assertTrue(bracket(g(1, 0), h(0, 1)).is_zero())
        self.assertTrue(bracket(e(1, 0), e(0, 1)).is_zero())

    def test_bracket_into_origin_drops_g_h(self) -> None:
        # [g_k, g_-k] lands on g_(0,0) = 0
        self.assertTrue(bracket(g(1, 2), g(-1, -2)).is_zero())
        self.assertEqual(bracket(e(1, 2), f(-1, -2)), D().scale(q_pow(-2)))

    def test_antisymmetry_on_window(self) -> None:
        vectors = basis_in_window(1)
        for x in vectors:
            for y in vectors:
                self.assertEqual(bracket_basis(x, y), -bracket_basis(y, x))

    def test_jacobi_examples(self) -> None:
        self.assertTrue(jacobi_defect(e(1, 0), f(0, 1), g(1, 1)).is_zero())
        self.assertTrue(jacobi_defect(D1(), D2(), e(5, 5)).is_zero())
        self.assertTrue(jacobi_defect(D(), e(1, 0), f(0, 0)).is_zero())

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements(), elements())
    def test_jacobi(self, x: AlgElement, y: AlgElement, z: AlgElement) -> None:
        self.assertTrue(jacobi_defect(x, y, z).is_zero())

    @settings(max_examples=60, deadline=None)
    @given(elements(), elements())
    def test_alternating(self, x: AlgElement, y: AlgElement) -> None:
        self.assertTrue(bracket(x, x).is_zero())
        self.assertEqual(bracket(x, y), -bracket(y, x))


class TestGrading(unittest.TestCase):
    def test_homogeneous_components(self) -> None:
        x = e(1, 0) + f(1, 0).scale(q_pow(1)) + D()
        self.assertEqual(
            homogeneous_components(x),
            {(1, 0): e(1, 0) + f(1, 0).scale(q_pow(1)), (0, 0): D()},
        )
        self.assertEqual(homogeneous_components(AlgElement.zero()), {})
        self.assertEqual(homogeneous_components(g(1, 2) - h(1, 2)), {(1, 2): g(1, 2) - h(1, 2)})
        self.assertFalse(is_homogeneous(x))
        self.assertTrue(is_homogeneous(g(1, 2) - h(1, 2)))


if __name__ == "__main__":
    unittest.main()
