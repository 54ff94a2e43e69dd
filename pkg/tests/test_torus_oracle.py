import unittest

from qt_bialgebra.algebra import D, D1, basis_in_window, bracket_basis, e, g
from qt_bialgebra.errors import DegreeDerivationNotRepresentable, NotInImage
from qt_bialgebra.laurent import q_pow
from qt_bialgebra.torus_oracle import (
    TorusElement,
    embed,
    matrix_unit,
    oracle_bracket,
    project,
    torus_mul,
)


class TestTorusProduct(unittest.TestCase):
    def test_normal_ordering(self) -> None:
        got = torus_mul(matrix_unit(1, 2, 0, 1), matrix_unit(2, 1, 1, 0))
        self.assertEqual(got, matrix_unit(1, 1, 1, 1, q_pow(1)))

    def test_matrix_units(self) -> None:
        self.assertTrue(torus_mul(matrix_unit(1, 2, 1, 0), matrix_unit(1, 2, 1, 0)).is_zero())
        self.assertEqual(torus_mul(matrix_unit(1, 1), matrix_unit(1, 1)), matrix_unit(1, 1))
        with self.assertRaises(ValueError):
            matrix_unit(3, 1)


class TestEmbedding(unittest.TestCase):
    def test_embed(self) -> None:
        self.assertEqual(embed(e(1, 2)), matrix_unit(1, 2, 1, 2))
        self.assertEqual(embed(D()), matrix_unit(1, 1) - matrix_unit(2, 2))
        with self.assertRaises(DegreeDerivationNotRepresentable):
            embed(D1())

    def test_oracle_bracket(self) -> None:
        got = oracle_bracket(embed(g(1, 2)), embed(e(3, 4)))
        self.assertEqual(got, matrix_unit(1, 2, 4, 6, q_pow(6)))
        s = embed(e(1, 1)) + embed(g(0, 1))
        self.assertTrue(oracle_bracket(s, s).is_zero())
        self.assertEqual(oracle_bracket(embed(D()), embed(e(0, 0))), matrix_unit(1, 2, coeff=2))

    def test_project(self) -> None:
        self.assertEqual(project(matrix_unit(1, 2, 4, 6, q_pow(6))), e(4, 6).scale(q_pow(6)))
        self.assertEqual(project(matrix_unit(1, 1) - matrix_unit(2, 2)), D())
        with self.assertRaises(NotInImage):
            project(matrix_unit(1, 1))
        self.assertTrue(project(TorusElement.zero()).is_zero())

    def test_agrees_with_structure_constants(self) -> None:
        vectors = [b for b in basis_in_window(1) if b.kind.value not in ("d1", "d2")]
        for x in vectors:
            for y in vectors:
                with self.subTest(x=str(x), y=str(y)):
                    got = project(oracle_bracket(embed(x), embed(y)))
                    self.assertEqual(got, bracket_basis(x, y))


if __name__ == "__main__":
    unittest.main()
