import random
import unittest

from qt_bialgebra.algebra import D, e, f, g
from qt_bialgebra.cohomology import SUITES, run_identity_suite
from qt_bialgebra.errors import UnknownSuite
from qt_bialgebra.identities import GH, _e0_ansatz, admissible_d_image, iter_instances
from qt_bialgebra.laurent import ONE, q_pow
from qt_bialgebra.tensor import act2, tensor2


class TestIdentitySuites(unittest.TestCase):
    def test_every_suite_passes(self) -> None:
        for suite_id in SUITES:
            with self.subTest(suite=suite_id):
                report = run_identity_suite(suite_id, radius=2, seed=11)
                self.assertTrue(report.passed, report.failures[:3])
                self.assertGreater(report.instances_checked, 0)

    def test_d_action_counts(self) -> None:
        # 14 identities per index plus 12 at the origin
        report = run_identity_suite("a", radius=1)
        self.assertEqual(report.instances_checked, 14 * 9 + 12)

    def test_e0_action_counts(self) -> None:
        report = run_identity_suite("b", radius=1)
        self.assertEqual(report.instances_checked, 4 * 8 + 10)

    def test_unknown_suite(self) -> None:
        with self.assertRaises(UnknownSuite):
            run_identity_suite("z")
        with self.assertRaises(KeyError):
            iter_instances("z", 1, 0)

    def test_progress_hook(self) -> None:
        steps = []
        report = run_identity_suite("d", radius=1, advance=steps.append)
        self.assertEqual(sum(steps), report.instances_checked)

    def test_inner_v_keeps_g01_image(self) -> None:
        labels = [label for label, _, _ in iter_instances("f", 1, 5)]
        self.assertIn("G_01·v n=1", labels)
        self.assertIn("G_01·v n=-1", labels)
        self.assertIn("G_01·v summed over window", labels)

    def test_d_image_checks_generic_tensors_and_shifts(self) -> None:
        instances = list(iter_instances("g", 1, 5))
        labels = [label for label, _, _ in instances]
        self.assertIn("E_0 on a generic tensor k=(1, 0)", labels)
        self.assertIn("E_0 on a generic tensor k=(0, 0)", labels)
        shifted = [(lhs, rhs) for label, lhs, rhs in instances if "shifted" in label]
        # six shifted slots for each of the three tables
        self.assertEqual(len(shifted), 18)
        for lhs, rhs in shifted:
            self.assertIs(lhs, False)
            self.assertIs(rhs, False)

    def test_generic_e0_image(self) -> None:
        k = (1, 2)
        coeffs = {slot: q_pow(i) for i, slot in enumerate(("gg", "gh", "hg", "hh", "ef", "fe"))}
        ansatz, image = _e0_ansatz(k, coeffs)
        self.assertEqual(act2(e(0, 0), ansatz), image)
        self.assertFalse(image.is_zero())
        admissible = {"gg": ONE, "gh": q_pow(1), "hg": q_pow(1), "hh": ONE}
        admissible["ef"] = admissible["fe"] = ONE - q_pow(1)
        self.assertTrue(_e0_ansatz(k, admissible)[1].is_zero())

    def test_deterministic_for_a_seed(self) -> None:
        first = [label for label, _, _ in iter_instances("e", 1, 5)]
        second = [label for label, _, _ in iter_instances("e", 1, 5)]
        self.assertEqual(first, second)


class TestInnerElements(unittest.TestCase):
    def test_g10_does_not_kill_v(self) -> None:
        n = 1
        eta = q_pow(2) + 1
        v = tensor2(GH((0, n)), GH((0, -n))).scale(eta / (ONE - q_pow(n)))
        self.assertFalse(act2(g(1, 0), v).is_zero())
        expected = tensor2(g(1, n), GH((0, -n))).scale(eta) - tensor2(GH((0, n)), g(1, -n)).scale(
            q_pow(-n) * eta
        )
        self.assertEqual(act2(g(1, 0), v), expected)

    def test_invariant_element(self) -> None:
        e0, f0 = e(0, 0), f(0, 0)
        w = tensor2(e0, f0) + tensor2(f0, e0) + tensor2(D(), D()).scale(ONE / 2)
        for x in (D(), e0, f0):
            self.assertTrue(act2(x, w).is_zero())

    def test_admissible_image_is_killed_by_sl2(self) -> None:
        image, coeffs = admissible_d_image(1, random.Random(3))
        for x in (D(), e(0, 0), f(0, 0)):
            self.assertTrue(act2(x, image).is_zero())
        self.assertEqual(len(coeffs), 9)


if __name__ == "__main__":
    unittest.main()
