import random
import unittest
from fractions import Fraction

from lerchzeta.apostol import (
    ApostolRational,
    amplification,
    apostol_eval,
    apostol_exact,
    bernoulli_numbers,
    bernoulli_oracle,
    bernoulli_poly,
    bernoulli_poly_exact,
    gf_taylor_oracle,
    lemma_b_lhs_minus_rhs,
    lemma_b_sum_residual,
    render,
)
from lerchzeta.errors import ArgumentExcluded, IllConditioned


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-40, 40), rng.randint(1, 12))


class TestApostolExact(unittest.TestCase):
    def test_low_orders(self):
        self.assertTrue(apostol_exact(0).is_zero())
        self.assertEqual(apostol_exact(1).coeffs, {(1, 0): Fraction(1)})
        self.assertEqual(
            apostol_exact(2).coeffs,
            {(1, 1): Fraction(2), (1, 0): Fraction(-2), (2, 0): Fraction(-2)},
        )

    def test_negative_order(self):
        with self.assertRaises(ValueError):
            apostol_exact(-1)

    def test_render(self):
        self.assertEqual(render(apostol_exact(0)), "0")
        self.assertEqual(render(apostol_exact(1)), "1·u")
        self.assertEqual(render(apostol_exact(2)), "2·u·w − 2·u − 2·u^2")

    def test_render_fractions_and_leading_sign(self):
        value = ApostolRational(3, {(0, 2): Fraction(-1, 2), (2, 0): 3})
        self.assertEqual(render(value), "−(1/2)·w^2 + 3·u^2")

    def test_render_orders_w_degree_down_then_u_degree_up(self):
        value = ApostolRational(2, {(2, 0): 1, (1, 0): 1, (1, 1): -1, (0, 1): 1})
        self.assertEqual(render(value), "1·w − 1·u·w + 1·u + 1·u^2")

    def test_degrees(self):
        b = apostol_exact(5)
        self.assertEqual(b.degree_w(), 4)
        self.assertEqual(b.degree_u(), 5)

    def test_equality_and_hash(self):
        self.assertEqual(apostol_exact(3), ApostolRational(3, apostol_exact(3).coeffs))
        self.assertEqual(hash(apostol_exact(3)), hash(ApostolRational(3, apostol_exact(3).coeffs)))
        self.assertNotEqual(apostol_exact(3), apostol_exact(4))

    def test_matches_generating_function(self):
        for r in range(0, 9):
            for z in (Fraction(2), Fraction(1, 3), Fraction(-5, 2)):
                for w in (Fraction(0), Fraction(1, 2), Fraction(7, 3)):
                    self.assertEqual(apostol_exact(r).evaluate_exact(z, w), gf_taylor_oracle(r, z, w), (r, z, w))

    def test_example_values(self):
        self.assertEqual(apostol_exact(2).evaluate_exact(2, 1), -2)
        self.assertEqual(gf_taylor_oracle(2, 2, 1), -2)

    def test_float_evaluation_agrees_with_exact(self):
        b = apostol_exact(7)
        exact = b.evaluate_exact(Fraction(3), Fraction(1, 4))
        self.assertAlmostEqual(b.evaluate(3.0, 0.25), float(exact), delta=1e-12 * abs(float(exact)))

    def test_oracle_rejects_one(self):
        with self.assertRaises(ArgumentExcluded):
            gf_taylor_oracle(2, 1, Fraction(1, 2))


class TestBernoulli(unittest.TestCase):
    def test_numbers(self):
        self.assertEqual(
            bernoulli_numbers(6),
            (Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30), Fraction(0), Fraction(1, 42)),
        )

    def test_polynomials_against_oracle(self):
        for r in range(0, 11):
            for w in (Fraction(0), Fraction(1), Fraction(-3, 4), Fraction(5, 3)):
                self.assertEqual(bernoulli_poly_exact(r, w), bernoulli_oracle(r, w))

    def test_float_polynomial(self):
        self.assertAlmostEqual(bernoulli_poly(2, 1.0), 1.0 / 6.0)
        self.assertAlmostEqual(bernoulli_poly(1, 0.25), -0.25)


class TestApostolEval(unittest.TestCase):
    def test_z_equal_one_uses_bernoulli(self):
        self.assertEqual(apostol_eval(0, 1.0, 0.7), 1.0)
        self.assertAlmostEqual(apostol_eval(1, 1.0, 1.0), 0.5)
        self.assertAlmostEqual(apostol_eval(2, 1.0, 1.0), 1.0 / 6.0)

    def test_z_not_one(self):
        self.assertEqual(apostol_eval(0, 2.0, 0.7), 0.0)
        self.assertAlmostEqual(apostol_eval(1, 2.0, 0.3 + 1j), 1.0)
        self.assertAlmostEqual(apostol_eval(2, 2.0, 1.0), -2.0)

    def test_amplification(self):
        self.assertAlmostEqual(amplification(3, 1.1), 1000.0, delta=1e-9)
        self.assertEqual(amplification(2, 3.0), 1.0)
        self.assertEqual(amplification(2, 1.0), 1.0)

    def test_amplification_limit_raises(self):
        with self.assertRaises(IllConditioned) as caught:
            apostol_eval(6, 1.05, 0.3, max_amplification=1e6)
        self.assertEqual(caught.exception.amplification, amplification(6, 1.05))
        self.assertAlmostEqual(apostol_eval(6, 1.05, 0.3), apostol_exact(6).evaluate(1.05, 0.3))
        # far from z = 1 the limit never applies
        apostol_eval(6, 2.0, 0.3, max_amplification=1.0)


class TestShiftIdentity(unittest.TestCase):
    def test_exact_zero(self):
        rng = random.Random(2024)
        pairs = []
        while len(pairs) < 10:
            z = _random_rational(rng)
            if z != 1:
                pairs.append((z, _random_rational(rng)))
        for z, w in pairs:
            for r in range(1, 21):
                for N in range(0, 6):
                    self.assertEqual(lemma_b_lhs_minus_rhs(r, N, z, w), 0, (r, N, z, w))

    def test_summed_form(self):
        for r in range(1, 9):
            for N in range(0, 5):
                self.assertEqual(lemma_b_sum_residual(r, N, Fraction(-3, 2), Fraction(2, 5)), 0)

    def test_order_zero_rejected(self):
        with self.assertRaises(ValueError):
            lemma_b_lhs_minus_rhs(0, 1, 2, 1)
        with self.assertRaises(ValueError):
            lemma_b_sum_residual(0, 1, 2, 1)


if __name__ == "__main__":
    unittest.main()
