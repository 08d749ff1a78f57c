"""
Seeded randomized checks of the monomial order and polynomial arithmetic.
"""
import random

from django.test import SimpleTestCase

from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring
from polynomials.services.reduction import s_polynomial, top_reduce
from polynomials.services.univariate import is_univariate, roots_gf2
from polynomials.utils.monomial_orders import MonomialOrder

SEED = 20240611


def _random_monomial(rng, n, max_exponent=2):
    return Monomial(rng.randint(0, max_exponent) for _ in range(n))


def _random_polynomial(rng, ring, terms=4, max_exponent=2):
    return Polynomial.from_monomials(
        ring, [_random_monomial(rng, ring.n, max_exponent) for _ in range(terms)]
    )


class OrderAdmissibilityTests(SimpleTestCase):
    def test_multiplication_preserves_comparisons(self):
        rng = random.Random(SEED)
        for order in MonomialOrder:
            ring = Ring.standard(4, order)
            one = ring.one()
            for _ in range(300):
                a, b, m = (_random_monomial(rng, 4) for _ in range(3))
                ka, kb = ring.sort_key(a), ring.sort_key(b)
                if ka < kb:
                    self.assertLess(ring.sort_key(m * a), ring.sort_key(m * b))
                self.assertLessEqual(ring.sort_key(one), ring.sort_key(m))


class PolynomialAlgebraTests(SimpleTestCase):
    def setUp(self):
        self.rng = random.Random(SEED)
        self.ring = Ring.standard(4)

    def test_addition_laws(self):
        for _ in range(200):
            p, q, r = (_random_polynomial(self.rng, self.ring) for _ in range(3))
            self.assertEqual(p + q, q + p)
            self.assertEqual((p + q) + r, p + (q + r))
            self.assertTrue((p + p).is_zero)

    def test_terms_are_sorted_and_distinct(self):
        for _ in range(200):
            p = _random_polynomial(self.rng, self.ring, terms=6)
            keys = [self.ring.sort_key(m) for m in p.terms]
            self.assertEqual(keys, sorted(keys, reverse=True))
            self.assertEqual(len(set(p.terms)), len(p.terms))

    def test_normal_form_is_an_idempotent_homomorphism(self):
        for _ in range(200):
            p, q = (_random_polynomial(self.rng, self.ring, max_exponent=3) for _ in range(2))
            m = _random_monomial(self.rng, 4, max_exponent=3)
            nf_p = p.normal_form_field()
            self.assertTrue(nf_p.is_squarefree)
            self.assertEqual(nf_p.normal_form_field(), nf_p)
            self.assertEqual((p + q).normal_form_field(), nf_p + q.normal_form_field())
            self.assertEqual(
                p.mul_monomial(m).normal_form_field(),
                nf_p.mul_monomial(m.squarefree()).normal_form_field(),
            )

    def test_normal_form_preserves_values(self):
        for _ in range(100):
            p = _random_polynomial(self.rng, self.ring, max_exponent=3)
            point = tuple(self.rng.randint(0, 1) for _ in range(4))
            self.assertEqual(p.evaluate(point), p.normal_form_field().evaluate(point))

    def test_s_polynomial_head_below_lcm(self):
        for _ in range(200):
            f, g = (_random_polynomial(self.rng, self.ring) for _ in range(2))
            if f.is_zero or g.is_zero:
                continue
            lcm = f.head.lcm(g.head)
            for apply_nf in (False, True):
                s = s_polynomial(f, g, apply_nf=apply_nf)
                if not s.is_zero:
                    self.assertLess(self.ring.sort_key(s.head), self.ring.sort_key(lcm))

    def test_top_reduce_leaves_irreducible_head(self):
        for _ in range(100):
            basis = [_random_polynomial(self.rng, self.ring, terms=3) for _ in range(3)]
            basis = [g for g in basis if not g.is_zero]
            remainder = top_reduce(_random_polynomial(self.rng, self.ring, terms=5), basis)
            if not remainder.is_zero:
                self.assertFalse(any(g.head.divides(remainder.head) for g in basis))
            self.assertEqual(top_reduce(remainder, basis), remainder)

    def test_roots_match_evaluation(self):
        ring = Ring(['x', 'y'])
        for _ in range(100):
            exponents = {self.rng.randint(0, 3) for _ in range(3)}
            p = Polynomial.from_monomials(ring, [Monomial((e, 0)) for e in exponents])
            if p.is_zero or is_univariate(p) is None:
                continue
            expected = {v for v in (0, 1) if p.evaluate((v, 0)) == 0}
            self.assertEqual(roots_gf2(p, 0), frozenset(expected))
