from django.test import SimpleTestCase

from polynomials.monomial import Monomial, monomial_divide, monomial_lcm
from polynomials.polynomial import Polynomial, normal_form_field, poly_add, poly_mul_monomial, substitute
from polynomials.ring import Ring, compare
from polynomials.services.reduction import interreduce, reduce_fully, s_polynomial, top_reduce
from polynomials.services.univariate import is_univariate, roots_gf2, univariate_root
from polynomials.utils.monomial_orders import Comparison, MonomialOrder


def _mono(ring, text):
    """'x^2*y' -> Monomial over ring; '1' is the constant monomial."""
    exponents = [0] * ring.n
    if text != '1':
        for factor in text.split('*'):
            name, _, power = factor.partition('^')
            exponents[ring.index_of(name)] += int(power or 1)
    return Monomial(exponents)


def _poly(ring, text):
    """'x*y + x' -> Polynomial over ring; '0' is the zero polynomial."""
    if text.strip() == '0':
        return Polynomial.zero(ring)
    return Polynomial.from_monomials(ring, [_mono(ring, t.strip()) for t in text.split('+')])


class MonomialOrderTests(SimpleTestCase):
    def setUp(self):
        self.grevlex = Ring(['x', 'y'])
        self.lex = Ring(['x', 'y'], MonomialOrder.LEX)

    def test_grevlex_prefers_lower_exponent_in_last_variable(self):
        a, b = _mono(self.grevlex, 'x^2*y'), _mono(self.grevlex, 'x*y^2')
        self.assertEqual(compare(a, b, self.grevlex), Comparison.GREATER)
        self.assertEqual(compare(b, a, self.grevlex), Comparison.LESS)

    def test_lex_compares_first_variable_first(self):
        self.assertEqual(
            compare(_mono(self.lex, 'x'), _mono(self.lex, 'y^2'), self.lex),
            Comparison.GREATER,
        )

    def test_grevlex_compares_degree_first(self):
        self.assertEqual(
            compare(_mono(self.grevlex, 'x'), _mono(self.grevlex, 'y^2'), self.grevlex),
            Comparison.LESS,
        )

    def test_equal_monomials(self):
        m = _mono(self.grevlex, 'x*y')
        self.assertEqual(compare(m, m, self.grevlex), Comparison.EQUAL)

    def test_from_string(self):
        self.assertIs(MonomialOrder.from_string('LEX'), MonomialOrder.LEX)
        self.assertIs(MonomialOrder.from_string('grevlex'), MonomialOrder.GREVLEX)
        with self.assertRaises(ValueError):
            MonomialOrder.from_string('deglex')


class RingTests(SimpleTestCase):
    def test_standard_names(self):
        self.assertEqual(Ring.standard(3).names, ('x1', 'x2', 'x3'))

    def test_rejects_empty_and_duplicate_names(self):
        with self.assertRaises(ValueError):
            Ring([])
        with self.assertRaises(ValueError):
            Ring(['x', 'x'])

    def test_index_of_undeclared(self):
        with self.assertRaises(ValueError):
            Ring(['x']).index_of('y')

    def test_equality_includes_order(self):
        self.assertEqual(Ring(['x', 'y']), Ring(['x', 'y']))
        self.assertNotEqual(Ring(['x', 'y']), Ring(['x', 'y'], MonomialOrder.LEX))


class MonomialTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def m(self, text):
        return _mono(self.ring, text)

    def test_lcm(self):
        self.assertEqual(monomial_lcm(self.m('x*y'), self.m('y*z')), self.m('x*y*z'))
        self.assertEqual(monomial_lcm(self.m('x*y'), self.m('1')), self.m('x*y'))
        self.assertEqual(monomial_lcm(self.m('x^2*y'), self.m('x*z')), self.m('x^2*y*z'))

    def test_divide(self):
        self.assertEqual(monomial_divide(self.m('x*y*z'), self.m('x*y')), self.m('z'))
        self.assertIsNone(monomial_divide(self.m('x*y'), self.m('z')))
        self.assertEqual(monomial_divide(self.m('x^2*y'), self.m('x*y')), self.m('x'))

    def test_degree_and_squarefree(self):
        m = self.m('x^2*y')
        self.assertEqual(m.degree, 3)
        self.assertFalse(m.is_squarefree)
        self.assertEqual(m.squarefree(), self.m('x*y'))

    def test_divisors(self):
        divisors = set(self.m('x^2*y').divisors())
        self.assertEqual(len(divisors), 6)
        self.assertIn(self.m('1'), divisors)
        self.assertIn(self.m('x^2*y'), divisors)


class PolynomialArithmeticTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_addition_cancels_in_pairs(self):
        self.assertTrue(poly_add(self.p('x*y + x'), self.p('x*y + x')).is_zero)
        self.assertEqual(poly_add(self.p('x*y*z + x*z'), self.p('x*y*z + x*z + x')), self.p('x'))
        self.assertEqual(poly_add(self.p('x + 1'), Polynomial.zero(self.ring)), self.p('x + 1'))

    def test_multiply_by_monomial(self):
        z = _mono(self.ring, 'z')
        self.assertEqual(poly_mul_monomial(z, self.p('x*y + x')), self.p('x*y*z + x*z'))
        y = _mono(self.ring, 'y')
        self.assertEqual(poly_mul_monomial(y, self.p('x*z + y*z + 1')), self.p('x*y*z + y^2*z + y'))
        f = self.p('x + 1')
        self.assertEqual(poly_mul_monomial(self.ring.one(), f), f)

    def test_normal_form_field(self):
        self.assertEqual(normal_form_field(self.p('x*y*z + y^2*z + y')), self.p('x*y*z + y*z + y'))
        self.assertTrue(normal_form_field(self.p('x^2 + x')).is_zero)
        f = self.p('x*y + z')
        self.assertIs(normal_form_field(f), f)

    def test_multiply_modulo_field_equations(self):
        x = _mono(self.ring, 'x')
        f = self.p('x*y + y + 1')
        self.assertEqual(f.mul_monomial_field(x), self.p('x'))
        self.assertEqual(f.mul_monomial_field(x), f.mul_monomial(x).normal_form_field())
        self.assertTrue(self.p('x + 1').mul_monomial_field(x).is_zero)
        self.assertEqual(self.ring.squarefree_monomial(0b101), _mono(self.ring, 'x*z'))

    def test_head_and_canonical_text(self):
        f = self.p('y*z + x*y')
        self.assertEqual(f.head, _mono(self.ring, 'x*y'))
        self.assertEqual(str(f), 'x*y + y*z')
        self.assertEqual(str(Polynomial.zero(self.ring)), '0')
        self.assertEqual(str(self.p('x^2 + x')), 'x^2 + x')

    def test_substitute(self):
        self.assertEqual(substitute(self.p('x*y + x'), 0, 1), self.p('y + 1'))
        self.assertTrue(substitute(self.p('x*y + x'), 0, 0).is_zero)
        f = self.p('y + z')
        self.assertIs(substitute(f, 0, 1), f)
        with self.assertRaises(ValueError):
            substitute(f, 1, 2)

    def test_evaluate(self):
        f = self.p('x*y + z + 1')
        self.assertEqual(f.evaluate((1, 1, 0)), 0)
        self.assertEqual(f.evaluate((0, 1, 0)), 1)

    def test_in_ring_resorts_terms(self):
        lex = self.ring.with_order(MonomialOrder.LEX)
        f = self.p('y^2 + x')
        self.assertEqual(f.head, _mono(self.ring, 'y^2'))
        self.assertEqual(f.in_ring(lex).head, _mono(self.ring, 'x'))


class SPolynomialTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_first_worked_example(self):
        self.assertEqual(s_polynomial(self.p('x*y + x'), self.p('y*z + z + 1')), self.p('x'))

    def test_normalized_products(self):
        f1, f2 = self.p('x*y + y*z'), self.p('x*z + y*z + 1')
        self.assertEqual(s_polynomial(f1, f2, apply_nf=True), self.p('y'))

    def test_without_normal_form(self):
        f1, f2 = self.p('x*y + y*z'), self.p('x*z + y*z + 1')
        s = s_polynomial(f1, f2)
        self.assertEqual(s, self.p('y*z^2 + y^2*z + y'))
        self.assertEqual(str(s), 'y^2*z + y*z^2 + y')

    def test_zero_input_rejected(self):
        with self.assertRaises(ValueError):
            s_polynomial(Polynomial.zero(self.ring), self.p('x'))


class ReductionTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_top_reduce(self):
        self.assertTrue(top_reduce(self.p('x*y + x'), [self.p('x')]).is_zero)
        f = self.p('x*y + 1')
        self.assertEqual(top_reduce(f, []), f)
        self.assertTrue(top_reduce(Polynomial.zero(self.ring), [self.p('x')]).is_zero)

    def test_top_reduce_only_touches_the_head(self):
        self.assertEqual(top_reduce(self.p('y^2 + x'), [self.p('x + 1')]), self.p('y^2 + x'))
        remainder = top_reduce(self.p('y*z + x'), [self.p('y*z + z'), self.p('x + 1')])
        self.assertEqual(remainder, self.p('z + 1'))

    def test_reduce_fully(self):
        self.assertEqual(reduce_fully(self.p('y^2 + x'), [self.p('x + 1')]), self.p('y^2 + 1'))

    def test_top_reduce_is_a_fixed_point(self):
        basis = [self.p('x*y + z'), self.p('y*z + 1')]
        once = top_reduce(self.p('x*y*z + x + y'), basis)
        self.assertEqual(top_reduce(once, basis), once)

    def test_interreduce(self):
        reduced = interreduce([self.p('x*y + 1'), self.p('x + y'), self.p('x*y*z + z')])
        self.assertEqual(reduced, [self.p('y^2 + 1'), self.p('x + y')])
        heads = [f.head for f in reduced]
        self.assertEqual(len(set(heads)), len(heads))
        for i, f in enumerate(reduced):
            others = reduced[:i] + reduced[i + 1:]
            self.assertEqual(reduce_fully(f, others), f)

    def test_interreduce_keeps_the_remainder_of_a_non_minimal_element(self):
        # x*y + 1 is not a consequence of x + 1; its remainder y + 1 stays
        reduced = interreduce([self.p('x*y + 1'), self.p('x + 1')])
        self.assertEqual(reduced, [self.p('x + 1'), self.p('y + 1')])

    def test_interreduce_reaches_a_constant(self):
        reduced = interreduce([self.p('x*y + 1'), self.p('x + 1'), self.p('y')])
        self.assertEqual(reduced, [Polynomial.one(self.ring)])

    def test_interreduce_constant(self):
        self.assertEqual(interreduce([self.p('x'), self.p('1')]), [Polynomial.one(self.ring)])


class UnivariateTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_is_univariate(self):
        self.assertEqual(is_univariate(self.p('x + 1')), 0)
        self.assertIsNone(is_univariate(self.p('x*y + x')))
        self.assertEqual(is_univariate(self.p('x^2 + x + 1')), 0)
        self.assertIsNone(is_univariate(self.p('1')))
        with self.assertRaises(ValueError):
            is_univariate(Polynomial.zero(self.ring))

    def test_roots(self):
        self.assertEqual(roots_gf2(self.p('x + 1'), 0), frozenset({1}))
        self.assertEqual(roots_gf2(self.p('x^2 + x'), 0), frozenset({0, 1}))
        self.assertEqual(roots_gf2(self.p('x^2 + x + 1'), 0), frozenset())

    def test_univariate_root(self):
        self.assertEqual(univariate_root(self.p('y')), (1, frozenset({0})))
        self.assertIsNone(univariate_root(self.p('x + y')))
