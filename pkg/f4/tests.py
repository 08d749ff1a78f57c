from django.test import SimpleTestCase, override_settings
from django.conf import settings

from f4.config import VariantConfig
from f4.history import RoundHistory
from f4.services.field_equations import adjoin_field_equations
from f4.services.preprocessing import symbolic_preprocessing_classic, symbolic_preprocessing_spoly
from f4.services.reduction import reduction_classic, reduction_spoly
from f4.services.invariants import InvariantViolation, check_simplify_head
from f4.services.simplify import simplify
from f4.utils.variants import F4Variant, RenewMode, RowTag
from pairs.basis import Basis
from pairs.critical_pair import make_pair
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring
from polynomials.utils.monomial_orders import MonomialOrder


def _poly(ring, text):
    monomials = []
    for term in text.split('+'):
        exponents = [0] * ring.n
        term = term.strip()
        if term != '1':
            for factor in term.split('*'):
                name, _, power = factor.partition('^')
                exponents[ring.index_of(name)] += int(power or 1)
        monomials.append(Monomial(exponents))
    return Polynomial.from_monomials(ring, monomials)


def _basis(ring, *texts):
    basis = Basis(ring)
    for text in texts:
        basis.append(_poly(ring, text))
    return basis


class VariantTests(SimpleTestCase):
    def test_from_string_spellings(self):
        self.assertIs(F4Variant.from_string('fe-f4'), F4Variant.FE_F4)
        self.assertIs(F4Variant.from_string('ms_f4'), F4Variant.MS_F4)
        self.assertIs(F4Variant.from_string('plain_f4'), F4Variant.PLAIN_F4)
        self.assertIs(F4Variant.from_string('f4'), F4Variant.PLAIN_F4)
        with self.assertRaises(ValueError):
            F4Variant.from_string('f5')

    def test_renew_mode(self):
        self.assertIs(RenewMode.from_string('rebuild'), RenewMode.REBUILD)
        with self.assertRaises(ValueError):
            RenewMode.from_string('discard')


class VariantConfigTests(SimpleTestCase):
    def test_defaults_per_variant(self):
        plain = VariantConfig.for_variant('f4')
        self.assertFalse(plain.adjoin_field_eqs)
        self.assertFalse(plain.uses_s_polynomial_rows)

        s = VariantConfig.for_variant('s-f4')
        self.assertTrue(s.adjoin_field_eqs)
        self.assertTrue(s.uses_s_polynomial_rows)
        self.assertFalse(s.middle_solving)

        ms = VariantConfig.for_variant(F4Variant.MS_F4)
        self.assertTrue(ms.middle_solving)
        self.assertIs(ms.renew_mode, RenewMode.RECOMPUTE)

    def test_s_polynomial_variants_need_field_equations(self):
        with self.assertRaises(ValueError):
            VariantConfig.for_variant('s-f4', adjoin_field_eqs=False)
        with self.assertRaises(ValueError):
            VariantConfig.for_variant('ms-f4', adjoin_field_eqs=False)
        self.assertFalse(VariantConfig.for_variant('fe-f4', adjoin_field_eqs=False).adjoin_field_eqs)

    def test_overrides_and_string_values(self):
        config = VariantConfig.for_variant('ms-f4', order='lex', renew_mode='rebuild', history_cap=None)
        self.assertIs(config.order, MonomialOrder.LEX)
        self.assertIs(config.renew_mode, RenewMode.REBUILD)
        self.assertEqual(config.history_cap, settings.GROEBNER_CONFIG['HISTORY_CAP'])

    @override_settings(GROEBNER_CONFIG={
        **settings.GROEBNER_CONFIG, 'HISTORY_CAP': 3, 'DEFAULT_ORDER': 'lex',
    })
    def test_defaults_come_from_settings(self):
        config = VariantConfig.for_variant('fe-f4')
        self.assertEqual(config.history_cap, 3)
        self.assertIs(config.order, MonomialOrder.LEX)


class FieldEquationTests(SimpleTestCase):
    def test_adjoin(self):
        ring = Ring(['x', 'y'])
        system = adjoin_field_equations([_poly(ring, 'x + y')], ring)
        self.assertEqual(
            [str(p) for p in system], ['x + y', 'x^2 + x', 'y^2 + y'],
        )

    def test_no_duplicates(self):
        ring = Ring(['x', 'y'])
        system = adjoin_field_equations([_poly(ring, 'x^2 + x'), _poly(ring, 'x*y')], ring)
        self.assertEqual(len(system), 3)


class RoundHistoryTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def test_lookup_matches_input_and_echelon_head(self):
        history = RoundHistory()
        history.record(1, [_poly(self.ring, 'x*y + x')], [_poly(self.ring, 'x*y + z')])
        self.assertEqual(history.lookup(_poly(self.ring, 'x*y + x')), _poly(self.ring, 'x*y + z'))
        self.assertIsNone(history.lookup(_poly(self.ring, 'x*y + 1')))

    def test_cap_keeps_newest_rounds(self):
        history = RoundHistory(cap=2)
        for number in (1, 2, 3):
            history.record(number, [_poly(self.ring, 'x')], [_poly(self.ring, 'x')])
        self.assertEqual([r.number for r in history], [2, 3])

    def test_substitute_drops_zero_rows(self):
        history = RoundHistory()
        history.record(1, [_poly(self.ring, 'x*y + x'), _poly(self.ring, 'x + 1')],
                       [_poly(self.ring, 'x*y + x')])
        history.substitute({0: 1})
        round_ = next(iter(history))
        self.assertEqual(round_.inputs, [_poly(self.ring, 'y + 1')])
        self.assertEqual(round_.echelon, [_poly(self.ring, 'y + 1')])
        self.assertFalse(history.mentions(0))

    def test_negative_cap_rejected(self):
        with self.assertRaises(ValueError):
            RoundHistory(cap=-1)


class SimplifyTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])
        self.f = _poly(self.ring, 'y + 1')
        self.history = RoundHistory()
        self.history.record(1, [_poly(self.ring, 'x*y + x')], [_poly(self.ring, 'x*y + z')])

    def m(self, text):
        return _poly(self.ring, text).head

    def test_empty_history_leaves_product(self):
        t = self.m('x')
        self.assertEqual(simplify(t, self.f, RoundHistory()), (t, self.f))

    def test_whole_multiplier_found(self):
        t, p = simplify(self.m('x'), self.f, self.history)
        self.assertTrue(t.is_one)
        self.assertEqual(p, _poly(self.ring, 'x*y + z'))

    def test_strict_divisor_recurses(self):
        t, p = simplify(self.m('x*z'), self.f, self.history)
        self.assertEqual(t, self.m('z'))
        self.assertEqual(p, _poly(self.ring, 'x*y + z'))
        self.assertEqual(p.mul_monomial(t).head, self.f.mul_monomial(self.m('x*z')).head)

    def test_no_matching_divisor(self):
        t = self.m('z')
        self.assertEqual(simplify(t, self.f, self.history), (t, self.f))

    def test_normalized_lookup(self):
        t, p = simplify(self.m('x'), self.f, self.history, normalize=True, check=True)
        self.assertTrue(t.is_one)
        self.assertEqual(p, _poly(self.ring, 'x*y + z'))

    def test_checked_simplify_keeps_the_head(self):
        t, p = simplify(self.m('x*z'), self.f, self.history, check=True)
        self.assertEqual((t, p), (self.m('z'), _poly(self.ring, 'x*y + z')))

    def test_moved_head_is_a_violation(self):
        check_simplify_head(self.m('x'), self.f, self.ring.one(), _poly(self.ring, 'x*y + z'))
        with self.assertRaises(InvariantViolation):
            check_simplify_head(self.m('x'), self.f, self.ring.one(), _poly(self.ring, 'z + 1'))
        with self.assertRaises(InvariantViolation):
            check_simplify_head(
                self.m('x'), self.f, self.ring.one(), _poly(self.ring, 'x + 1'), normalize=True,
            )


class PreprocessingTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def test_classic_worked_example_has_no_reducers(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1')
        prepared = symbolic_preprocessing_classic([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(
            prepared.rows,
            [_poly(self.ring, 'x*y*z + x*z'), _poly(self.ring, 'x*y*z + x*z + x')],
        )
        self.assertEqual(prepared.tags, [RowTag.PAIR_PRODUCT, RowTag.PAIR_PRODUCT])
        self.assertEqual(prepared.reducers, [])

    def test_classic_appends_reducer_for_tail_monomial(self):
        basis = _basis(self.ring, 'x*y + x', 'x')
        prepared = symbolic_preprocessing_classic([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(prepared.reducers, [_poly(self.ring, 'x')])
        self.assertEqual(len(prepared), 3)

    def test_spoly_seed_rows(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1', 'x^2 + x', 'y^2 + y', 'z^2 + z')
        prepared = symbolic_preprocessing_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(prepared.rows, [_poly(self.ring, 'x')])
        self.assertEqual(prepared.tags, [RowTag.S_POLYNOMIAL])

        basis = _basis(self.ring, 'x*y + y*z', 'x*z + y*z + 1')
        prepared = symbolic_preprocessing_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(prepared.rows[0], _poly(self.ring, 'y'))

    def test_spoly_zero_seed_dropped(self):
        basis = _basis(self.ring, 'x + 1', 'x^2 + x')
        prepared = symbolic_preprocessing_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(len(prepared), 0)

    def test_spoly_reducer_for_seed_head(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1', 'x + y')
        prepared = symbolic_preprocessing_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(prepared.rows[0], _poly(self.ring, 'x'))
        self.assertEqual(prepared.reducers, [_poly(self.ring, 'x + y')])


class ReductionTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def test_classic_produces_new_polynomial(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1')
        result = reduction_classic([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(result.new_polynomials, [_poly(self.ring, 'x')])
        self.assertEqual(result.row_count, 2)
        self.assertEqual(result.reducer_count, 0)
        self.assertEqual(len(result.echelon), 2)

    def test_classic_reduces_to_zero(self):
        basis = _basis(self.ring, 'x*y + x', 'x*y + x + y*z', 'y*z')
        pairs = [make_pair(0, 1, basis)]
        result = reduction_classic(pairs, basis, RoundHistory())
        self.assertEqual(result.new_polynomials, [])

    def test_spoly_without_reducers_keeps_all_rows(self):
        basis = _basis(self.ring, 'x*y + y*z', 'x*z + y*z + 1', 'x^2 + x', 'y^2 + y', 'z^2 + z')
        result = reduction_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(result.new_polynomials, [_poly(self.ring, 'y')])
        self.assertEqual(result.reducer_count, 0)

    def test_spoly_reducer_heads_are_not_new(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1', 'x + y')
        result = reduction_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(result.reducer_count, 1)
        self.assertEqual(result.new_polynomials, [_poly(self.ring, 'y')])

    def test_empty_round(self):
        basis = _basis(self.ring, 'x + 1', 'x^2 + x')
        result = reduction_spoly([make_pair(0, 1, basis)], basis, RoundHistory())
        self.assertEqual(result.row_count, 0)
        self.assertEqual(result.new_polynomials, [])
