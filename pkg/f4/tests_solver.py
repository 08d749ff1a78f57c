"""
End-to-end runs of the F4 variants against the Buchberger reference and the
brute-force variety.
"""
import itertools
import random

from django.test import SimpleTestCase

from benchmarks.services.generators import gen_cyclic, gen_hfe
from benchmarks.services.variety import brute_force_variety
from benchmarks.services.verification import verify_result
from f4.config import VariantConfig
from f4.services.buchberger import buchberger_reference
from f4.services.field_equations import adjoin_field_equations
from f4.services.solver import F4Solver, fe_f4, ms_f4, plain_f4, s_f4
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring
from polynomials.services.reduction import interreduce
from polynomials.utils.monomial_orders import MonomialOrder

SEED = 20240611


def _poly(ring, text):
    monomials = []
    for term in text.split('+'):
        exponents = [0] * ring.n
        term = term.strip()
        if term != '1':
            for factor in term.split('*'):
                exponents[ring.index_of(factor)] += 1
        monomials.append(Monomial(exponents))
    return Polynomial.from_monomials(ring, monomials)


def _random_quadratic_system(rng, ring, count):
    """`count` nonzero random polynomials of degree <= 2 in squarefree monomials."""
    monomials = [ring.one()]
    for k in (1, 2):
        for support in itertools.combinations(range(ring.n), k):
            monomials.append(Monomial(1 if i in support else 0 for i in range(ring.n)))
    system = []
    while len(system) < count:
        p = Polynomial.from_monomials(ring, [m for m in monomials if rng.random() < 0.4])
        if not p.is_zero and not p.is_constant:
            system.append(p)
    return system


def _canonical(basis):
    return sorted(str(p) for p in basis)


class SmallSystemTests(SimpleTestCase):
    def test_single_linear_equation(self):
        ring = Ring(['x'])
        system = [_poly(ring, 'x + 1')]

        result = fe_f4(system)
        self.assertEqual(result.basis, [_poly(ring, 'x + 1')])
        self.assertFalse(result.inconsistent)

        result = ms_f4(system)
        self.assertEqual(result.solutions, {0: 1})
        self.assertEqual(result.basis, [])
        self.assertEqual(result.stats.solved, 1)
        self.assertTrue(verify_result(system, result).ok)

    def test_inconsistent_system(self):
        ring = Ring(['x', 'y'])
        system = [_poly(ring, 'x + y'), _poly(ring, 'x + y + 1')]
        for run in (fe_f4, s_f4, ms_f4):
            result = run(system)
            self.assertTrue(result.inconsistent)
            self.assertEqual(result.basis, [Polynomial.one(ring)])
            self.assertEqual(result.stats.gb_size, 1)

    def test_constant_input_is_inconsistent(self):
        ring = Ring(['x', 'y'])
        result = fe_f4([_poly(ring, 'x*y'), Polynomial.one(ring)])
        self.assertTrue(result.inconsistent)
        self.assertEqual(result.stats.round, 0)

    def test_plain_f4_matches_buchberger(self):
        ring = Ring(['x', 'y'])
        system = [_poly(ring, 'x*y + x'), _poly(ring, 'y + 1')]
        result = plain_f4(system)
        self.assertEqual(result.basis, buchberger_reference(system))
        self.assertEqual(result.basis, [_poly(ring, 'y + 1')])

    def test_empty_system_rejected(self):
        ring = Ring(['x'])
        with self.assertRaises(ValueError):
            fe_f4([Polynomial.zero(ring)])

    def test_mixed_rings_rejected(self):
        with self.assertRaises(ValueError):
            fe_f4([_poly(Ring(['x']), 'x'), _poly(Ring(['y']), 'y')])

    def test_order_from_config(self):
        ring = Ring(['x', 'y'])
        system = [_poly(ring, 'x*y + x'), _poly(ring, 'x + y')]
        result = F4Solver(system, VariantConfig.for_variant('fe-f4', order='lex')).run()
        self.assertIs(result.ring.order, MonomialOrder.LEX)
        self.assertEqual(
            _canonical(result.basis),
            _canonical(buchberger_reference(adjoin_field_equations(system, ring), MonomialOrder.LEX)),
        )

    def test_ms_without_fixed_variables_matches_s(self):
        ring = Ring(['x', 'y', 'z'])
        # variety {000, 111}: no variable has a single value
        system = [_poly(ring, 'x*y + z'), _poly(ring, 'x + y')]
        s, ms = s_f4(system), ms_f4(system)
        self.assertEqual(ms.stats.solved, 0)
        self.assertEqual(ms.basis, s.basis)
        self.assertEqual(ms.stats.c_pair, s.stats.c_pair)
        self.assertEqual(ms.stats.round, s.stats.round)


class CrossOracleTests(SimpleTestCase):
    def test_variants_agree_with_buchberger(self):
        rng = random.Random(SEED)
        for order in MonomialOrder:
            ring = Ring.standard(3, order)
            for _ in range(25):
                system = _random_quadratic_system(rng, ring, rng.randint(1, 4))
                expected = _canonical(
                    buchberger_reference(adjoin_field_equations(system, ring))
                )
                for run in (fe_f4, s_f4):
                    result = run(system, order=order)
                    self.assertEqual(_canonical(result.basis), expected, f"{run.__name__}: {system}")

    def test_plain_f4_agrees_without_field_equations(self):
        rng = random.Random(SEED + 1)
        ring = Ring.standard(3)
        for _ in range(15):
            system = _random_quadratic_system(rng, ring, rng.randint(2, 4))
            self.assertEqual(
                _canonical(plain_f4(system).basis),
                _canonical(buchberger_reference(system)),
            )

    def test_ms_preserves_the_variety(self):
        rng = random.Random(SEED + 2)
        ring3 = Ring.standard(3)
        fixed = [
            # inconsistent: x1 = x2 + 1 and x3 = 1 leave x1*x2 + 1 = 1
            [_poly(ring3, 'x1 + x2 + 1'), _poly(ring3, 'x2*x3 + x2'),
             _poly(ring3, 'x1*x2 + 1'), _poly(ring3, 'x1 + x2 + x3')],
            # two solutions, 000 and 111
            [_poly(ring3, 'x1*x2 + x3'), _poly(ring3, 'x1 + x2')],
        ]
        systems = list(fixed)
        for n in (3, 4, 5, 6):
            ring = Ring.standard(n)
            for _ in range(32):
                systems.append(_random_quadratic_system(rng, ring, rng.randint(n - 1, n + 1)))
        inconsistent = several = 0
        for renew_mode in ('recompute', 'rebuild'):
            for system in systems:
                result = ms_f4(system, renew_mode=renew_mode)
                report = verify_result(system, result)
                self.assertTrue(report.ok, f"{renew_mode}: {system}: {report.problems}")
                self.assertEqual(result.stats.solved, len(result.solutions))
                size = len(brute_force_variety(system, result.ring))
                inconsistent += size == 0
                several += size > 1
        self.assertGreaterEqual(len(systems) * 2, 250)
        self.assertGreaterEqual(inconsistent, 2)
        self.assertGreaterEqual(several, 2)

    def test_ms_regression_inconsistent_after_substitution(self):
        ring = Ring.standard(3)
        system = [
            _poly(ring, 'x1 + x2 + 1'), _poly(ring, 'x2*x3 + x2'),
            _poly(ring, 'x1*x2 + 1'), _poly(ring, 'x1 + x2 + x3'),
        ]
        self.assertEqual(fe_f4(system).basis, [Polynomial.one(ring)])
        for renew_mode in ('recompute', 'rebuild'):
            result = ms_f4(system, renew_mode=renew_mode)
            self.assertTrue(result.inconsistent, renew_mode)
            self.assertEqual(result.basis, [Polynomial.one(ring)])

    def test_ms_matches_fe_after_substituting_its_values(self):
        rng = random.Random(SEED + 4)
        systems = [gen_hfe(17, n, seed)[0] for n in (5, 6) for seed in range(3)]
        for n in (4, 5):
            ring = Ring.standard(n)
            systems.extend(_random_quadratic_system(rng, ring, n) for _ in range(10))
        for system in systems:
            fe, ms = fe_f4(system), ms_f4(system)
            substituted = [p.substitute_all(ms.solutions) for p in fe.basis]
            self.assertEqual(_canonical(interreduce(substituted)), _canonical(ms.basis), str(system))

    def test_history_cap_does_not_change_the_basis(self):
        rng = random.Random(SEED + 3)
        ring = Ring.standard(4)
        for _ in range(10):
            system = _random_quadratic_system(rng, ring, 3)
            self.assertEqual(
                _canonical(fe_f4(system, history_cap=1).basis),
                _canonical(fe_f4(system).basis),
            )


class BenchmarkInstanceTests(SimpleTestCase):
    def test_cyclic_six_degrees(self):
        # over GF(2) cyclic-6 has the single solution x_i = 1
        system = gen_cyclic(6)
        result = fe_f4(system)
        ring = result.ring
        self.assertEqual(result.basis, [Polynomial(ring, (ring.variable(i), ring.one())) for i in range(6)])
        self.assertEqual((result.stats.h_deg_gb, result.stats.h_deg_gb_unreduced), (1, 6))
        self.assertTrue(verify_result(system, result).ok)

    def test_hfe_variants_verify(self):
        system, _ = gen_hfe(17, 5, 1)
        for run in (fe_f4, s_f4, ms_f4):
            result = run(system)
            self.assertFalse(result.inconsistent)
            self.assertTrue(verify_result(system, result).ok, run.__name__)
            self.assertLessEqual(result.stats.h_deg_gb, 5)

    def test_field_equations_cut_pairs(self):
        system, _ = gen_hfe(17, 5, 1)
        plain, fe = plain_f4(system), fe_f4(system)
        self.assertLess(fe.stats.c_pair, plain.stats.c_pair)

    def test_s_polynomial_rows_cut_reducers(self):
        system, _ = gen_hfe(17, 5, 2)
        fe, s = fe_f4(system), s_f4(system)
        self.assertLess(s.stats.reductor, fe.stats.reductor)
        self.assertEqual(_canonical(s.basis), _canonical(fe.basis))

    def test_rounds_have_rows(self):
        system, _ = gen_hfe(17, 5, 3)
        for run in (fe_f4, s_f4, ms_f4):
            stats = run(system).stats
            self.assertGreaterEqual(stats.round, 1)
            self.assertGreaterEqual(stats.l_matrix, 1)
            self.assertGreaterEqual(stats.c_pair, stats.round)
