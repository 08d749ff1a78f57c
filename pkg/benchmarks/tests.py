import itertools

import numpy as np
from django.conf import settings
from django.test import SimpleTestCase, override_settings

from benchmarks.services.generators import HFEKey, gen_cyclic, gen_hfe, hfe_exponents
from benchmarks.services.variety import brute_force_variety
from benchmarks.services.verification import generates_inputs, is_groebner_basis, verify_result
from benchmarks.stats import RunStats, record
from benchmarks.utils.solver_events import SolverEvent
from f4.services.solver import SolverResult
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring


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


class CyclicGeneratorTests(SimpleTestCase):
    def test_cyclic_three(self):
        ring = Ring.standard(3)
        self.assertEqual(gen_cyclic(3), [
            _poly(ring, 'x1 + x2 + x3'),
            _poly(ring, 'x1*x2 + x2*x3 + x1*x3'),
            _poly(ring, 'x1*x2*x3 + 1'),
        ])

    def test_degrees(self):
        for n in range(2, 8):
            system = gen_cyclic(n)
            self.assertEqual(len(system), n)
            self.assertEqual([p.degree for p in system], list(range(1, n + 1)))

    def test_cyclic_two(self):
        system = gen_cyclic(2)
        self.assertEqual([str(p) for p in system], ['x1 + x2', 'x1*x2 + 1'])

    def test_too_small(self):
        with self.assertRaises(ValueError):
            gen_cyclic(1)


class HFEGeneratorTests(SimpleTestCase):
    def test_exponents(self):
        self.assertEqual(hfe_exponents(17), [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17])
        self.assertEqual(hfe_exponents(2), [1, 2])
        with self.assertRaises(ValueError):
            hfe_exponents(1)

    def test_shape_and_witness(self):
        system, witness = gen_hfe(17, 5, 1)
        self.assertEqual(len(system), 5)
        self.assertTrue(all(p.degree <= 2 for p in system))
        self.assertTrue(all(p.is_squarefree for p in system))
        self.assertEqual(len(witness), 5)
        for p in system:
            self.assertEqual(p.evaluate(witness), 0)

    def test_seeded(self):
        self.assertEqual(gen_hfe(17, 5, 7), gen_hfe(17, 5, 7))
        self.assertNotEqual(gen_hfe(17, 6, 1)[0], gen_hfe(17, 6, 2)[0])

    def test_public_polynomials_match_the_key(self):
        key = HFEKey.generate(5, 4, np.random.default_rng(7))
        ring = Ring.standard(4)
        polynomials = key.public_polynomials(ring)
        for point in itertools.product((0, 1), repeat=4):
            expected = [int(bit) for bit in key.public(point)]
            self.assertEqual([p.evaluate(point) for p in polynomials], expected, point)

    def test_invalid_parameters(self):
        with self.assertRaises(ValueError):
            gen_hfe(17, 1, 1)
        with self.assertRaises(ValueError):
            gen_hfe(32, 5, 1)
        with self.assertRaises(ValueError):
            gen_hfe(17, 5, 1, Ring.standard(4))


class BruteForceVarietyTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def test_points(self):
        system = [_poly(self.ring, 'x + y'), _poly(self.ring, 'y + 1')]
        self.assertEqual(
            brute_force_variety(system, self.ring), {(1, 1, 0), (1, 1, 1)},
        )
        self.assertEqual(brute_force_variety([Polynomial.one(self.ring)], self.ring), set())
        self.assertEqual(len(brute_force_variety([], self.ring)), 8)

    def test_fixed_variables(self):
        system = [_poly(self.ring, 'x*y + z')]
        self.assertEqual(
            brute_force_variety(system, self.ring, fixed={0: 1, 1: 1}), {(1, 1, 1)},
        )
        self.assertEqual(
            brute_force_variety(system, self.ring, fixed={0: 0}), {(0, 0, 0), (0, 1, 0)},
        )

    @override_settings(GROEBNER_CONFIG={**settings.GROEBNER_CONFIG, 'BRUTE_FORCE_MAX_VARS': 2})
    def test_budget(self):
        with self.assertRaises(ValueError):
            brute_force_variety([_poly(self.ring, 'x')], self.ring)
        self.assertEqual(
            brute_force_variety([_poly(self.ring, 'x')], self.ring, fixed={2: 0}),
            {(0, 0, 0), (0, 1, 0)},
        )


class RunStatsTests(SimpleTestCase):
    def test_pair_counts_add_up(self):
        stats = RunStats()
        stats.record(SolverEvent.PAIRS_SELECTED, 3)
        stats.record(SolverEvent.PAIRS_SELECTED, 5)
        self.assertEqual(stats.c_pair, 8)

    def test_matrix_keeps_maximum(self):
        stats = RunStats()
        for rows in (4, 9, 2):
            record(stats, SolverEvent.MATRIX_BUILT, rows)
        self.assertEqual(stats.l_matrix, 9)

    def test_string_events(self):
        stats = RunStats().record('round-completed').record('variable-solved', 2)
        self.assertEqual((stats.round, stats.solved), (1, 2))
        with self.assertRaises(ValueError):
            stats.record('matrix-inverted')
        with self.assertRaises(ValueError):
            stats.record(SolverEvent.REDUCERS_APPENDED, -1)

    def test_finalize(self):
        ring = Ring(['x', 'y'])
        final = [_poly(ring, 'x*y + x'), _poly(ring, 'y + 1'), _poly(ring, 'x^2 + x')]
        stats = RunStats().finalize([_poly(ring, 'y + 1')], final)
        self.assertEqual((stats.gb_size, stats.gb_size_unreduced), (1, 3))
        self.assertEqual((stats.h_deg_gb, stats.h_deg_gb_unreduced), (1, 2))
        self.assertEqual(set(stats.as_dict()), {
            'c_pair', 'l_matrix', 'reductor', 'round', 'solved', 'h_deg_gb',
            'h_deg_gb_unreduced', 'gb_size', 'gb_size_unreduced', 'r_time',
        })


class VerificationTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_groebner_criterion(self):
        self.assertTrue(is_groebner_basis([self.p('x*y + x'), self.p('y + 1')]))
        self.assertFalse(is_groebner_basis([self.p('x*y + 1'), self.p('x + y')]))
        self.assertTrue(is_groebner_basis([]))

    def test_membership(self):
        basis = [self.p('y + 1')]
        self.assertTrue(generates_inputs(basis, [self.p('x*y + x')]))
        self.assertFalse(generates_inputs(basis, [self.p('x + 1')]))
        self.assertTrue(generates_inputs(basis, [self.p('x + 1')], solved={0: 1}))

    def test_report_flags_a_wrong_basis(self):
        system = [self.p('x*y + x'), self.p('y + 1')]
        wrong = SolverResult(ring=self.ring, basis=[self.p('x + 1')], stats=RunStats())
        report = verify_result(system, wrong)
        self.assertFalse(report.ok)
        self.assertFalse(report.membership)
        self.assertFalse(report.variety)
        self.assertEqual(len(report.problems), 2)

    def test_report_skips_large_varieties(self):
        system = [self.p('x*y + x'), self.p('y + 1')]
        right = SolverResult(ring=self.ring, basis=[self.p('y + 1')], stats=RunStats())
        report = verify_result(system, right, field_equations=False, max_vars=1)
        self.assertTrue(report.ok)
        self.assertIsNone(report.variety)
