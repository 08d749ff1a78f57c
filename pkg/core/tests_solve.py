import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from benchmarks.models import SolverRun
from core.management.commands.solve import parse_generator, run
from polynomials.utils.monomial_orders import MonomialOrder

STATS_KEYS = {
    'c_pair', 'l_matrix', 'reductor', 'round', 'solved', 'h_deg_gb', 'h_deg_gb_unreduced', 'gb_size',
    'gb_size_unreduced', 'r_time_ms', 'algorithm', 'order', 'n_vars', 'n_eqs', 'seed',
}


class SolveCommandMixin:
    def setUp(self):
        super().setUp()
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write_problem(self, text, name='problem.txt'):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def solve(self, **options):
        out = StringIO()
        call_command('solve', stdout=out, no_color=True, **options)
        return out.getvalue().splitlines()


class SolveCommandTests(SolveCommandMixin, SimpleTestCase):
    def test_basis_and_summary(self):
        path = self.write_problem("vars: x y\nx*y + x\ny + 1\n")
        lines = self.solve(input=path)
        self.assertIn('GB: y + 1', lines)
        self.assertIn('GB: x^2 + x', lines)
        summary = lines[-1]
        self.assertTrue(summary.startswith('summary: algorithm=fe-f4 order=grevlex n=2 gb_size=2'))
        self.assertIn('inconsistent=no', summary)
        self.assertFalse(any(line.startswith('solutions:') for line in lines))

    def test_field_equations_off(self):
        path = self.write_problem("vars: x y\nfield-equations: off\nx*y + x\ny + 1\n")
        lines = self.solve(input=path)
        self.assertEqual([line for line in lines if line.startswith('GB:')], ['GB: y + 1'])

    def test_middle_solving_output(self):
        path = self.write_problem("vars: x\nx + 1\n")
        lines = self.solve(input=path, algorithm='ms-f4')
        self.assertEqual(lines[0], 'solutions: x=1')
        self.assertEqual(lines[1], 'GB: (empty)')
        self.assertIn('solved=1', lines[-1])

    def test_inconsistent_system(self):
        path = self.write_problem("vars: x y\nx + y\nx + y + 1\n")
        lines = self.solve(input=path, algorithm='ms-f4')
        self.assertEqual(lines[:2], ['solutions: none', 'GB: 1'])
        self.assertIn('inconsistent=yes', lines[-1])

    def test_nothing_solved(self):
        path = self.write_problem("vars: x y z\nx*y + z\nx + y\n")
        lines = self.solve(input=path, algorithm='ms-f4')
        self.assertEqual(lines[0], 'solutions: -')

    def test_order_option(self):
        path = self.write_problem("vars: x y\ny^2 + x\n")
        lines = self.solve(input=path, algorithm='f4', order='lex')
        self.assertIn('GB: x + y^2', lines)
        self.assertIn('order=lex', lines[-1])

    def test_buchberger(self):
        lines = self.solve(gen='cyclic:3', algorithm='buchberger')
        self.assertIn('algorithm=buchberger', lines[-1])
        self.assertIn('c_pair=0', lines[-1])

    def test_verify_and_stats(self):
        stats_path = os.path.join(self.tmp.name, 'stats.json')
        lines = self.solve(gen='hfe:9,4,3', algorithm='s-f4', stats=stats_path, verify=True)
        self.assertEqual(lines[-1], 'verify: ok')
        with open(stats_path) as handle:
            stats = json.load(handle)
        self.assertEqual(set(stats), STATS_KEYS)
        self.assertEqual(
            (stats['algorithm'], stats['order'], stats['n_vars'], stats['n_eqs'], stats['seed']),
            ('s-f4', 'grevlex', 4, 4, 3),
        )
        self.assertGreaterEqual(stats['round'], 1)

    def test_cyclic_six_degrees(self):
        stats_path = os.path.join(self.tmp.name, 'stats.json')
        lines = self.solve(gen='cyclic:6', algorithm='fe-f4', stats=stats_path, verify=True)
        self.assertEqual(lines[-1], 'verify: ok')
        self.assertIn('h_deg_gb=1 h_deg_gb_unreduced=6 ', lines[-2])
        with open(stats_path) as handle:
            stats = json.load(handle)
        self.assertEqual((stats['h_deg_gb'], stats['h_deg_gb_unreduced']), (1, 6))
        self.assertIsNone(stats['seed'])

    def test_renew_options(self):
        lines = self.solve(gen='hfe:9,4,5', algorithm='ms-f4', renew_mode='rebuild', history_cap=2, verify=True)
        self.assertEqual(lines[-1], 'verify: ok')


class SolveCommandErrorTests(SolveCommandMixin, SimpleTestCase):
    def assertUsageError(self, message, **options):
        with self.assertRaises(CommandError) as caught:
            self.solve(**options)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertIn(message, str(caught.exception))

    def test_parse_error(self):
        path = self.write_problem("vars: x y\nx*w + 1\n")
        self.assertUsageError('line 2, column 3', input=path)

    def test_missing_file(self):
        self.assertUsageError('Cannot read', input=os.path.join(self.tmp.name, 'missing.txt'))

    def test_bad_generator(self):
        self.assertUsageError('Invalid generator', gen='hfe:17')
        self.assertUsageError('Invalid generator arguments', gen='cyclic:six')
        self.assertUsageError('does not fit', gen='hfe:17,4,1')

    def test_s_f4_needs_field_equations(self):
        self.assertUsageError('requires the field equations', gen='cyclic:3', algorithm='s-f4', no_adjoin=True)

    def test_run_returns_exit_codes(self):
        path = self.write_problem("vars: x y\nx*w + 1\n")
        self.assertEqual(run(['--input', path]), 2)
        self.assertEqual(run(['--gen', 'cyclic:3', '--algorithm', 'fe-f4']), 0)


class ParseGeneratorTests(SimpleTestCase):
    def test_families(self):
        system, seed = parse_generator('cyclic:4', MonomialOrder.GREVLEX)
        self.assertEqual((len(system), seed), (4, None))
        system, seed = parse_generator('hfe:17,5,2', MonomialOrder.LEX)
        self.assertEqual((len(system), seed), (5, 2))
        self.assertIs(system[0].ring.order, MonomialOrder.LEX)


class SolveRecordTests(SolveCommandMixin, TestCase):
    def test_record_stores_run(self):
        self.solve(gen='cyclic:4', algorithm='s-f4', record=True, verify=True)
        run_ = SolverRun.objects.get()
        self.assertEqual(run_.label, 'cyclic:4')
        self.assertEqual(run_.algorithm, 's-f4')
        self.assertEqual(run_.variables, 4)
        self.assertTrue(run_.verified)
        self.assertGreaterEqual(run_.c_pair, 1)
