import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from benchmarks.models import SolverRun
from benchmarks.serializers import RunStatsSerializer, SolverRunSerializer
from benchmarks.services.generators import gen_cyclic
from benchmarks.services.report import COMPARISONS, ComparisonRow, build_instances, compare, format_rows, mean_factor
from benchmarks.stats import RunStats
from f4.services.solver import fe_f4, ms_f4


def _stats_data(**overrides):
    data = {
        'c_pair': 4, 'l_matrix': 6, 'reductor': 2, 'round': 2, 'solved': 0,
        'h_deg_gb': 3, 'h_deg_gb_unreduced': 4, 'gb_size': 3, 'gb_size_unreduced': 7, 'r_time_ms': 1.5,
        'algorithm': 'fe-f4', 'order': 'grevlex', 'n_vars': 3, 'n_eqs': 3, 'seed': None,
    }
    data.update(overrides)
    return data


class RunStatsSerializerTests(SimpleTestCase):
    def test_payload_from_result(self):
        system = gen_cyclic(4)
        result = ms_f4(system)
        data = RunStatsSerializer(RunStatsSerializer.payload(result, system, seed=None)).data
        self.assertEqual(data['algorithm'], 'ms-f4')
        self.assertEqual((data['n_vars'], data['n_eqs']), (4, 4))
        self.assertEqual(data['gb_size'], len(result.basis))
        self.assertAlmostEqual(data['r_time_ms'], result.stats.r_time * 1000.0)

    def test_validation(self):
        self.assertTrue(RunStatsSerializer(data=_stats_data()).is_valid())

        serializer = RunStatsSerializer(data=_stats_data(l_matrix=0))
        self.assertFalse(serializer.is_valid())
        self.assertIn('l_matrix', serializer.errors)

        serializer = RunStatsSerializer(data=_stats_data(algorithm='f5', c_pair=-1))
        self.assertFalse(serializer.is_valid())
        self.assertEqual(set(serializer.errors), {'algorithm', 'c_pair'})


class ComparisonTests(SimpleTestCase):
    def test_build_instances(self):
        instances = build_instances(hfe_sizes=[5], cyclic_sizes=[3, 4], seeds=[1, 2])
        self.assertEqual(
            [instance.label for instance in instances],
            ['hfe:17,5,1', 'hfe:17,5,2', 'cyclic:3', 'cyclic:4'],
        )

    def test_compare_rows(self):
        instances = build_instances(cyclic_sizes=[4])
        rows = compare('fe-vs-s', instances)
        self.assertEqual(len(rows), 1)
        row = rows[0]
        self.assertEqual(row.metrics, COMPARISONS['fe-vs-s'][2])
        self.assertEqual(set(row.ratios()), {'reductor', 'l_matrix', 'r_time'})
        exported = row.as_dict()
        self.assertEqual(exported['instance'], 'cyclic:4')
        self.assertEqual(exported['baseline']['l_matrix'], row.baseline.l_matrix)

    def test_zero_baseline_has_no_ratio(self):
        rows = compare('fe-vs-ms', build_instances(cyclic_sizes=[3]))
        self.assertIsNone(rows[0].ratios()['solved'])
        table = format_rows(rows)
        self.assertTrue(table.splitlines()[0].startswith('family'))
        self.assertIn('cyclic:3', table)

    def test_mean_factor(self):
        rows = [
            ComparisonRow('fe-vs-s', 'a', RunStats(reductor=30), RunStats(reductor=10), ('reductor',)),
            ComparisonRow('fe-vs-s', 'b', RunStats(reductor=10), RunStats(reductor=10), ('reductor',)),
            ComparisonRow('fe-vs-s', 'c', RunStats(reductor=5), RunStats(reductor=0), ('reductor',)),
        ]
        self.assertEqual(mean_factor(rows, 'reductor'), 2.0)
        self.assertIsNone(mean_factor(rows[2:], 'reductor'))
        self.assertIn('mean factor', format_rows(rows[:2]).splitlines()[-1])

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            compare('s-vs-buchberger', build_instances(cyclic_sizes=[3]))


class SolverRunTests(TestCase):
    def test_from_result(self):
        system = gen_cyclic(4)
        result = fe_f4(system)
        run = SolverRun.from_result('cyclic:4', system, result, verified=True)
        self.assertEqual(str(run), 'fe-f4 on cyclic:4')
        self.assertEqual(run.gb_size, result.stats.gb_size)
        self.assertEqual((run.h_deg_gb, run.h_deg_gb_unreduced), (1, 4))

        data = SolverRunSerializer(run).data
        self.assertEqual(data['label'], 'cyclic:4')
        self.assertEqual(data['algorithm'], 'fe-f4')
        self.assertTrue(data['verified'])


class BenchmarkReportCommandTests(TestCase):
    def report(self, **options):
        out = StringIO()
        call_command('benchmark_report', stdout=out, no_color=True, **options)
        return out.getvalue()

    def test_export_and_record(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.json')
            output = self.report(
                comparison=['plain-vs-fe'], hfe_sizes='', cyclic_sizes='3', record=True, export=path,
            )
            with open(path) as handle:
                rows = json.load(handle)
        self.assertIn('Benchmark report complete', output)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['family'], 'plain-vs-fe')
        self.assertEqual(SolverRun.objects.count(), 2)
        self.assertEqual(
            set(SolverRun.objects.values_list('algorithm', flat=True)), {'f4', 'fe-f4'},
        )

    def test_bad_lists(self):
        with self.assertRaises(CommandError) as caught:
            self.report(hfe_sizes='five')
        self.assertEqual(caught.exception.returncode, 2)
        with self.assertRaises(CommandError):
            self.report(hfe_sizes='', cyclic_sizes='')
