"""
Compare F4 variants on HFE and cyclic instances.

Usage:
    python manage.py benchmark_report
    python manage.py benchmark_report --comparison fe-vs-s --hfe-sizes 5,6 --seeds 1,2,3
    python manage.py benchmark_report --record --export report.json
"""
import json

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from benchmarks.services.report import COMPARISONS, build_instances, compare, format_rows


def _int_list(value):
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise CommandError(f"Expected a comma-separated list of integers, got {value!r}", returncode=2)


class Command(BaseCommand):
    help = 'Run variant comparisons (plain vs FE, FE vs S, FE vs Middle-Solving) and print a table'

    def add_arguments(self, parser):
        parser.add_argument(
            '--comparison',
            action='append',
            choices=sorted(COMPARISONS),
            help='Comparison family to run; repeat for several (default: all)',
        )
        parser.add_argument('--hfe-sizes', default='5,6', help='Variable counts of the HFE instances')
        parser.add_argument('--hfe-degree', type=int, default=None, help='Degree bound of the hidden polynomial')
        parser.add_argument('--cyclic-sizes', default='4,5', help='Sizes of the cyclic-n instances')
        parser.add_argument('--seeds', default='1', help='Seeds for the HFE instances')
        parser.add_argument('--record', action='store_true', help='Store every run as a SolverRun')
        parser.add_argument('--export', help='Write the comparison rows as JSON to this file')

    def handle(self, *args, **options):
        degree = options['hfe_degree'] or settings.GROEBNER_CONFIG['HFE_DEFAULT_DEGREE']
        try:
            instances = build_instances(
                hfe_sizes=_int_list(options['hfe_sizes']),
                cyclic_sizes=_int_list(options['cyclic_sizes']),
                seeds=_int_list(options['seeds']),
                degree=degree,
            )
        except ValueError as exc:
            raise CommandError(str(exc), returncode=2)
        if not instances:
            raise CommandError('No instances selected', returncode=2)

        rows = []
        for family in options['comparison'] or list(COMPARISONS):
            self.stdout.write(f'Running {family} on {len(instances)} instances...')
            rows.extend(compare(family, instances, record=options['record']))

        self.stdout.write(format_rows(rows))
        if options['export']:
            with open(options['export'], 'w') as handle:
                json.dump([row.as_dict() for row in rows], handle, indent=2)
            self.stdout.write(self.style.SUCCESS(f"Exported {len(rows)} rows to {options['export']}"))
        self.stdout.write(self.style.SUCCESS('Benchmark report complete'))
