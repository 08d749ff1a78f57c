"""
Compute a Groebner basis of a GF(2) system.

Usage:
    python manage.py solve --input problem.txt --algorithm ms-f4
    python manage.py solve --gen hfe:17,6,1 --algorithm s-f4 --stats stats.json --verify
    python manage.py solve --gen cyclic:6 --algorithm fe-f4 --record

Exit codes: 0 basis computed (an inconsistent system included),
1 verification failed, 2 usage or parse error.
"""
import json
import logging
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from benchmarks.models import SolverRun
from benchmarks.serializers import RunStatsSerializer
from benchmarks.services.generators import gen_cyclic, gen_hfe
from benchmarks.services.verification import verify_result
from benchmarks.stats import RunStats
from benchmarks.utils.algorithms import AlgorithmType
from core.services.problem_parser import ProblemParseError, parse_problem
from f4.config import VariantConfig
from f4.services.buchberger import buchberger_reference
from f4.services.field_equations import adjoin_field_equations
from f4.services.solver import SolverResult, f4_main
from f4.utils.variants import RenewMode
from polynomials.ring import Ring
from polynomials.utils.monomial_orders import MonomialOrder

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

APP_LOGGERS = ('core', 'polynomials', 'pairs', 'f4', 'middle_solving', 'benchmarks')


def parse_generator(generator, order):
    """'hfe:D,N,SEED' or 'cyclic:N' -> (system, seed); seed is None for cyclic."""
    family, _, arguments = generator.partition(':')
    try:
        values = [int(part) for part in arguments.split(',')]
    except ValueError:
        raise ValueError(f"Invalid generator arguments: {generator}")
    if family == 'hfe' and len(values) == 3:
        d, n, seed = values
        system, _ = gen_hfe(d, n, seed, Ring.standard(n, order))
        return system, seed
    if family == 'cyclic' and len(values) == 1:
        return gen_cyclic(values[0], Ring.standard(values[0], order)), None
    raise ValueError(f"Invalid generator: {generator} (expected hfe:D,N,SEED or cyclic:N)")


class Command(BaseCommand):
    help = 'Compute a Groebner basis over GF(2) with Buchberger or an F4 variant'

    def add_arguments(self, parser):
        parser.add_argument(
            '--algorithm',
            choices=[value for value, _ in AlgorithmType.choices()],
            default=AlgorithmType.FE_F4.value,
        )
        parser.add_argument('--order', choices=[value for value, _ in MonomialOrder.choices()])
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--input', help='Problem file')
        source.add_argument('--gen', help='Generated instance: hfe:D,N,SEED or cyclic:N')
        parser.add_argument('--stats', help='Write run statistics as JSON to this file')
        parser.add_argument(
            '--verify',
            action='store_true',
            help="Check Buchberger's criterion, input membership and (n <= 24) the variety",
        )
        parser.add_argument('--renew-mode', choices=[value for value, _ in RenewMode.choices()])
        parser.add_argument('--history-cap', type=int, help='Rounds kept for Simplify (0 keeps all)')
        parser.add_argument(
            '--no-adjoin',
            action='store_true',
            help='Do not adjoin x^2 + x (f4 vs fe-f4 ablations; rejected for s-f4 and ms-f4)',
        )
        parser.add_argument('--record', action='store_true', help='Store the run as a SolverRun')

    def handle(self, *args, **options):
        self._apply_verbosity(options['verbosity'])
        algorithm = AlgorithmType.from_string(options['algorithm'])
        label, ring, system, adjoin, seed = self._load(options)
        if algorithm is AlgorithmType.F4:
            adjoin = False

        if algorithm is AlgorithmType.BUCHBERGER:
            result = self._run_buchberger(system, ring, adjoin)
        else:
            try:
                config = VariantConfig.for_variant(
                    algorithm.value,
                    order=ring.order,
                    adjoin_field_eqs=adjoin,
                    renew_mode=options['renew_mode'],
                    history_cap=options['history_cap'],
                )
            except ValueError as exc:
                raise CommandError(str(exc), returncode=EXIT_USAGE)
            result = f4_main(system, config)

        self._write_result(algorithm, result)
        if options['stats']:
            with open(options['stats'], 'w') as handle:
                payload = RunStatsSerializer.payload(result, system, seed)
                json.dump(RunStatsSerializer(payload).data, handle, indent=2, sort_keys=True)
                handle.write("\n")

        verified = None
        if options['verify']:
            report = verify_result(system, result, field_equations=adjoin)
            verified = report.ok
        if options['record']:
            SolverRun.from_result(label, system, result, verified=verified)
        if verified is False:
            raise CommandError(
                'Verification failed: ' + '; '.join(report.problems),
                returncode=EXIT_VERIFICATION_FAILED,
            )
        if verified:
            self.stdout.write(self.style.SUCCESS('verify: ok'))

    def _load(self, options):
        order = options['order']
        try:
            if options['input']:
                with open(options['input']) as handle:
                    problem = parse_problem(handle.read(), default_order=order)
                ring = problem.ring.with_order(order) if order else problem.ring
                system = [p.in_ring(ring) for p in problem.system]
                adjoin = problem.field_equations and not options['no_adjoin']
                return options['input'], ring, system, adjoin, None
            order = MonomialOrder.from_string(order or settings.GROEBNER_CONFIG['DEFAULT_ORDER'])
            system, seed = parse_generator(options['gen'], order)
            return options['gen'], system[0].ring, system, not options['no_adjoin'], seed
        except OSError as exc:
            raise CommandError(f"Cannot read {options['input']}: {exc}", returncode=EXIT_USAGE)
        except ProblemParseError as exc:
            raise CommandError(f"{options['input']}: {exc}", returncode=EXIT_USAGE)
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

    def _run_buchberger(self, system, ring, adjoin):
        inputs = adjoin_field_equations(system, ring) if adjoin else system
        basis = buchberger_reference(inputs, ring.order)
        stats = RunStats().finalize(basis, basis)
        return SolverResult(
            ring=ring,
            basis=basis,
            stats=stats,
            inconsistent=bool(basis) and basis[0].is_constant,
            algorithm=AlgorithmType.BUCHBERGER.value,
        )

    def _write_result(self, algorithm, result):
        if algorithm is AlgorithmType.MS_F4:
            if result.inconsistent:
                solutions = 'none'
            elif result.assignment.solved:
                solutions = result.assignment.describe(result.ring)
            else:
                solutions = '-'
            self.stdout.write(f'solutions: {solutions}')
        if not result.basis:
            self.stdout.write('GB: (empty)')
        for p in result.basis:
            self.stdout.write(f'GB: {p}')
        stats = result.stats
        self.stdout.write(
            f'summary: algorithm={algorithm.value} order={result.ring.order.value} '
            f'n={result.ring.n} gb_size={stats.gb_size} '
            f'gb_size_unreduced={stats.gb_size_unreduced} h_deg_gb={stats.h_deg_gb} '
            f'h_deg_gb_unreduced={stats.h_deg_gb_unreduced} '
            f'c_pair={stats.c_pair} l_matrix={stats.l_matrix} reductor={stats.reductor} '
            f'round={stats.round} solved={stats.solved} '
            f"inconsistent={'yes' if result.inconsistent else 'no'}"
        )

    def _apply_verbosity(self, verbosity):
        if verbosity > 1:
            level = logging.DEBUG if verbosity > 2 else logging.INFO
            for name in APP_LOGGERS:
                logging.getLogger(name).setLevel(level)


def run(argv=None):
    """Run `solve` with command-line arguments; returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        Command().run_from_argv(['manage.py', 'solve', *argv])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_VERIFICATION_FAILED
    return 0
