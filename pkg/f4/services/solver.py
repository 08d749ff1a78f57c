"""
The F4 main loop and its variants.

plain_f4  classic Reduction, no field equations
fe_f4     classic Reduction with x_i^2 + x_i adjoined
s_f4      S-polynomial Reduction, field equations required
ms_f4     s_f4 plus Middle-Solving after every round
"""
import logging
import time
from dataclasses import dataclass, field

from benchmarks.stats import RunStats
from benchmarks.utils.solver_events import SolverEvent
from f4.config import VariantConfig
from f4.history import RoundHistory
from f4.services.field_equations import adjoin_field_equations, field_equations
from f4.services.invariants import (
    check_degree_bound,
    check_new_information,
    check_no_solved_variables,
)
from f4.services.reduction import reduction_classic, reduction_spoly
from f4.utils.variants import F4Variant
from middle_solving.assignment import Assignment
from middle_solving.services.renew import renew
from middle_solving.services.solving import extract_candidates, solve_unique
from pairs.basis import Basis
from pairs.queue import PairQueue
from pairs.services.update import update
from polynomials.polynomial import Polynomial
from polynomials.services.reduction import interreduce, reduce_fully, s_polynomial

logger = logging.getLogger(__name__)


@dataclass
class SolverResult:
    ring: object
    basis: list
    stats: RunStats
    assignment: Assignment = field(default_factory=Assignment)
    inconsistent: bool = False
    algorithm: str = F4Variant.FE_F4.value

    @property
    def solutions(self):
        return dict(self.assignment.solved)


class F4Solver:
    """
    One run of an F4 variant over a system of GF(2) polynomials.

    Usage:
        result = F4Solver(system, VariantConfig.for_variant('s-f4')).run()
    """

    def __init__(self, system, config=None):
        self.config = config or VariantConfig.for_variant(F4Variant.FE_F4)
        system = [p for p in system if not p.is_zero]
        if not system:
            raise ValueError("The input system has no nonzero polynomial")
        rings = {p.ring.names for p in system}
        if len(rings) != 1:
            raise ValueError("All input polynomials must share one ring")
        self.ring = system[0].ring.with_order(self.config.order)
        self.system = [p.in_ring(self.ring) for p in system]
        self.basis = Basis(self.ring)
        self.queue = PairQueue()
        self.history = RoundHistory(self.config.history_cap)
        self.assignment = Assignment()
        self.stats = RunStats()
        self.inconsistent = False
        self._field_equations = set()
        self._substituted = False
        if self.config.uses_s_polynomial_rows:
            self._reduction = reduction_spoly
        else:
            self._reduction = reduction_classic

    @property
    def checking(self):
        return self.config.check_invariants

    def run(self):
        started = time.perf_counter()
        logger.info(
            "Running %s on %s polynomials in %s variables (%s)",
            self.config.mode.value, len(self.system), self.ring.n, self.config.order.value,
        )
        for generator in self._generators():
            if generator.is_constant:
                self.inconsistent = True
                break
            self._insert(generator)
        if self.config.middle_solving and not self.inconsistent:
            # univariate inputs are solved before the first round
            self._middle_solve([], 0, extract_candidates(self.basis.polynomials()))

        if not self.inconsistent:
            self._main_loop()
        if self._substituted and not self.inconsistent:
            self._close_after_substitution()

        result = self._result()
        logger.info(
            "%s finished in %.3fs: %s rounds, %s pairs, basis of %s, %s solved%s",
            self.config.mode.value, time.perf_counter() - started, self.stats.round,
            self.stats.c_pair, self.stats.gb_size, self.stats.solved,
            ', inconsistent' if result.inconsistent else '',
        )
        return result

    def _generators(self):
        if not self.config.adjoin_field_eqs:
            return list(dict.fromkeys(self.system))
        reduced = []
        for p in self.system:
            q = p.normal_form_field()
            if not q.is_zero:
                reduced.append(q)
        self._field_equations = set(field_equations(self.ring))
        return adjoin_field_equations(reduced, self.ring)

    def _insert(self, h):
        if self.checking and self.config.adjoin_field_eqs and h not in self._field_equations:
            check_degree_bound(h, self.ring)
        update(self.basis, self.queue, h)

    def _main_loop(self):
        while self.queue:
            pairs = self.queue.select()
            self.stats.record(SolverEvent.PAIRS_SELECTED, len(pairs))
            heads = [p.head for p in self.basis.polynomials()]

            started = time.perf_counter()
            result = self._reduction(pairs, self.basis, self.history, check=self.checking)
            self.stats.record(SolverEvent.REDUCTION_TIMED, time.perf_counter() - started)
            if not result.row_count:
                continue

            round_number = self.stats.round + 1
            self.stats.record(SolverEvent.MATRIX_BUILT, result.row_count)
            self.stats.record(SolverEvent.REDUCERS_APPENDED, result.reducer_count)
            self.stats.record(SolverEvent.ROUND_COMPLETED)
            self.history.record(round_number, result.inputs, result.echelon)
            logger.debug(
                "Round %s: %s pairs of degree %s, %s rows, %s new polynomials",
                round_number, len(pairs), pairs[0].degree, result.row_count,
                len(result.new_polynomials),
            )

            new = result.new_polynomials
            if self.checking:
                for h in new:
                    check_new_information(h, heads)
            if self.config.middle_solving:
                new = self._middle_solve(new, round_number)
                if self.inconsistent:
                    return
            for h in new:
                if h.is_constant:
                    self.inconsistent = True
                    return
                self._insert(h)

    def _middle_solve(self, new, round_number, candidates=None):
        if candidates is None:
            candidates = extract_candidates(new)
        if not candidates:
            return new
        outcome = solve_unique(candidates, known=self.assignment.solved)
        if outcome.inconsistent:
            logger.info("Round %s: %s", round_number, outcome.reason)
            self.inconsistent = True
            return []
        if not outcome.values:
            return new
        renewed = renew(
            self.basis, self.queue, self.history, self.assignment, outcome.values,
            round_number, pending=new, mode=self.config.renew_mode, cascade=self.config.cascade,
        )
        self.stats.record(SolverEvent.VARIABLE_SOLVED, len(renewed.solved))
        self._substituted = True
        if renewed.inconsistent:
            self.inconsistent = True
            return []
        logger.debug(
            "Round %s: solved %s", round_number,
            ', '.join(f"{self.ring.names[i]}={v}" for i, v in sorted(renewed.solved.items())),
        )
        if self.checking:
            check_no_solved_variables(
                [*self.basis.polynomials(), *renewed.pending], self.assignment.solved,
            )
        return renewed.pending

    def _close_after_substitution(self):
        """
        Substitution rewrites leading terms, which can leave S-pairs the queue
        no longer holds. Complete the interreduced basis until every
        S-polynomial reduces to zero, then make it the basis.
        """
        reduced = interreduce(self.basis.polynomials())
        added = examined = 0
        while reduced and not reduced[0].is_constant:
            remainders = []
            for i, f in enumerate(reduced):
                for g in reduced[i + 1:]:
                    if f.head.is_coprime(g.head):
                        continue
                    examined += 1
                    remainder = reduce_fully(s_polynomial(f, g), reduced)
                    if not remainder.is_zero and remainder not in remainders:
                        remainders.append(remainder)
            if not remainders:
                break
            added += len(remainders)
            reduced = interreduce([*reduced, *remainders])
        if added:
            logger.warning(
                "Completion after substitution examined %s S-pairs and added %s polynomials",
                examined, added,
            )
        if reduced and reduced[0].is_constant:
            self.inconsistent = True
            return
        self.basis = Basis(self.ring)
        for p in reduced:
            self.basis.append(p)

    def _result(self):
        live = self.basis.polynomials()
        if not self.inconsistent:
            reduced = interreduce(live)
            self.inconsistent = bool(reduced) and reduced[0].is_constant
        if self.inconsistent:
            live = reduced = [Polynomial.one(self.ring)]
        self.stats.finalize(reduced, live)
        return SolverResult(
            ring=self.ring,
            basis=reduced,
            stats=self.stats,
            assignment=self.assignment,
            inconsistent=self.inconsistent,
            algorithm=self.config.mode.value,
        )


def f4_main(system, config=None):
    return F4Solver(system, config).run()


def plain_f4(system, **overrides):
    return f4_main(system, VariantConfig.for_variant(F4Variant.PLAIN_F4, **overrides))


def fe_f4(system, **overrides):
    return f4_main(system, VariantConfig.for_variant(F4Variant.FE_F4, **overrides))


def s_f4(system, **overrides):
    return f4_main(system, VariantConfig.for_variant(F4Variant.S_F4, **overrides))


def ms_f4(system, **overrides):
    return f4_main(system, VariantConfig.for_variant(F4Variant.MS_F4, **overrides))
