"""
Checks of a solver result against its input system.
"""
import logging
from dataclasses import dataclass, field

from benchmarks.services.variety import brute_force_variety
from f4.services.field_equations import adjoin_field_equations
from polynomials.services.reduction import reduce_fully, s_polynomial

logger = logging.getLogger(__name__)


@dataclass
class VerificationReport:
    groebner: bool = True
    membership: bool = True
    variety: bool = None
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return self.groebner and self.membership and self.variety is not False


def is_groebner_basis(basis):
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = [p for p in basis if not p.is_zero]
    for i, f in enumerate(basis):
        for g in basis[i + 1:]:
            if f.head.is_coprime(g.head):
                continue
            if not reduce_fully(s_polynomial(f, g), basis).is_zero:
                return False
    return True


def generates_inputs(basis, system, solved=None):
    """Every input, with the solved values substituted, lies in the ideal of `basis`."""
    solved = solved or {}
    return all(reduce_fully(p.substitute_all(solved), basis).is_zero for p in system)


def variety_preserved(system, result):
    """
    V(system) over {0,1}^n equals the solved values combined with every
    point of V(basis) in the unsolved variables.
    """
    expected = brute_force_variety(system, result.ring)
    found = brute_force_variety(result.basis, result.ring, fixed=result.assignment.solved)
    return expected == found


def verify_result(system, result, field_equations=True, check_variety=True, max_vars=None):
    """
    Args:
        system: the input polynomials.
        result: SolverResult.
        field_equations: whether the run adjoined x_i^2 + x_i (membership is
            then checked for them too).
        check_variety: compare varieties when the ring is small enough.
        max_vars: largest ring for the variety comparison (defaults to
            BRUTE_FORCE_MAX_VARS).
    """
    report = VerificationReport()
    system = [p.in_ring(result.ring) for p in system]
    inputs = adjoin_field_equations(system, result.ring) if field_equations else system

    if not is_groebner_basis(result.basis):
        report.groebner = False
        report.problems.append("output fails Buchberger's criterion")
    if not generates_inputs(result.basis, inputs, result.assignment.solved):
        report.membership = False
        report.problems.append("an input does not reduce to zero modulo the output")
    if check_variety:
        try:
            if max_vars is not None and result.ring.n > max_vars:
                raise ValueError(f"{result.ring.n} variables exceed {max_vars}")
            report.variety = variety_preserved(system, result)
        except ValueError as exc:
            logger.info("Skipping variety comparison: %s", exc)
        else:
            if not report.variety:
                report.problems.append("output variety differs from the input variety")
    if report.problems:
        logger.warning("Verification failed: %s", '; '.join(report.problems))
    return report
