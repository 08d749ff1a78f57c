"""
Reduction: echelonize the preprocessed rows and keep the echelon rows whose
leading term is new.
"""
import logging
from dataclasses import dataclass, field

from f4.linear_algebra import MacaulayMatrix
from f4.services.preprocessing import symbolic_preprocessing_classic, symbolic_preprocessing_spoly

logger = logging.getLogger(__name__)


@dataclass
class ReductionResult:
    new_polynomials: list = field(default_factory=list)
    inputs: list = field(default_factory=list)
    echelon: list = field(default_factory=list)
    reducer_count: int = 0

    @property
    def row_count(self):
        return len(self.inputs)


def reduction_classic(pairs, basis, history, check=False):
    """F~+ = echelon rows whose leading term is not a leading term of F."""
    prepared = symbolic_preprocessing_classic(pairs, basis, history, check=check)
    known = {row.head for row in prepared.rows}
    return _reduce(basis.ring, prepared, known)


def reduction_spoly(pairs, basis, history, check=False):
    """F~+ = echelon rows whose leading term is not a leading term of NewF."""
    prepared = symbolic_preprocessing_spoly(pairs, basis, history, check=check)
    known = {row.head for row in prepared.reducers}
    return _reduce(basis.ring, prepared, known)


def _reduce(ring, prepared, known_heads):
    if not prepared.rows:
        return ReductionResult()
    matrix = MacaulayMatrix.from_polynomials(ring, prepared.rows, prepared.tags)
    echelon = matrix.row_echelon().row_polynomials()
    new = [row for row in echelon if row.head not in known_heads]
    logger.debug(
        "Reduced %sx%s matrix: rank %s, %s new polynomials",
        *matrix.shape, len(echelon), len(new),
    )
    return ReductionResult(
        new_polynomials=new,
        inputs=list(prepared.rows),
        echelon=echelon,
        reducer_count=len(prepared.reducers),
    )
