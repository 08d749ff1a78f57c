"""
Find univariate rows among the new polynomials of a round and read off the
variables they determine uniquely.
"""
import logging
from dataclasses import dataclass, field

from polynomials.services.univariate import is_univariate, roots_gf2

logger = logging.getLogger(__name__)


@dataclass
class SolveOutcome:
    values: dict = field(default_factory=dict)
    inconsistent: bool = False
    reason: str = ''


def extract_candidates(polynomials):
    """[(p, variable)] for every univariate p, in input order."""
    candidates = []
    for p in polynomials:
        if p.is_zero:
            continue
        index = is_univariate(p)
        if index is not None:
            candidates.append((p, index))
    return candidates


def solve_unique(candidates, known=None):
    """
    Values of the variables whose candidate has exactly one GF(2) root.

    A candidate without roots, or two candidates (or a candidate and a
    `known` value) disagreeing on a variable, make the outcome inconsistent.
    """
    known = known or {}
    values = {}
    for p, index in candidates:
        roots = roots_gf2(p, index)
        if not roots:
            return SolveOutcome(inconsistent=True, reason=f"{p} has no root in GF(2)")
        if len(roots) == 2:
            continue
        root = next(iter(roots))
        previous = values.get(index, known.get(index))
        if previous is not None and previous != root:
            return SolveOutcome(
                inconsistent=True,
                reason=f"{p.ring.names[index]} must be both {previous} and {root}",
            )
        if index not in known:
            values[index] = root
    if values:
        logger.debug("Univariate rows fix %s", values)
    return SolveOutcome(values=values)
