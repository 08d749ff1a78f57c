"""
Renew: back-substitute solved variables through the basis, the pair queue,
the round history and the polynomials still waiting to enter the basis.
"""
import logging
from dataclasses import dataclass, field

from f4.utils.variants import RenewMode
from middle_solving.services.solving import extract_candidates, solve_unique
from pairs.critical_pair import make_pair
from pairs.services.update import install
from polynomials.services.reduction import reduce_fully

logger = logging.getLogger(__name__)


@dataclass
class RenewOutcome:
    pending: list = field(default_factory=list)
    solved: dict = field(default_factory=dict)
    inconsistent: bool = False
    reason: str = ''


class _Inconsistent(Exception):
    pass


def renew(basis, queue, history, assignment, values, round_number,
          pending=(), mode=RenewMode.RECOMPUTE, cascade=True):
    """
    Substitute `values` everywhere, delete what becomes zero and repair the
    pair queue.

    With `cascade`, univariate polynomials produced by the substitution (in
    the basis or among `pending`) are solved and substituted in turn until
    nothing new is found.

    Args:
        basis: Basis (mutated).
        queue: PairQueue (mutated).
        history: RoundHistory (mutated).
        assignment: Assignment receiving the new values (mutated).
        values: {variable index: 0 or 1}, nonempty.
        round_number: round recorded with each value.
        pending: new polynomials of the round not yet in the basis.
        mode: RenewMode.RECOMPUTE repairs the queue in place,
            RenewMode.REBUILD clears it and pairs the whole basis again.

    Returns:
        RenewOutcome with the substituted pending polynomials (zeros dropped).
    """
    if not values:
        raise ValueError("Renew needs at least one solved variable")
    mode = RenewMode.from_string(mode)
    pending = list(pending)
    solved = {}
    dirty = set()
    to_apply = dict(values)
    try:
        while to_apply:
            for index, value in sorted(to_apply.items()):
                assignment.assign(round_number, index, value)
                solved[index] = value
            pending = _substitute_state(basis, history, pending, to_apply, dirty)
            if not cascade:
                break
            outcome = solve_unique(
                extract_candidates([*basis.polynomials(), *pending]),
                known=assignment.solved,
            )
            if outcome.inconsistent:
                raise _Inconsistent(outcome.reason)
            to_apply = outcome.values
            if to_apply:
                logger.debug("Cascade in round %s fixes %s", round_number, to_apply)
        if mode is RenewMode.REBUILD:
            _rebuild_pairs(basis, queue)
        else:
            _recompute_pairs(basis, queue, dirty)
    except _Inconsistent as exc:
        logger.info("Substitution in round %s exposed an inconsistency: %s", round_number, exc)
        return RenewOutcome(pending=pending, solved=solved, inconsistent=True, reason=str(exc))

    logger.debug(
        "Renew in round %s solved %s, rewrote %s basis entries, %s pairs remain",
        round_number, solved, len(dirty), len(queue),
    )
    return RenewOutcome(pending=pending, solved=solved)


def _substitute_state(basis, history, pending, values, dirty):
    for index in basis.live_indices():
        before = basis[index]
        after = before.substitute_all(values)
        if after == before:
            continue
        if after.is_constant:
            raise _Inconsistent(f"{before} becomes 1")
        basis.replace(index, after)
        dirty.add(index)
    history.substitute(values)
    substituted = []
    for p in pending:
        q = p.substitute_all(values)
        if q.is_constant:
            raise _Inconsistent(f"{p} becomes 1")
        if not q.is_zero:
            substituted.append(q)
    return substituted


def _recompute_pairs(basis, queue, dirty):
    def still_valid(pair):
        if pair.left in dirty or pair.right in dirty:
            return False
        left, right = basis[pair.left], basis[pair.right]
        if left is None or right is None or left == right:
            return False
        return not left.head.is_coprime(right.head)

    dropped = queue.retain(still_valid)
    survivors = [make_pair(pair.left, pair.right, basis) for pair in queue]
    queue.clear()
    queue.extend(survivors)
    before = set(basis.redundant)
    revived = basis.recompute_redundancy()
    # entries hidden by a rewritten leading term never got a pair with it
    hidden = basis.redundant - before
    changed = {i for i in dirty if basis.is_live(i)} | revived | hidden
    logger.debug("Purged %s pairs; pairing %s rewritten entries again", dropped, len(changed))
    _install_in_order(basis, queue, changed)


def _rebuild_pairs(basis, queue):
    queue.clear()
    basis.redundant = set()
    _install_in_order(basis, queue, set(basis.live_indices()))


def _install_in_order(basis, queue, indices):
    """
    Pair each entry again, lowest index first. An entry whose leading term
    an active entry divides is first reduced against the active entries;
    a zero remainder deletes it.
    """
    # entries are hidden from pairing until their own turn comes
    basis.redundant |= indices
    for index in sorted(indices):
        p = basis[index]
        active = [basis[i] for i in basis.active_indices()]
        if any(g.head.divides(p.head) for g in active):
            remainder = reduce_fully(p, active)
            if remainder.is_constant:
                raise _Inconsistent(f"{p} reduces to 1")
            queue.retain(lambda pair: not pair.involves(index))
            basis.replace(index, remainder)
            if remainder.is_zero:
                logger.debug("Basis entry %s reduced to zero after substitution", index)
                continue
        basis.redundant.discard(index)
        install(basis, queue, index)
