"""
Gebauer-Moeller installation of new basis elements.
"""
import logging

from pairs.critical_pair import make_pair

logger = logging.getLogger(__name__)


def update(basis, queue, h):
    """
    Append h to the basis and install its critical pairs.

    Args:
        basis: Basis being built (mutated).
        queue: PairQueue of pending pairs (mutated).
        h: nonzero Polynomial.

    Returns:
        (basis, queue)

    Raises:
        ValueError: If h is zero.
    """
    if h is None or h.is_zero:
        raise ValueError("Cannot install the zero polynomial into the basis")
    index = basis.append(h)
    install(basis, queue, index)
    return basis, queue


def install(basis, queue, index):
    """
    Pair basis[index] with the active entries, pruning with the
    Gebauer-Moeller criteria, and mark entries it makes redundant.

    Used by `update` for fresh entries and by Middle-Solving when a
    substituted entry has to be paired again.
    """
    head = basis[index].head
    others = [i for i in basis.active_indices() if i != index]
    candidates = [make_pair(index, i, basis) for i in others]

    kept = []
    for position, pair in enumerate(candidates):
        if head.is_coprime(basis[pair.right].head):
            kept.append(pair)
            continue
        later = candidates[position + 1:]
        if any(other.lcm.divides(pair.lcm) for other in later):
            continue
        if any(other.lcm.divides(pair.lcm) for other in kept):
            continue
        kept.append(pair)
    new_pairs = [pair for pair in kept if not head.is_coprime(basis[pair.right].head)]

    def survives(pair):
        if not head.divides(pair.lcm):
            return True
        left_head = basis[pair.left].head
        right_head = basis[pair.right].head
        return left_head.lcm(head) == pair.lcm or right_head.lcm(head) == pair.lcm

    dropped = queue.retain(survives)
    queue.extend(new_pairs)

    for i in others:
        if head.divides(basis[i].head):
            basis.redundant.add(i)

    logger.debug(
        "Installed basis entry %s: %s candidate pairs, %s kept, %s old pairs dropped",
        index, len(candidates), len(new_pairs), dropped,
    )
    return new_pairs
