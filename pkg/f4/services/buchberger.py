"""
Textbook Buchberger algorithm, the reference the F4 variants are checked
against.
"""
import heapq
import itertools
import logging

from polynomials.polynomial import Polynomial
from polynomials.services.reduction import interreduce, s_polynomial, top_reduce

logger = logging.getLogger(__name__)


def buchberger_reference(system, order=None):
    """
    Reduced Groebner basis of `system` under `order` (the ring's own order
    when None). Pairs are taken by lowest lcm degree; pairs with coprime
    leading terms are skipped.
    """
    system = [p for p in system if not p.is_zero]
    if not system:
        raise ValueError("The input system has no nonzero polynomial")
    ring = system[0].ring if order is None else system[0].ring.with_order(order)
    basis = list(dict.fromkeys(p.in_ring(ring) for p in system))
    if any(p.is_constant for p in basis):
        return [Polynomial.one(ring)]

    counter = itertools.count()
    pairs = []

    def push(i, j):
        lcm = basis[i].head.lcm(basis[j].head)
        heapq.heappush(pairs, (lcm.degree, next(counter), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    processed = 0
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        f, g = basis[i], basis[j]
        if f.head.is_coprime(g.head):
            continue
        processed += 1
        remainder = top_reduce(s_polynomial(f, g), basis)
        if remainder.is_zero:
            continue
        if remainder.is_constant:
            return [Polynomial.one(ring)]
        basis.append(remainder)
        for k in range(len(basis) - 1):
            push(k, len(basis) - 1)

    logger.debug("Buchberger reduced %s S-polynomials, basis of %s before interreduction",
                 processed, len(basis))
    return interreduce(basis)
