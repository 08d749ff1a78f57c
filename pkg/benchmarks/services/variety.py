"""
Brute-force variety oracle: every point of {0,1}^n where a system vanishes.
"""
import numpy as np
from django.conf import settings

CHUNK_BITS = 16


def _budget():
    return settings.GROEBNER_CONFIG['BRUTE_FORCE_MAX_VARS']


def brute_force_variety(system, ring, fixed=None):
    """
    Args:
        system: polynomials over `ring`.
        ring: Ring whose variables are enumerated.
        fixed: optional {variable index: 0 or 1}; those variables are pinned
            and only the rest are enumerated.

    Returns:
        set of n-tuples of 0/1 values, in variable order.

    Raises:
        ValueError: When more variables are free than BRUTE_FORCE_MAX_VARS allows.
    """
    fixed = dict(fixed or {})
    free = [i for i in range(ring.n) if i not in fixed]
    if len(free) > _budget():
        raise ValueError(
            f"Brute force over {len(free)} variables exceeds the budget of {_budget()}"
        )
    polynomials = [p for p in system if not p.is_zero]
    total = 1 << len(free)
    chunk = 1 << min(CHUNK_BITS, len(free))
    shifts = np.arange(len(free) - 1, -1, -1, dtype=np.int64)
    solutions = set()
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        points = np.zeros((codes.size, ring.n), dtype=np.uint8)
        if free:
            points[:, free] = (codes[:, None] >> shifts) & 1
        for index, value in fixed.items():
            points[:, index] = value
        alive = np.ones(codes.size, dtype=bool)
        for p in polynomials:
            value = np.zeros(codes.size, dtype=np.uint8)
            for monomial in p.terms:
                variables = list(monomial.variables())
                if variables:
                    value ^= np.all(points[:, variables], axis=1).astype(np.uint8)
                else:
                    value ^= 1
            alive &= value == 0
            if not alive.any():
                break
        solutions.update(tuple(int(v) for v in row) for row in points[alive])
    return solutions
