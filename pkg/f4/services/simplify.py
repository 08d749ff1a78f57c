"""
Simplify: replace a product t*f by u'*p where p is an echelon row from an
earlier round with the same leading term as some u*f, u dividing t.
"""
from functools import lru_cache

from f4.services.invariants import check_simplify_head


@lru_cache(maxsize=8192)
def _divisors_desc(ring, t):
    # every divisor except 1, t itself included, largest first under the ring order
    return tuple(ring.sorted_desc(d for d in t.divisors() if not d.is_one))


def _product(t, f, normalize):
    return _cached_product(f.ring, t, f, normalize)


@lru_cache(maxsize=65536)
def _cached_product(ring, t, f, normalize):
    # polynomials compare by terms alone, so the ring is part of the key
    if normalize:
        return f.mul_monomial_field(t)
    return f.mul_monomial(t)


def simplify(t, f, history, normalize=False, check=False):
    """
    Args:
        t: Monomial multiplier.
        f: nonzero Polynomial.
        history: RoundHistory of earlier rounds.
        normalize: compare NF(u*f) against the history (S-polynomial path).
        check: raise InvariantViolation when the leading term moves.

    Returns:
        (t', f') with t'*f' carrying the same leading term as t*f (after NF
        when normalizing); (t, f) itself when nothing applies.
    """
    if t.is_one or not history:
        return t, f
    if normalize:
        target = _product(t, f, True).head
    else:
        target = t * f.head
    simplified = _simplify(t, f, history, normalize, target)
    if check:
        check_simplify_head(t, f, *simplified, normalize=normalize)
    return simplified


def _simplify(t, f, history, normalize, target):
    for u in _divisors_desc(f.ring, t):
        if not normalize and not history.has_input_head(u * f.head):
            continue
        product = _product(u, f, normalize)
        if product.is_zero:
            continue
        row = history.lookup(product)
        if row is None:
            continue
        rest = t.divide(u)
        if rest.is_one:
            candidate = (rest, row)
        else:
            candidate = _simplify(rest, row, history, normalize, target)
        # modulo the field equations a multiple can lose its leading term
        if not normalize or _product(*candidate, True).head == target:
            return candidate
    return t, f
