"""
S-polynomials, top-reduction, full reduction and interreduction over GF(2).
"""
from polynomials.polynomial import Polynomial


def find_reducer(monomial, polynomials):
    """
    The polynomial whose leading term divides `monomial`, or None.

    Among several candidates the one with the largest leading term wins;
    ties go to the earliest position.
    """
    best = None
    best_key = None
    for g in polynomials:
        if g is None or g.is_zero:
            continue
        head = g.head
        if head.divides(monomial):
            key = g.ring.sort_key(head)
            if best is None or key > best_key:
                best, best_key = g, key
    return best


def s_polynomial(f, g, apply_nf=False):
    """
    (lcm/HT(f))*f + (lcm/HT(g))*g.

    With apply_nf each product is taken modulo the field equations before
    the two are added.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of a zero polynomial is undefined")
    lcm = f.head.lcm(g.head)
    left = f.mul_monomial(lcm.divide(f.head))
    right = g.mul_monomial(lcm.divide(g.head))
    if apply_nf:
        left = left.normal_form_field()
        right = right.normal_form_field()
    result = left + right
    assert result.is_zero or f.ring.sort_key(result.head) < f.ring.sort_key(lcm)
    return result


def top_reduce(p, basis):
    """Reduce the leading term of p until no leading term of `basis` divides it."""
    basis = list(basis)
    while not p.is_zero:
        reducer = find_reducer(p.head, basis)
        if reducer is None:
            break
        p = p + reducer.mul_monomial(p.head.divide(reducer.head))
    return p


def reduce_fully(p, basis):
    """Normal form of p: no term is divisible by a leading term of `basis`."""
    basis = [g for g in basis if g is not None and not g.is_zero]
    remainder = []
    while not p.is_zero:
        head = p.head
        reducer = find_reducer(head, basis)
        if reducer is None:
            remainder.append(head)
            p = p.without_head()
        else:
            p = p + reducer.mul_monomial(head.divide(reducer.head))
    return Polynomial(p.ring, remainder)


def interreduce(polynomials):
    """
    Reduced form of a generating set: minimal leading terms, every element
    fully reduced against the others, sorted by leading term descending.

    Elements are reduced before they are dropped, so the ideal is kept even
    when the input is not a Groebner basis. Applied to a Groebner basis
    this yields the reduced Groebner basis.
    """
    polynomials = [p for p in polynomials if p is not None and not p.is_zero]
    if not polynomials:
        return []
    ring = polynomials[0].ring
    one = Polynomial.one(ring)
    if any(p.is_constant for p in polynomials):
        return [one]

    # smallest leading term on top
    todo = sorted(polynomials, key=lambda q: ring.sort_key(q.head), reverse=True)
    minimal = []
    while todo:
        p = reduce_fully(todo.pop(), minimal)
        if p.is_zero:
            continue
        if p.is_constant:
            return [one]
        kept = []
        for q in minimal:
            if p.head.divides(q.head):
                todo.append(q)
            else:
                kept.append(q)
        minimal = kept + [p]

    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(reduce_fully(p, others))
    return sorted(reduced, key=lambda q: ring.sort_key(q.head), reverse=True)
