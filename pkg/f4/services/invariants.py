"""
Runtime checks of the solver's invariants, active when
GROEBNER_CONFIG['CHECK_INVARIANTS'] (or VariantConfig.check_invariants) is on.
"""


class InvariantViolation(AssertionError):
    pass


def check_degree_bound(polynomial, ring):
    """Inserted polynomials stay within degree n once field equations are adjoined."""
    if polynomial.degree > ring.n:
        raise InvariantViolation(
            f"Inserted polynomial of degree {polynomial.degree} exceeds {ring.n}: {polynomial}"
        )


def check_new_information(polynomial, heads):
    """No leading term already in G divides the leading term of a new polynomial."""
    for head in heads:
        if head.divides(polynomial.head):
            raise InvariantViolation(
                f"New polynomial {polynomial} is top-reducible by leading term "
                f"{polynomial.ring.format_monomial(head)}"
            )


def check_no_solved_variables(polynomials, solved):
    """After a renew nothing mentions a solved variable."""
    for p in polynomials:
        for index in solved:
            if p.mentions(index):
                raise InvariantViolation(
                    f"{p} still mentions solved variable {p.ring.names[index]}"
                )


def check_simplify_head(t, f, simplified_t, simplified_f, normalize=False):
    """Simplify keeps the leading term: HT(t'*f') = HT(t*f), after NF when normalizing."""
    if normalize:
        before = f.mul_monomial_field(t).head
        after = simplified_f.mul_monomial_field(simplified_t).head
    else:
        before = t * f.head
        after = simplified_t * simplified_f.head
    if before != after:
        ring = f.ring
        raise InvariantViolation(
            f"Simplify moved the leading term of {ring.format_monomial(t)}*({f}) "
            f"to {ring.format_monomial(after) if after is not None else '0'}"
        )
