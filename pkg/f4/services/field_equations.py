from polynomials.polynomial import Polynomial


def field_equations(ring):
    return [Polynomial.field_equation(ring, i) for i in range(ring.n)]


def adjoin_field_equations(system, ring):
    """
    The system followed by x_i^2 + x_i for every variable, duplicates removed
    and order kept.
    """
    result = []
    seen = set()
    for p in [*system, *field_equations(ring)]:
        if p not in seen:
            seen.add(p)
            result.append(p)
    return result
