

def is_univariate(p):
    """
    The single variable index every non-constant term of p uses, else None.

    Nonzero constants are not univariate.
    """
    if p.is_zero:
        raise ValueError("The zero polynomial has no variable")
    variables = p.variables()
    if len(variables) != 1:
        return None
    return next(iter(variables))


def roots_gf2(p, index):
    """Elements of {0, 1} at which the univariate polynomial p vanishes."""
    return frozenset(value for value in (0, 1) if p.substitute(index, value).is_zero)


def univariate_root(p):
    """
    (variable, roots) for a univariate p, or None when p is not univariate.
    """
    index = is_univariate(p)
    if index is None:
        return None
    return index, roots_gf2(p, index)


