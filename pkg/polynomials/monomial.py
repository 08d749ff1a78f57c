"""
Monomials over a fixed variable list, stored as exponent vectors.
"""


class Monomial:
    """
    Exponent vector x1^e1 * ... * xn^en.

    Exponents are small naturals rather than bits: F4 without field
    equations has to carry x^2, x^3, ...
    """

    __slots__ = ('exponents', 'degree', 'support', '_hash')

    def __init__(self, exponents):
        self.exponents = tuple(exponents)
        self.degree = sum(self.exponents)
        # bit i set when variable i occurs
        self.support = sum(1 << i for i, e in enumerate(self.exponents) if e)
        self._hash = hash(self.exponents)

    @classmethod
    def one(cls, n):
        return cls((0,) * n)

    @classmethod
    def variable(cls, index, n):
        exponents = [0] * n
        exponents[index] = 1
        return cls(exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.exponents})"

    def __len__(self):
        return len(self.exponents)

    def __mul__(self, other):
        return Monomial(a + b for a, b in zip(self.exponents, other.exponents))

    @property
    def is_one(self):
        return self.degree == 0

    @property
    def is_squarefree(self):
        return all(e <= 1 for e in self.exponents)

    def variables(self):
        """Indices of the variables occurring in this monomial."""
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def divides(self, other):
        """True when self | other."""
        if self.support & ~other.support:
            return False
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other):
        return Monomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def divide(self, other):
        """self / other, or None when other does not divide self."""
        if not other.divides(self):
            return None
        return Monomial(a - b for a, b in zip(self.exponents, other.exponents))

    def is_coprime(self, other):
        return not (self.support & other.support)

    def squarefree(self):
        """Clamp every exponent to at most 1 (x^k -> x modulo x^2 + x)."""
        if self.is_squarefree:
            return self
        return Monomial(1 if e else 0 for e in self.exponents)

    def without(self, index):
        """This monomial with variable `index` set to 1."""
        if not self.exponents[index]:
            return self
        exponents = list(self.exponents)
        exponents[index] = 0
        return Monomial(exponents)

    def divisors(self):
        """Every divisor, the monomial itself and 1 included."""
        divisors = [()]
        for e in self.exponents:
            divisors = [d + (k,) for d in divisors for k in range(e + 1)]
        return [Monomial(d) for d in divisors]


def monomial_lcm(a, b):
    return a.lcm(b)


def monomial_divide(a, b):
    return a.divide(b)
