"""
Boolean-coefficient polynomial ring GF(2)[x1, ..., xn] with a fixed monomial order.
"""
from polynomials.monomial import Monomial
from polynomials.utils.monomial_orders import Comparison, MonomialOrder


class Ring:
    """
    Variable list plus an admissible monomial order (x1 > x2 > ... > xn).

    Sort keys are cached per ring; monomials are compared through them
    everywhere a polynomial is kept sorted.
    """

    def __init__(self, names, order=MonomialOrder.GREVLEX):
        names = tuple(names)
        if not names:
            raise ValueError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"Variable names must be unique: {' '.join(names)}")
        self.names = names
        self.n = len(names)
        self.order = MonomialOrder.from_string(order)
        self._keys = {}
        self._squarefree = {}

    @classmethod
    def standard(cls, n, order=MonomialOrder.GREVLEX):
        """Ring over x1, ..., xn."""
        return cls([f"x{i + 1}" for i in range(n)], order)

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.names, self.order) == (other.names, other.order)

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"Ring({' '.join(self.names)}; {self.order.value})"

    def with_order(self, order):
        return Ring(self.names, order)

    def index_of(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"Undeclared variable: {name}") from None

    def one(self):
        return Monomial.one(self.n)

    def variable(self, index):
        return Monomial.variable(index, self.n)

    def monomial(self, exponents):
        exponents = tuple(exponents)
        if len(exponents) != self.n:
            raise ValueError(f"Expected {self.n} exponents, got {len(exponents)}")
        return Monomial(exponents)

    def squarefree_monomial(self, support):
        """The squarefree monomial whose variables are the set bits of `support`."""
        monomial = self._squarefree.get(support)
        if monomial is None:
            monomial = Monomial((support >> i) & 1 for i in range(self.n))
            self._squarefree[support] = monomial
        return monomial

    def sort_key(self, monomial):
        key = self._keys.get(monomial)
        if key is None:
            key = self.order.sort_key(monomial.exponents)
            self._keys[monomial] = key
        return key

    def compare(self, a, b):
        """Compare two monomials under the ring order."""
        ka, kb = self.sort_key(a), self.sort_key(b)
        if ka == kb:
            return Comparison.EQUAL
        return Comparison.GREATER if ka > kb else Comparison.LESS

    def sorted_desc(self, monomials):
        return sorted(monomials, key=self.sort_key, reverse=True)

    def format_monomial(self, monomial):
        if monomial.is_one:
            return '1'
        factors = []
        for name, e in zip(self.names, monomial.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return '*'.join(factors)


def compare(a, b, ring):
    return ring.compare(a, b)
