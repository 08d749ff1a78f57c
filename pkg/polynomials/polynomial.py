"""
Polynomials over GF(2): a polynomial is its set of monomials, kept sorted
descending under the ring order. Coefficients are implicitly 1.
"""
from polynomials.monomial import Monomial


class Polynomial:
    __slots__ = ('ring', 'terms', '_hash')

    def __init__(self, ring, terms=()):
        # terms must already be distinct and sorted descending
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    @classmethod
    def from_monomials(cls, ring, monomials):
        """Build a polynomial from monomials, cancelling repeated ones in pairs."""
        present = set()
        for monomial in monomials:
            if monomial in present:
                present.remove(monomial)
            else:
                present.add(monomial)
        return cls(ring, ring.sorted_desc(present))

    @classmethod
    def from_supports(cls, ring, supports):
        """Squarefree monomials given as variable bitmasks, cancelling repeated ones in pairs."""
        present = set()
        for support in supports:
            if support in present:
                present.remove(support)
            else:
                present.add(support)
        return cls(ring, ring.sorted_desc(ring.squarefree_monomial(s) for s in present))

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def one(cls, ring):
        return cls(ring, (ring.one(),))

    @classmethod
    def variable(cls, ring, index):
        return cls(ring, (ring.variable(index),))

    @classmethod
    def field_equation(cls, ring, index):
        """x_i^2 + x_i."""
        square = Monomial.variable(index, ring.n) * Monomial.variable(index, ring.n)
        return cls(ring, (square, ring.variable(index)))

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_constant(self):
        return len(self.terms) == 1 and self.terms[0].is_one

    @property
    def head(self):
        """Leading term HT(p); None for the zero polynomial."""
        return self.terms[0] if self.terms else None

    @property
    def degree(self):
        return max((m.degree for m in self.terms), default=-1)

    @property
    def is_squarefree(self):
        return all(m.is_squarefree for m in self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join(self.ring.format_monomial(m) for m in self.terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __add__(self, other):
        if not other.terms:
            return self
        if not self.terms:
            return other
        return Polynomial(self.ring, self.ring.sorted_desc(set(self.terms).symmetric_difference(other.terms)))

    __sub__ = __add__

    def in_ring(self, ring):
        """The same polynomial re-sorted under another ring (same variables)."""
        if ring == self.ring:
            return self
        if ring.names != self.ring.names:
            raise ValueError("Rings must share their variables to convert a polynomial")
        return Polynomial(ring, ring.sorted_desc(self.terms))

    def without_head(self):
        return Polynomial(self.ring, self.terms[1:])

    def mul_monomial(self, monomial):
        """m * p; admissibility keeps the product sorted."""
        if monomial.is_one:
            return self
        return Polynomial(self.ring, (monomial * m for m in self.terms))

    def normal_form_field(self):
        """Normal form modulo the field equations: clamp exponents to 1, cancel in pairs."""
        if self.is_squarefree:
            return self
        return Polynomial.from_supports(self.ring, (m.support for m in self.terms))

    def mul_monomial_field(self, monomial):
        """NF(m * p) without forming m * p: the product of two terms reduces to their joint support."""
        return Polynomial.from_supports(self.ring, (monomial.support | m.support for m in self.terms))

    def variables(self):
        support = 0
        for m in self.terms:
            support |= m.support
        return {i for i in range(self.ring.n) if support >> i & 1}

    def mentions(self, index):
        return any(m.exponents[index] for m in self.terms)

    def substitute(self, index, value):
        """Set variable `index` to 0 or 1; the result never mentions it."""
        if value not in (0, 1):
            raise ValueError(f"GF(2) values are 0 or 1, got {value}")
        if not self.mentions(index):
            return self
        if value == 0:
            return Polynomial(self.ring, (m for m in self.terms if not m.exponents[index]))
        return Polynomial.from_monomials(self.ring, (m.without(index) for m in self.terms))

    def substitute_all(self, values):
        """Apply several variable assignments at once."""
        result = self
        for index, value in values.items():
            result = result.substitute(index, value)
        return result

    def evaluate(self, point):
        """Value in GF(2) at a 0/1 point given per variable index."""
        total = 0
        for m in self.terms:
            if all(point[i] for i in m.variables()):
                total ^= 1
        return total


def poly_add(p, q):
    return p + q


def poly_mul_monomial(m, p):
    return p.mul_monomial(m)


def normal_form_field(p):
    return p.normal_form_field()


def substitute(p, index, value):
    return p.substitute(index, value)
