"""
Arithmetic in GF(2^n), elements as ints in the polynomial basis: bit k is
the coefficient of z^k, reduced modulo a fixed irreducible of degree n.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

logger = logging.getLogger(__name__)


def clmul(a, b):
    """Carry-less product of two GF(2)[z] polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a, m):
    degree = m.bit_length() - 1
    while a and a.bit_length() - 1 >= degree:
        a ^= m << (a.bit_length() - 1 - degree)
    return a


def poly_gcd(a, b):
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_factors(n):
    factors = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors.add(p)
            n //= p
        p += 1
    if n > 1:
        factors.add(n)
    return factors


def _frobenius_power(k, modulus):
    # z^(2^k) mod modulus
    x = 0b10
    for _ in range(k):
        x = poly_mod(clmul(x, x), modulus)
    return x


def is_irreducible(modulus):
    """Rabin's test for a GF(2)[z] polynomial of degree >= 1."""
    n = modulus.bit_length() - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if _frobenius_power(n, modulus) != poly_mod(0b10, modulus):
        return False
    for q in _prime_factors(n):
        h = _frobenius_power(n // q, modulus) ^ 0b10
        if poly_gcd(modulus, poly_mod(h, modulus)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(n):
    """Smallest irreducible polynomial of degree n, read as an integer."""
    if n < 1:
        raise ValueError(f"Field degree must be positive, got {n}")
    for candidate in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(candidate):
            return candidate
    raise ValueError(f"No irreducible polynomial of degree {n} found")


class GF2nField:
    def __init__(self, n, modulus=None):
        self.n = n
        self.modulus = modulus if modulus is not None else smallest_irreducible(n)
        if self.modulus.bit_length() - 1 != n:
            raise ValueError(f"Modulus {self.modulus:#b} does not have degree {n}")
        self.order = 1 << n

    def __eq__(self, other):
        return isinstance(other, GF2nField) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __repr__(self):
        return f"GF2nField(n={self.n}, modulus={self.modulus:#b})"

    def element(self, bits):
        return GF2nElement(poly_mod(bits, self.modulus), self)

    def mul(self, a, b):
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a, exponent):
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result


@dataclass(frozen=True)
class GF2nElement:
    bits: int
    field: GF2nField

    def __add__(self, other):
        return GF2nElement(self.bits ^ other.bits, self.field)

    __sub__ = __add__

    def __mul__(self, other):
        return GF2nElement(self.field.mul(self.bits, other.bits), self.field)

    def __pow__(self, exponent):
        return GF2nElement(self.field.pow(self.bits, exponent), self.field)

    def __bool__(self):
        return bool(self.bits)

    def to_vector(self):
        """Coordinates (bit 0 first) as a list of n ints."""
        return [self.bits >> k & 1 for k in range(self.field.n)]

    @classmethod
    def from_vector(cls, vector, field):
        bits = 0
        for k, value in enumerate(vector):
            if int(value) & 1:
                bits |= 1 << k
        return cls(bits, field)
