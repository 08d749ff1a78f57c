"""
Benchmark systems: cyclic-n and HFE public keys over GF(2).
"""
import logging
from itertools import combinations

import numpy as np

from benchmarks.services.gf2n import GF2nElement, GF2nField
from f4.linear_algebra import rank_gf2
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring

logger = logging.getLogger(__name__)


def gen_cyclic(n, ring=None):
    """
    The cyclic-n system mod 2: for k = 1..n-1 the sum of the n cyclically
    consecutive products of k variables, then x1*x2*...*xn + 1.
    """
    if n < 2:
        raise ValueError(f"cyclic-n needs n >= 2, got {n}")
    ring = ring or Ring.standard(n)
    system = []
    for k in range(1, n):
        monomials = []
        for start in range(n):
            exponents = [0] * n
            for offset in range(k):
                exponents[(start + offset) % n] = 1
            monomials.append(Monomial(exponents))
        system.append(Polynomial.from_monomials(ring, monomials))
    system.append(Polynomial.from_monomials(ring, [Monomial([1] * n), ring.one()]))
    return system


def hfe_exponents(d):
    """Exponents of the hidden polynomial: 2^i <= d and 2^i + 2^j <= d (i < j)."""
    if d < 2:
        raise ValueError(f"HFE degree bound must be at least 2, got {d}")
    powers = [1 << i for i in range(d.bit_length()) if 1 << i <= d]
    exponents = set(powers)
    exponents.update(a + b for a, b in combinations(powers, 2) if a + b <= d)
    return sorted(exponents)


def _random_invertible(rng, n):
    attempts = 1
    matrix = rng.integers(0, 2, size=(n, n), dtype=np.uint8)
    while rank_gf2(matrix) < n:
        attempts += 1
        matrix = rng.integers(0, 2, size=(n, n), dtype=np.uint8)
    if attempts > 1:
        logger.debug("Resampled %s singular %sx%s matrices", attempts - 1, n, n)
    return matrix


class HFEKey:
    """
    Secret HFE key: an affine map S, the hidden polynomial F over GF(2^n)
    and an affine map T. The public map is x -> T(F(S(x))).
    """

    def __init__(self, field, coefficients, constant, s_matrix, s_shift, t_matrix, t_shift):
        self.field = field
        self.coefficients = coefficients
        self.constant = constant
        self.s_matrix, self.s_shift = s_matrix, s_shift
        self.t_matrix, self.t_shift = t_matrix, t_shift

    @classmethod
    def generate(cls, d, n, rng):
        field = GF2nField(n)
        coefficients = {
            exponent: int(rng.integers(1, field.order)) for exponent in hfe_exponents(d)
        }
        constant = int(rng.integers(0, field.order))
        s_matrix = _random_invertible(rng, n)
        s_shift = rng.integers(0, 2, size=n, dtype=np.uint8)
        t_matrix = _random_invertible(rng, n)
        t_shift = rng.integers(0, 2, size=n, dtype=np.uint8)
        return cls(field, coefficients, constant, s_matrix, s_shift, t_matrix, t_shift)

    def hidden(self, x):
        value = self.field.element(self.constant)
        for exponent, coefficient in self.coefficients.items():
            value = value + self.field.element(coefficient) * x ** exponent
        return value

    def public(self, vector):
        """Ciphertext bits for plaintext bits."""
        vector = np.asarray(vector, dtype=np.uint8)
        inner = (self.s_matrix.astype(np.int64) @ vector + self.s_shift) % 2
        x = GF2nElement.from_vector(inner, self.field)
        y = np.array(self.hidden(x).to_vector(), dtype=np.uint8)
        return ((self.t_matrix.astype(np.int64) @ y + self.t_shift) % 2).astype(np.uint8)

    def public_polynomials(self, ring):
        """
        The public map as n quadratic polynomials, interpolated from its
        values at 0, e_i and e_i + e_j.
        """
        n = self.field.n
        zero = self.public(np.zeros(n, dtype=np.uint8))
        units = []
        for i in range(n):
            point = np.zeros(n, dtype=np.uint8)
            point[i] = 1
            units.append(self.public(point))
        monomials = [[] for _ in range(n)]
        for k in range(n):
            if zero[k]:
                monomials[k].append(ring.one())
            for i in range(n):
                if units[i][k] ^ zero[k]:
                    monomials[k].append(ring.variable(i))
        for i, j in combinations(range(n), 2):
            point = np.zeros(n, dtype=np.uint8)
            point[i] = point[j] = 1
            value = self.public(point)
            exponents = [0] * n
            exponents[i] = exponents[j] = 1
            for k in range(n):
                if value[k] ^ units[i][k] ^ units[j][k] ^ zero[k]:
                    monomials[k].append(Monomial(exponents))
        return [Polynomial.from_monomials(ring, terms) for terms in monomials]


def gen_hfe(d, n, seed, ring=None):
    """
    A random HFE(d, n) instance.

    Returns:
        (system, witness): the n equations public_k(x) + c_k with c the
        ciphertext of a random plaintext, and that plaintext as a tuple of
        0/1 values in variable order.
    """
    if n < 2:
        raise ValueError(f"HFE needs at least 2 variables, got {n}")
    if d < 2 or d >= 1 << n:
        raise ValueError(f"HFE degree bound {d} does not fit GF(2^{n})")
    ring = ring or Ring.standard(n)
    if ring.n != n:
        raise ValueError(f"Ring has {ring.n} variables, expected {n}")
    rng = np.random.default_rng(seed)
    key = HFEKey.generate(d, n, rng)
    public = key.public_polynomials(ring)
    plaintext = rng.integers(0, 2, size=n, dtype=np.uint8)
    ciphertext = key.public(plaintext)
    system = [p + Polynomial.one(ring) if bit else p for p, bit in zip(public, ciphertext)]
    witness = tuple(int(bit) for bit in plaintext)
    logger.debug("Generated HFE(%s, %s) with seed %s", d, n, seed)
    return system, witness
