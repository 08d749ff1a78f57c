"""
Bit-packed elimination checked against a row-by-row list implementation.
"""
import random

import numpy as np
from django.test import SimpleTestCase

from f4.linear_algebra import MacaulayMatrix, pack_rows, rank_gf2, rref_gf2, row_echelon_gf2, unpack_rows
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring

SEED = 20240611


def _naive_rref(rows, cols):
    rows = [list(row) for row in rows]
    rank = 0
    pivots = []
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


class PackingTests(SimpleTestCase):
    def test_column_zero_is_most_significant_bit(self):
        words = pack_rows([[1] + [0] * 69])
        self.assertEqual(words.shape, (1, 2))
        self.assertEqual(int(words[0, 0]), 1 << 63)
        self.assertEqual(int(words[0, 1]), 0)

    def test_unpack_restores_bits(self):
        bits = np.array([[1, 0, 1], [0, 1, 1]], dtype=np.uint8)
        np.testing.assert_array_equal(unpack_rows(pack_rows(bits), 3), bits)

    def test_rejects_one_dimensional_input(self):
        with self.assertRaises(ValueError):
            pack_rows([1, 0, 1])


class EliminationTests(SimpleTestCase):
    def test_small_example(self):
        reduced, pivots = rref_gf2([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        self.assertEqual(reduced.tolist(), [[1, 0, 1], [0, 1, 1]])
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(rank_gf2([[1, 1, 0], [0, 1, 1], [1, 0, 1]]), 2)

    def test_identity(self):
        identity = np.eye(5, dtype=np.uint8)
        reduced, pivots = rref_gf2(identity)
        np.testing.assert_array_equal(reduced, identity)
        self.assertEqual(pivots, [0, 1, 2, 3, 4])

    def test_single_row(self):
        reduced, pivots = rref_gf2([[0, 0, 1, 1]])
        self.assertEqual(reduced.tolist(), [[0, 0, 1, 1]])
        self.assertEqual(pivots, [2])

    def test_zero_matrix(self):
        reduced, pivots = rref_gf2(np.zeros((3, 4), dtype=np.uint8))
        self.assertEqual(reduced.shape, (0, 4))
        self.assertEqual(pivots, [])

    def test_random_matrices_match_naive_elimination(self):
        rng = random.Random(SEED)
        for _ in range(1000):
            rows, cols = rng.randint(1, 64), rng.randint(1, 96)
            density = rng.choice((0.05, 0.2, 0.5))
            bits = [[int(rng.random() < density) for _ in range(cols)] for _ in range(rows)]
            expected, expected_pivots = _naive_rref(bits, cols)
            reduced, pivots = rref_gf2(bits)
            self.assertEqual(reduced.tolist(), expected)
            self.assertEqual(pivots, expected_pivots)


class MacaulayMatrixTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])
        self.x, self.y, self.z = (Polynomial.variable(self.ring, i) for i in range(3))
        self.one = Polynomial.one(self.ring)

    def test_columns_sorted_descending(self):
        matrix = MacaulayMatrix.from_polynomials(self.ring, [self.z + self.one, self.x + self.y])
        self.assertEqual(matrix.shape, (2, 4))
        self.assertEqual(
            matrix.columns,
            [Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1)), Monomial((0, 0, 0))],
        )

    def test_echelon_rows(self):
        rows = row_echelon_gf2([self.x + self.y, self.y + self.z, self.x + self.z], self.ring)
        self.assertEqual(rows, [self.x + self.z, self.y + self.z])

    def test_zero_row_rejected(self):
        with self.assertRaises(ValueError):
            MacaulayMatrix.from_polynomials(self.ring, [Polynomial.zero(self.ring)])

    def test_no_rows(self):
        self.assertEqual(row_echelon_gf2([], self.ring), [])
