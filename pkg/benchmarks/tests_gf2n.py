from django.test import SimpleTestCase

from benchmarks.services.gf2n import (
    GF2nElement,
    GF2nField,
    clmul,
    is_irreducible,
    poly_gcd,
    poly_mod,
    smallest_irreducible,
)


class BinaryPolynomialTests(SimpleTestCase):
    def test_clmul(self):
        # (z + 1)^2 = z^2 + 1
        self.assertEqual(clmul(0b11, 0b11), 0b101)
        self.assertEqual(clmul(0b1011, 1), 0b1011)
        self.assertEqual(clmul(0b1011, 0), 0)

    def test_poly_mod_and_gcd(self):
        self.assertEqual(poly_mod(0b101, 0b11), 0)
        self.assertEqual(poly_mod(0b1000, 0b1011), 0b011)
        self.assertEqual(poly_gcd(0b101, 0b11), 0b11)
        self.assertEqual(poly_gcd(0b1011, 0b111), 1)

    def test_irreducibility(self):
        self.assertTrue(is_irreducible(0b111))
        self.assertFalse(is_irreducible(0b101))
        self.assertTrue(is_irreducible(0b1011))
        # z^5 + z + 1 = (z^2 + z + 1)(z^3 + z^2 + 1)
        self.assertFalse(is_irreducible(0b100011))
        self.assertFalse(is_irreducible(1))

    def test_smallest_irreducible(self):
        expected = {2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101, 8: 0x11B}
        for n, modulus in expected.items():
            self.assertEqual(smallest_irreducible(n), modulus, n)
        with self.assertRaises(ValueError):
            smallest_irreducible(0)


class FieldTests(SimpleTestCase):
    def setUp(self):
        self.field = GF2nField(8)

    def test_known_products(self):
        a, b = self.field.element(0x57), self.field.element(0x83)
        self.assertEqual((a * b).bits, 0xC1)
        self.assertEqual((self.field.element(0x53) * self.field.element(0xCA)).bits, 0x01)

    def test_addition_is_xor(self):
        a, b = self.field.element(0x57), self.field.element(0x83)
        self.assertEqual((a + b).bits, 0x57 ^ 0x83)
        self.assertFalse(a + a)

    def test_multiplicative_group_order(self):
        for bits in (0x02, 0x03, 0x57, 0xFF):
            self.assertEqual((self.field.element(bits) ** 255).bits, 1)
        self.assertEqual((self.field.element(0x57) ** 0).bits, 1)

    def test_vectors(self):
        element = self.field.element(0b1011)
        vector = element.to_vector()
        self.assertEqual(vector, [1, 1, 0, 1, 0, 0, 0, 0])
        self.assertEqual(GF2nElement.from_vector(vector, self.field), element)

    def test_modulus_degree_checked(self):
        with self.assertRaises(ValueError):
            GF2nField(4, modulus=0b1011)
