from django.test import SimpleTestCase

from pairs.basis import Basis
from pairs.critical_pair import make_pair
from pairs.queue import PairQueue, select
from pairs.services.update import update
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring


def _poly(ring, text):
    monomials = []
    for term in text.split('+'):
        exponents = [0] * ring.n
        term = term.strip()
        if term != '1':
            for factor in term.split('*'):
                name, _, power = factor.partition('^')
                exponents[ring.index_of(name)] += int(power or 1)
        monomials.append(Monomial(exponents))
    return Polynomial.from_monomials(ring, monomials)


def _basis(ring, *texts):
    basis = Basis(ring)
    for text in texts:
        basis.append(_poly(ring, text))
    return basis


class MakePairTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def m(self, text):
        return _poly(self.ring, text).head

    def test_worked_example(self):
        basis = _basis(self.ring, 'x*y + x', 'y*z + z + 1')
        pair = make_pair(0, 1, basis)
        self.assertEqual(pair.lcm, self.m('x*y*z'))
        self.assertEqual(pair.sides(), ((self.m('z'), 0), (self.m('x'), 1)))

    def test_coprime_heads(self):
        basis = _basis(self.ring, 'x + 1', 'y + 1')
        pair = make_pair(0, 1, basis)
        self.assertEqual(pair.lcm, self.m('x*y'))
        self.assertEqual(pair.left_multiplier, self.m('y'))
        self.assertEqual(pair.right_multiplier, self.m('x'))

    def test_equal_heads(self):
        basis = _basis(self.ring, 'x*y + 1', 'x*y + x')
        pair = make_pair(0, 1, basis)
        self.assertEqual(pair.lcm, self.m('x*y'))
        self.assertTrue(pair.left_multiplier.is_one)
        self.assertTrue(pair.right_multiplier.is_one)

    def test_invalid_pairs(self):
        basis = _basis(self.ring, 'x + 1')
        basis.append(None)
        with self.assertRaises(ValueError):
            make_pair(0, 0, basis)
        with self.assertRaises(ValueError):
            make_pair(0, 1, basis)


class UpdateTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def test_first_element_creates_no_pairs(self):
        basis, queue = update(Basis(self.ring), PairQueue(), _poly(self.ring, 'x*y + 1'))
        self.assertEqual(len(basis), 1)
        self.assertEqual(len(queue), 0)

    def test_coprime_pair_is_dropped(self):
        basis, queue = update(_basis(self.ring, 'x + 1'), PairQueue(), _poly(self.ring, 'y + 1'))
        self.assertEqual(len(basis), 2)
        self.assertEqual(len(queue), 0)

    def test_gebauer_moeller_fixture(self):
        basis, queue = Basis(self.ring), PairQueue()
        for text in ('x*y + x', 'y*z + z + 1', 'x*z + 1'):
            update(basis, queue, _poly(self.ring, text))
        self.assertEqual(len(queue), 2)
        self.assertEqual(sorted(pair.indices for pair in queue), [(1, 0), (2, 1)])
        self.assertTrue(all(pair.lcm == _poly(self.ring, 'x*y*z').head for pair in queue))

    def test_no_stored_pair_is_coprime(self):
        basis, queue = Basis(self.ring), PairQueue()
        for text in ('x*y + z', 'y*z + x', 'x*z + y + 1', 'x + y', 'z^2 + z', 'y^2 + y'):
            update(basis, queue, _poly(self.ring, text))
        for pair in queue:
            left, right = basis[pair.left].head, basis[pair.right].head
            self.assertFalse(left.is_coprime(right))

    def test_divisible_head_marks_entry_redundant(self):
        basis, queue = Basis(self.ring), PairQueue()
        update(basis, queue, _poly(self.ring, 'x*y + z'))
        update(basis, queue, _poly(self.ring, 'x + 1'))
        self.assertEqual(basis.redundant, {0})
        self.assertEqual(basis.active_indices(), [1])

    def test_zero_polynomial_rejected(self):
        with self.assertRaises(ValueError):
            update(Basis(self.ring), PairQueue(), Polynomial.zero(self.ring))


class SelectTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z', 'w'])
        self.basis = _basis(
            self.ring, 'x*y + 1', 'x*z + 1', 'y*z + 1', 'x*y*z*w + 1',
        )

    def test_takes_every_pair_of_minimal_degree(self):
        queue = PairQueue([
            make_pair(0, 1, self.basis),
            make_pair(1, 2, self.basis),
            make_pair(0, 3, self.basis),
        ])
        selected = select(queue)
        self.assertEqual([pair.indices for pair in selected], [(0, 1), (1, 2)])
        self.assertEqual(len(queue), 1)

    def test_singleton_empties_queue(self):
        queue = PairQueue([make_pair(0, 1, self.basis)])
        self.assertEqual(len(select(queue)), 1)
        self.assertFalse(queue)

    def test_equal_degrees_return_everything(self):
        queue = PairQueue([make_pair(0, 1, self.basis), make_pair(1, 2, self.basis)])
        self.assertEqual(len(select(queue)), 2)
        self.assertEqual(len(queue), 0)

    def test_empty_queue_rejected(self):
        with self.assertRaises(ValueError):
            select(PairQueue())


class BasisTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y'])

    def test_replace_with_zero_deletes(self):
        basis = _basis(self.ring, 'x*y + 1', 'x + 1')
        basis.redundant.add(0)
        basis.replace(0, Polynomial.zero(self.ring))
        self.assertFalse(basis.is_live(0))
        self.assertEqual(basis.redundant, set())
        self.assertEqual(basis.live_indices(), [1])

    def test_recompute_redundancy_reports_revived_entries(self):
        basis = _basis(self.ring, 'x*y + 1', 'x + 1')
        basis.redundant = {0}
        basis.replace(1, _poly(self.ring, 'y + 1'))
        self.assertEqual(basis.recompute_redundancy(), set())
        basis.replace(1, Polynomial.zero(self.ring))
        basis.redundant = {0}
        self.assertEqual(basis.recompute_redundancy(), {0})

    def test_reducer_prefers_largest_head(self):
        basis = _basis(self.ring, 'x + 1', 'x*y + y')
        self.assertEqual(basis.reducer_for(_poly(self.ring, 'x^2*y').head), basis[1])
        self.assertIsNone(basis.reducer_for(_poly(self.ring, 'y^2').head))
