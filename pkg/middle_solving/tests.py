from django.test import SimpleTestCase

from f4.history import RoundHistory
from f4.utils.variants import RenewMode
from middle_solving.assignment import Assignment
from middle_solving.services.renew import renew
from middle_solving.services.solving import extract_candidates, solve_unique
from pairs.basis import Basis
from pairs.queue import PairQueue
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


def _state(ring, *texts):
    basis, queue = Basis(ring), PairQueue()
    for text in texts:
        update(basis, queue, _poly(ring, text))
    return basis, queue


class AssignmentTests(SimpleTestCase):
    def test_assign_and_describe(self):
        ring = Ring.standard(3)
        assignment = Assignment()
        assignment.assign(2, 2, 0)
        assignment.assign(1, 0, 1)
        self.assertEqual(assignment.describe(ring), 'x1=1, x3=0')
        self.assertEqual(assignment.order_of_solution, [(2, 2, 0), (1, 0, 1)])
        self.assertIn(0, assignment)
        self.assertEqual(len(assignment), 2)

    def test_rejects_reassignment_and_bad_values(self):
        assignment = Assignment()
        assignment.assign(1, 0, 1)
        with self.assertRaises(ValueError):
            assignment.assign(2, 0, 1)
        with self.assertRaises(ValueError):
            assignment.assign(2, 1, 2)


class SolvingTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_extract_candidates(self):
        candidates = extract_candidates([self.p('x*y + 1'), self.p('y + 1'), self.p('z^2 + z')])
        self.assertEqual(candidates, [(self.p('y + 1'), 1), (self.p('z^2 + z'), 2)])

    def test_unique_roots_are_solved(self):
        outcome = solve_unique(extract_candidates([self.p('x + 1'), self.p('y')]))
        self.assertEqual(outcome.values, {0: 1, 1: 0})
        self.assertFalse(outcome.inconsistent)

    def test_two_roots_are_skipped(self):
        outcome = solve_unique(extract_candidates([self.p('z^2 + z')]))
        self.assertEqual(outcome.values, {})

    def test_no_root_is_inconsistent(self):
        outcome = solve_unique(extract_candidates([self.p('x^2 + x + 1')]))
        self.assertTrue(outcome.inconsistent)

    def test_conflicts_are_inconsistent(self):
        outcome = solve_unique(extract_candidates([self.p('x'), self.p('x + 1')]))
        self.assertTrue(outcome.inconsistent)
        self.assertIn('x must be both 0 and 1', outcome.reason)

        outcome = solve_unique(extract_candidates([self.p('y + 1')]), known={1: 0})
        self.assertTrue(outcome.inconsistent)

    def test_known_values_are_not_repeated(self):
        outcome = solve_unique(extract_candidates([self.p('y + 1')]), known={1: 1})
        self.assertEqual(outcome.values, {})
        self.assertFalse(outcome.inconsistent)


class RenewTests(SimpleTestCase):
    def setUp(self):
        self.ring = Ring(['x', 'y', 'z'])

    def p(self, text):
        return _poly(self.ring, text)

    def test_cascade_solves_follow_up_variables(self):
        basis, queue = _state(self.ring, 'x*y + x', 'x + 1')
        assignment = Assignment()
        outcome = renew(basis, queue, RoundHistory(), assignment, {0: 1}, 1)
        self.assertFalse(outcome.inconsistent)
        self.assertEqual(outcome.solved, {0: 1, 1: 1})
        self.assertEqual(assignment.solved, {0: 1, 1: 1})
        self.assertEqual(basis.polynomials(), [])
        self.assertEqual(len(queue), 0)

    def test_without_cascade_the_univariate_remains(self):
        basis, queue = _state(self.ring, 'x*y + x', 'x + 1')
        outcome = renew(basis, queue, RoundHistory(), Assignment(), {0: 1}, 1, cascade=False)
        self.assertEqual(outcome.solved, {0: 1})
        self.assertEqual(basis.polynomials(), [self.p('y + 1')])

    def test_substitution_exposes_inconsistency(self):
        basis, queue = _state(self.ring, 'x*z + y', 'x*z + y + 1')
        outcome = renew(basis, queue, RoundHistory(), Assignment(), {0: 0}, 1)
        self.assertTrue(outcome.inconsistent)
        self.assertIn('y must be both', outcome.reason)

    def test_constant_after_substitution(self):
        basis, queue = _state(self.ring, 'x*y + 1', 'y*z + z')
        outcome = renew(basis, queue, RoundHistory(), Assignment(), {0: 0}, 1)
        self.assertTrue(outcome.inconsistent)

    def test_pending_and_history_are_substituted(self):
        basis, queue = _state(self.ring, 'x*y + z', 'y*z + 1')
        history = RoundHistory()
        history.record(1, [self.p('x*y + z')], [self.p('x*y + z')])
        outcome = renew(
            basis, queue, history, Assignment(), {0: 1}, 2,
            pending=[self.p('x*z + x'), self.p('x + y*z')],
        )
        self.assertFalse(outcome.inconsistent)
        self.assertFalse(history.mentions(0))
        for p in [*basis.polynomials(), *outcome.pending]:
            self.assertFalse(p.mentions(0))

    def test_pairs_are_repaired(self):
        for mode in RenewMode:
            basis, queue = _state(
                self.ring, 'x*y + z', 'x*z + y', 'y*z + x + 1', 'y^2 + y', 'z^2 + z',
            )
            renew(basis, queue, RoundHistory(), Assignment(), {0: 1}, 1, mode=mode, cascade=False)
            for pair in queue:
                left, right = basis[pair.left], basis[pair.right]
                self.assertIsNotNone(left)
                self.assertIsNotNone(right)
                self.assertFalse(left.head.is_coprime(right.head))
                self.assertEqual(pair.lcm, left.head.lcm(right.head))

    def test_entry_hidden_by_a_rewritten_head_is_reduced(self):
        # x = 1 turns x*z + y into y + z, whose head y divides y*z
        for mode in RenewMode:
            basis, queue = _state(self.ring, 'x*z + y', 'y*z + 1')
            outcome = renew(basis, queue, RoundHistory(), Assignment(), {0: 1}, 1, mode=mode, cascade=False)
            self.assertFalse(outcome.inconsistent)
            self.assertEqual(basis.polynomials(), [self.p('y + z'), self.p('z^2 + 1')])
            self.assertEqual(basis.redundant, set())
            for pair in queue:
                self.assertEqual(pair.lcm, basis[pair.left].head.lcm(basis[pair.right].head))

    def test_hidden_entry_reducing_to_one_is_inconsistent(self):
        for mode in RenewMode:
            basis, queue = _state(self.ring, 'x*z + y', 'y + z + 1')
            outcome = renew(basis, queue, RoundHistory(), Assignment(), {0: 1}, 1, mode=mode, cascade=False)
            self.assertTrue(outcome.inconsistent)
            self.assertIn('reduces to 1', outcome.reason)

    def test_empty_values_rejected(self):
        basis, queue = _state(self.ring, 'x + 1')
        with self.assertRaises(ValueError):
            renew(basis, queue, RoundHistory(), Assignment(), {}, 1)
