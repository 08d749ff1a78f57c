from django.test import SimpleTestCase

from core.services.problem_parser import ProblemParseError, parse_problem, render_problem
from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring
from polynomials.utils.monomial_orders import MonomialOrder

WORKED_EXAMPLE = """\
# S-polynomial example
vars: x y z

x*y + y*z
x*z + y*z + 1   # second generator
"""


class ParseProblemTests(SimpleTestCase):
    def test_worked_example(self):
        problem = parse_problem(WORKED_EXAMPLE)
        self.assertEqual(problem.ring, Ring(['x', 'y', 'z']))
        self.assertTrue(problem.field_equations)
        self.assertEqual([str(p) for p in problem.system], ['x*y + y*z', 'x*z + y*z + 1'])

    def test_unpacks_as_ring_and_system(self):
        ring, system = parse_problem("vars: a, b\na*b + 1\n")
        self.assertEqual(ring.names, ('a', 'b'))
        self.assertEqual(len(system), 1)

    def test_directives(self):
        problem = parse_problem("vars: x y\norder: lex\nfield-equations: off\ny^2 + x\n")
        self.assertIs(problem.ring.order, MonomialOrder.LEX)
        self.assertFalse(problem.field_equations)
        self.assertEqual(str(problem.system[0]), 'x + y^2')

    def test_default_order_argument(self):
        problem = parse_problem("vars: x y\nx + y\n", default_order='lex')
        self.assertIs(problem.ring.order, MonomialOrder.LEX)

    def test_constants_and_powers(self):
        ring, system = parse_problem("vars: x y\nx^2 + x\n0 + x*y + 1\nx*0 + y\n")
        self.assertEqual(system[0], Polynomial.field_equation(ring, 0))
        self.assertEqual(str(system[1]), 'x*y + 1')
        self.assertEqual(system[2], Polynomial(ring, [Monomial((0, 1))]))

    def test_repeated_terms_cancel(self):
        _, system = parse_problem("vars: x y\nx + y + x\n")
        self.assertEqual(str(system[0]), 'y')


class ParseErrorTests(SimpleTestCase):
    def assertParseError(self, text, line, column, message):
        with self.assertRaises(ProblemParseError) as caught:
            parse_problem(text)
        error = caught.exception
        self.assertEqual((error.line, error.column), (line, column))
        self.assertIn(message, str(error))

    def test_missing_declaration(self):
        self.assertParseError("x + 1\n", 1, 1, "expected 'vars:'")
        self.assertParseError("# nothing\n", 1, 1, "expected 'vars:'")

    def test_undeclared_variable(self):
        self.assertParseError("vars: x y\nx*w + 1\n", 2, 3, "undeclared variable 'w'")

    def test_constants_other_than_zero_and_one(self):
        self.assertParseError("vars: x\nx + 2\n", 2, 5, "constants are 0 or 1")

    def test_dangling_operator(self):
        self.assertParseError("vars: x\nx +\n", 2, 4, "expected a variable or constant")

    def test_unexpected_character(self):
        self.assertParseError("vars: x y\nx y\n", 2, 3, "unexpected 'y'")
        self.assertParseError("vars: x\nx - 1\n", 2, 3, "unexpected '-'")

    def test_zero_polynomial(self):
        self.assertParseError("vars: x\nx + x\n", 2, 1, "zero polynomial")

    def test_empty_system(self):
        self.assertParseError("vars: x\n\n", 2, 1, "no polynomials")

    def test_directive_errors(self):
        self.assertParseError("vars: x\nx + 1\norder: lex\n", 3, 1, "after the first polynomial")
        self.assertParseError("vars: x\norder: deglex\nx\n", 2, 7, "unknown monomial order")
        self.assertParseError("vars: x\nfield-equations: maybe\nx\n", 2, 17, "expected on or off")
        self.assertParseError("vars: x\ncharacteristic: 2\nx\n", 2, 1, "unknown directive")

    def test_bad_declarations(self):
        self.assertParseError("vars: x x\nx\n", 1, 6, "duplicate variable name")
        self.assertParseError("vars: x 1y\nx\n", 1, 9, "invalid variable name '1y'")
        self.assertParseError("vars:\nx\n", 1, 6, "declares no variables")


class RenderProblemTests(SimpleTestCase):
    def test_round_trip(self):
        for text in (WORKED_EXAMPLE, "vars: a b c\norder: lex\nfield-equations: off\na^2*b + c\nb + 1\n"):
            problem = parse_problem(text)
            rendered = render_problem(problem.ring, problem.system, problem.field_equations)
            again = parse_problem(rendered)
            self.assertEqual(again.ring, problem.ring)
            self.assertEqual(again.system, problem.system)
            self.assertEqual(again.field_equations, problem.field_equations)

    def test_text(self):
        ring, system = parse_problem("vars: x y\nx*y + 1\n")
        self.assertEqual(render_problem(ring, system), "vars: x y\norder: grevlex\nx*y + 1\n")
