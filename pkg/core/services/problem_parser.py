"""
Problem files.

    # comment
    vars: x y z
    order: grevlex            (optional, grevlex or lex)
    field-equations: on       (optional, on or off)
    x*y + y*z
    x*z + y*z + 1

`vars:` is the first non-comment line; directives come before the first
polynomial. A polynomial is a sum of products of variables (with ^k powers)
and the constants 0 and 1.
"""
import re
from dataclasses import dataclass

from django.conf import settings

from polynomials.monomial import Monomial
from polynomials.polynomial import Polynomial
from polynomials.ring import Ring
from polynomials.utils.monomial_orders import MonomialOrder

NAME = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
NUMBER = re.compile(r'[0-9]+')
DIRECTIVE = re.compile(r'^\s*([A-Za-z][A-Za-z-]*)\s*:(.*)$')
SWITCHES = {'on': True, 'true': True, 'yes': True, 'off': False, 'false': False, 'no': False}


class ProblemParseError(ValueError):
    def __init__(self, message, line, column=1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


@dataclass
class ProblemFile:
    ring: Ring
    system: list
    field_equations: bool = True

    def __iter__(self):
        # ring, system = parse_problem(text)
        return iter((self.ring, self.system))


def parse_problem(text, default_order=None):
    """
    Parse a problem file.

    Raises:
        ProblemParseError: On syntax errors, undeclared variables, zero
            polynomials and systems without polynomials.
    """
    names = None
    order = MonomialOrder.from_string(default_order or settings.GROEBNER_CONFIG['DEFAULT_ORDER'])
    field_equations = True
    bodies = []
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        content = raw.split('#', 1)[0]
        if not content.strip():
            continue
        directive = DIRECTIVE.match(content)
        if names is None:
            if not directive or directive.group(1).lower() != 'vars':
                raise ProblemParseError("expected 'vars:' declaration", number, _first_column(content))
            declared = directive.group(2).replace(',', ' ').split()
            if not declared:
                raise ProblemParseError("'vars:' declares no variables", number, len(content) + 1)
            for name in declared:
                if not NAME.fullmatch(name):
                    raise ProblemParseError(f"invalid variable name {name!r}", number, content.index(name) + 1)
            if len(set(declared)) != len(declared):
                raise ProblemParseError("duplicate variable name", number, content.index(':') + 2)
            names = declared
            continue
        if directive:
            key, value = directive.group(1).lower(), directive.group(2).strip().lower()
            column = content.index(':') + 2
            if bodies:
                raise ProblemParseError(f"directive '{key}:' after the first polynomial", number, 1)
            if key == 'order':
                try:
                    order = MonomialOrder.from_string(value)
                except ValueError:
                    raise ProblemParseError(f"unknown monomial order {value!r}", number, column)
            elif key == 'field-equations':
                if value not in SWITCHES:
                    raise ProblemParseError(f"expected on or off, got {value!r}", number, column)
                field_equations = SWITCHES[value]
            else:
                raise ProblemParseError(f"unknown directive '{key}:'", number, 1)
            continue
        bodies.append((number, content))

    if names is None:
        raise ProblemParseError("expected 'vars:' declaration", last_line or 1)
    if not bodies:
        raise ProblemParseError("the system has no polynomials", last_line or 1)

    ring = Ring(names, order)
    system = [_parse_polynomial(content, number, ring) for number, content in bodies]
    return ProblemFile(ring, system, field_equations)


def _first_column(content):
    return len(content) - len(content.lstrip()) + 1


class _PolynomialReader:
    def __init__(self, text, line, ring):
        self.text = text
        self.line = line
        self.ring = ring
        self.position = 0

    def error(self, message, position=None):
        column = (self.position if position is None else position) + 1
        return ProblemParseError(message, self.line, column)

    def skip_spaces(self):
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def peek(self):
        self.skip_spaces()
        return self.text[self.position] if self.position < len(self.text) else ''

    def read_polynomial(self):
        monomials = []
        while True:
            monomial = self.read_term()
            if monomial is not None:
                monomials.append(monomial)
            if self.peek() != '+':
                break
            self.position += 1
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return Polynomial.from_monomials(self.ring, monomials)

    def read_term(self):
        exponents = [0] * self.ring.n
        vanishes = False
        while True:
            vanishes |= self.read_factor(exponents)
            if self.peek() != '*':
                break
            self.position += 1
        return None if vanishes else Monomial(exponents)

    def read_factor(self, exponents):
        # returns True for the constant 0
        char = self.peek()
        start = self.position
        if not char:
            raise self.error("expected a variable or constant")
        number = NUMBER.match(self.text, self.position)
        if number:
            self.position = number.end()
            if number.group() not in ('0', '1'):
                raise self.error(f"constants are 0 or 1, got {number.group()}", start)
            return number.group() == '0'
        name = NAME.match(self.text, self.position)
        if not name:
            raise self.error(f"unexpected {char!r}")
        self.position = name.end()
        try:
            index = self.ring.index_of(name.group())
        except ValueError:
            raise self.error(f"undeclared variable {name.group()!r}", start)
        power = 1
        if self.peek() == '^':
            self.position += 1
            self.skip_spaces()
            digits = NUMBER.match(self.text, self.position)
            if not digits:
                raise self.error("expected an exponent after '^'")
            self.position = digits.end()
            power = int(digits.group())
        exponents[index] += power
        return False


def _parse_polynomial(content, number, ring):
    reader = _PolynomialReader(content, number, ring)
    polynomial = reader.read_polynomial()
    if polynomial.is_zero:
        raise ProblemParseError("zero polynomial is not a generator", number, _first_column(content))
    return polynomial


def render_problem(ring, system, field_equations=True):
    """Text that parse_problem reads back as the same ring and system."""
    lines = [f"vars: {' '.join(ring.names)}", f"order: {ring.order.value}"]
    if not field_equations:
        lines.append("field-equations: off")
    lines.extend(str(p) for p in system)
    return '\n'.join(lines) + '\n'
