# -*- coding: utf-8 -*-
"""Sparse multivariate polynomials with exact coefficients in one of the fields of the arith module.

A polynomial lives in a PolynomialRing which fixes the coefficient field and the ordered list of variable
names. Terms are kept in a dictionary mapping exponent tuples to nonzero coefficients.
"""
import re
from math import comb

import sympy
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from .arith import ExtensionField, as_fraction
from .errors import FieldMismatchException, UnknownVariableException, PolynomialParseException, \
    InvalidProfileException, DivisionByZeroException

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

_VARIABLE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class PolynomialRing(object):
    """The ring field[variables], variables are ordered (this order drives printing)"""
    def __init__(self, field, variables):
        """
        Parameters
        ----------
        field: Field
            The coefficient field
        variables: iterable (subtype: str)
            The names of the variables, distinct identifiers
        """
        variables = tuple(variables)
        for name in variables:
            if not _VARIABLE.match(name):
                raise ValueError("Invalid variable name '{}'.".format(name))
        if len(set(variables)) != len(variables):
            raise ValueError("Duplicate variable names in {}.".format(variables))
        self._field = field
        self._variables = variables
        self._index = {name: i for i, name in enumerate(variables)}

    @property
    def field(self):
        return self._field

    @property
    def variables(self):
        return self._variables

    @property
    def nvars(self):
        return len(self._variables)

    def index(self, variable):
        try:
            return self._index[variable]
        except KeyError:
            raise UnknownVariableException("Unknown variable '{}' (ring variables: {}).".format(variable, ", ".join(self._variables)))

    def __contains__(self, variable):
        return variable in self._index

    @property
    def zero(self):
        return Polynomial(self, {}, check=False)

    @property
    def one(self):
        return self.constant(1)

    def constant(self, value):
        value = self._field(value)
        return Polynomial(self, {(0,) * self.nvars: value} if value else {}, check=False)

    def monomial(self, exponents, coefficient=1):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ValueError("Expected {} exponents, got {}.".format(self.nvars, len(exponents)))
        return Polynomial(self, {exponents: coefficient})

    def gen(self, variable):
        exponents = [0] * self.nvars
        exponents[self.index(variable)] = 1
        return Polynomial(self, {tuple(exponents): self._field.one}, check=False)

    @property
    def gens(self):
        return tuple(self.gen(name) for name in self._variables)

    def __call__(self, value):
        if isinstance(value, Polynomial):
            return value.set_ring(self)
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)

    def parse(self, text):
        """Parse a polynomial written in the text format ('x1^2*z - 3/2*x2')

        Raises
        ------
        PolynomialParseException: on malformed text or unknown variables, with the (1-based) line and column
        """
        return _Parser(self, text).parse()

    def extend(self, *variables):
        """A ring with the given variables appended (those already present are ignored)"""
        return PolynomialRing(self._field, self._variables + tuple(v for v in variables if v not in self._index))

    def drop(self, *variables):
        for variable in variables:
            self.index(variable)
        return PolynomialRing(self._field, tuple(v for v in self._variables if v not in variables))

    def with_field(self, field):
        return PolynomialRing(field, self._variables)

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self._field == other._field \
            and self._variables == other._variables

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._field, self._variables))

    def __repr__(self):
        return "{}[{}]".format(self._field.name, ", ".join(self._variables))


class Polynomial(object):
    """An element of a PolynomialRing. Polynomials are immutable."""
    def __init__(self, ring, terms, check=True):
        """
        Parameters
        ----------
        ring: PolynomialRing
            The ring of the polynomial
        terms: dict
            Maps exponent tuples to coefficients
        check: bool
            True for converting the coefficients into the ring field and dropping zeros
        """
        self._ring = ring
        if check:
            field = ring.field
            converted = dict()
            for exponents, coefficient in terms.items():
                exponents = tuple(int(e) for e in exponents)
                if len(exponents) != ring.nvars or any(e < 0 for e in exponents):
                    raise ValueError("Invalid exponents {} for ring {}.".format(exponents, ring))
                coefficient = field(coefficient)
                if coefficient:
                    converted[exponents] = coefficient
            terms = converted
        else:
            terms = {e: c for e, c in terms.items() if c}
        self._terms = terms

    @property
    def ring(self):
        return self._ring

    @property
    def field(self):
        return self._ring.field

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return len(self._terms) == 0

    def __bool__(self):
        return len(self._terms) > 0

    def is_constant(self):
        return len(self._terms) == 0 or (len(self._terms) == 1 and (0,) * self._ring.nvars in self._terms)

    def constant_coefficient(self):
        return self._terms.get((0,) * self._ring.nvars, self.field.zero)

    def variables_used(self):
        used = set()
        for exponents in self._terms:
            used.update(i for i, e in enumerate(exponents) if e > 0)
        return tuple(self._ring.variables[i] for i in sorted(used))

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._ring != self._ring:
                raise FieldMismatchException("Cannot combine polynomials of {!r} and {!r}.".format(self._ring, other._ring))
            return other
        if isinstance(other, str):
            return None
        return self._ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            terms[exponents] = terms[exponents] + coefficient if exponents in terms else coefficient
        return Polynomial(self._ring, terms, check=False)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self._ring, {e: -c for e, c in self._terms.items()}, check=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict()
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                terms[exponents] = terms[exponents] + product if exponents in terms else product
        return Polynomial(self._ring, terms, check=False)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = self.field(scalar)
        return Polynomial(self._ring, {e: c * scalar for e, c in self._terms.items()}, check=False)

    def __truediv__(self, scalar):
        """Division by a nonzero scalar"""
        if isinstance(scalar, Polynomial):
            if not scalar.is_constant():
                raise TypeError("Polynomial division is only defined by constants.")
            scalar = scalar.constant_coefficient()
        return self.scale(self.field.one / self.field(scalar))

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Polynomial powers need a non-negative integer exponent, got {}.".format(exponent))
        result, base = self._ring.one, self
        while exponent > 0:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent > 0:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._ring == other._ring and self._terms == other._terms
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # degrees
    def degree(self, variable=None):
        """Degree in a variable, or total degree if variable is None (-1 for the zero polynomial)"""
        if variable is None:
            return self.total_degree()
        index = self._ring.index(variable)
        return max((e[index] for e in self._terms), default=-1)

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self, variables=None):
        """True if all terms have the same degree in the given variables (all variables by default)"""
        indexes = range(self._ring.nvars) if variables is None else [self._ring.index(v) for v in variables]
        degrees = {sum(e[i] for i in indexes) for e in self._terms}
        return len(degrees) <= 1

    def coefficient(self, variable, degree):
        """Coefficient of variable^degree, as a polynomial of the same ring free of that variable"""
        index = self._ring.index(variable)
        terms = dict()
        for exponents, coefficient in self._terms.items():
            if exponents[index] == degree:
                terms[exponents[:index] + (0,) + exponents[index + 1:]] = coefficient
        return Polynomial(self._ring, terms, check=False)

    def coefficients(self, variable):
        """Coefficients [c_0, ..., c_d] in the given variable"""
        return [self.coefficient(variable, d) for d in range(self.degree(variable) + 1)]

    # derivatives
    def derivative(self, variable, order=1):
        """Partial derivative of a given order, order -1 gives the zero polynomial"""
        if order == -1:
            return self._ring.zero
        if order < -1:
            raise ValueError("Derivative order must be at least -1, got {}.".format(order))
        index = self._ring.index(variable)
        terms = dict()
        for exponents, coefficient in self._terms.items():
            power = exponents[index]
            if power < order:
                continue
            factor = 1
            for i in range(order):
                factor *= power - i
            terms[exponents[:index] + (power - order,) + exponents[index + 1:]] = coefficient * factor
        return Polynomial(self._ring, terms, check=False)

    def hasse_derivative(self, variable, order=1):
        """Divided derivative d^s/dvar^s / s!, order -1 gives the zero polynomial"""
        if order == -1:
            return self._ring.zero
        if order < -1:
            raise ValueError("Derivative order must be at least -1, got {}.".format(order))
        index = self._ring.index(variable)
        terms = dict()
        for exponents, coefficient in self._terms.items():
            power = exponents[index]
            if power < order:
                continue
            terms[exponents[:index] + (power - order,) + exponents[index + 1:]] = coefficient * comb(power, order)
        return Polynomial(self._ring, terms, check=False)

    # substitution
    def evaluate(self, values):
        """Value of the polynomial at a point

        Parameters
        ----------
        values: dict|sequence
            Maps every variable name to a value, or lists the values in ring order. Values can live in an
            extension of the coefficient field.
        """
        if not isinstance(values, dict):
            values = list(values)
            if len(values) != self._ring.nvars:
                raise ValueError("Expected {} values, got {}.".format(self._ring.nvars, len(values)))
            values = dict(zip(self._ring.variables, values))
        point = list()
        for name in self._ring.variables:
            if name not in values:
                raise UnknownVariableException("No value for variable '{}'.".format(name))
            point.append(values[name])
        target = _common_field(self.field, point)
        point = [target(v) for v in point]
        powers = [dict() for _ in point]
        result = target.zero
        for exponents, coefficient in self._terms.items():
            term = target(coefficient)
            for i, e in enumerate(exponents):
                if e == 0:
                    continue
                if e not in powers[i]:
                    powers[i][e] = point[i] ** e
                term = term * powers[i][e]
            result = result + term
        return result

    def __call__(self, *args, **kwargs):
        if len(args) == 1 and isinstance(args[0], dict):
            return self.evaluate(args[0])
        if len(args) > 0:
            return self.evaluate(args)
        return self.evaluate(kwargs)

    def compose(self, ring, mapping):
        """Re-express the polynomial in another ring, substituting polynomials of that ring for variables

        Parameters
        ----------
        ring: PolynomialRing
            The target ring (same field)
        mapping: dict
            Maps variable names of this polynomial's ring to polynomials of the target ring or scalars. Unmapped
            variables are mapped to the variable of the same name in the target ring.

        Raises
        ------
        UnknownVariableException: if an unmapped variable in use does not exist in the target ring
        """
        if ring.field != self.field:
            raise FieldMismatchException("Cannot compose across fields {} and {}.".format(self.field.name, ring.field.name))
        for name in mapping:
            self._ring.index(name)
        images = list()
        used = set(self.variables_used())
        for name in self._ring.variables:
            if name in mapping:
                image = mapping[name]
                images.append(image if isinstance(image, Polynomial) else ring.constant(image))
            elif name in used:
                images.append(ring.gen(name))
            else:
                images.append(None)
        powers = [dict() for _ in images]
        result = dict()
        for exponents, coefficient in self._terms.items():
            term = ring.constant(coefficient)
            for i, e in enumerate(exponents):
                if e == 0:
                    continue
                if e not in powers[i]:
                    powers[i][e] = images[i] ** e
                term = term * powers[i][e]
            for e, c in term._terms.items():
                result[e] = result[e] + c if e in result else c
        return Polynomial(ring, result, check=False)

    def substitute(self, mapping):
        """Partial substitution of scalars or polynomials of the same ring for variables"""
        return self.compose(self._ring, mapping)

    def set_ring(self, ring):
        """Re-express the polynomial in a ring over the same field containing all the variables in use"""
        if ring == self._ring:
            return self
        if ring.field != self.field:
            raise FieldMismatchException("Cannot move a polynomial from {} to {}.".format(self.field.name, ring.field.name))
        positions = [ring.index(name) if e_used else None
                     for name, e_used in zip(self._ring.variables, self._used_mask())]
        terms = dict()
        for exponents, coefficient in self._terms.items():
            target = [0] * ring.nvars
            for i, e in enumerate(exponents):
                if e > 0:
                    target[positions[i]] = e
            terms[tuple(target)] = coefficient
        return Polynomial(ring, terms, check=False)

    def _used_mask(self):
        mask = [False] * self._ring.nvars
        for exponents in self._terms:
            for i, e in enumerate(exponents):
                if e > 0:
                    mask[i] = True
        return mask

    def change_field(self, field):
        """Map the coefficients into another field (reduction modulo p, embedding into an extension)"""
        ring = self._ring.with_field(field)
        return Polynomial(ring, {e: field(c) for e, c in self._terms.items()}, check=False)

    def as_univariate(self, variable):
        """The polynomial as a UnivariatePolynomial in the given variable

        Raises
        ------
        ValueError: if another variable occurs
        """
        from .univariate import UnivariatePolynomial
        index = self._ring.index(variable)
        coefficients = [self.field.zero] * (self.degree(variable) + 1)
        for exponents, coefficient in self._terms.items():
            if any(e > 0 for i, e in enumerate(exponents) if i != index):
                raise ValueError("Polynomial {} involves variables other than '{}'.".format(self, variable))
            coefficients[exponents[index]] = coefficient
        return UnivariatePolynomial(self.field, coefficients, variable=variable)

    # printing
    def sorted_terms(self):
        """Terms in graded lexicographic order (highest first)"""
        return sorted(self._terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self):
        if len(self._terms) == 0:
            return "0"
        field = self.field
        parts = list()
        for exponents, coefficient in self.sorted_terms():
            monomial = "*".join(
                name if e == 1 else "{}^{}".format(name, e)
                for name, e in zip(self._ring.variables, exponents) if e > 0
            )
            text = field.format(coefficient)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if isinstance(field, ExtensionField) and ("+" in text or "*" in text or "^" in text) and len(monomial) > 0:
                text = "({})".format(text)
            if len(monomial) > 0:
                text = monomial if text == "1" else "{}*{}".format(text, monomial)
            if len(parts) == 0:
                parts.append("-" + text if negative else text)
            else:
                parts.append(("- " if negative else "+ ") + text)
        return " ".join(parts)

    def __repr__(self):
        return "Polynomial({}, {!r})".format(str(self), self._ring)


def _field_of(value, default):
    if hasattr(value, "field"):
        return value.field
    return default


def _common_field(field, values):
    """The field holding the coefficients and all the values (the coefficient field or one extension of it)"""
    target = field
    for value in values:
        candidate = _field_of(value, target)
        if candidate != target and candidate != field:
            if target is field or target == field:
                target = candidate
            else:
                raise FieldMismatchException("Values from both {} and {}.".format(target.name, candidate.name))
    return target


def rem_mod_product(g, profile, variable="z", points=None):
    """Remainder of g modulo prod_i (z - z_i)^(k_i) with symbolic z_i.

    Parameters
    ----------
    g: Polynomial
        Polynomial in the variable z whose coefficients may involve other variables
    profile: iterable (subtype: int)
        The multiplicities (k_1, ..., k_r)
    variable: str
        Name of the variable z
    points: iterable (subtype: str) (default: None)
        Names of the variables z_1, ..., z_r, by default variable + '1', ..., variable + 'r'. They are added to
        the ring of g when missing.

    Returns
    -------
    remainders: list (subtype: Polynomial, size: k)
        h_0, ..., h_{k-1} such that g - sum_l h_l z^l is divisible by the product, in the ring of g extended
        with the z_i (free of z)
    """
    profile = tuple(profile)
    if len(profile) == 0 or any(k < 1 for k in profile):
        raise InvalidProfileException("Invalid multiplicity profile {}.".format(profile))
    if points is None:
        points = tuple("{}{}".format(variable, i + 1) for i in range(len(profile)))
    points = tuple(points)
    if len(points) != len(profile):
        raise ValueError("Expected {} point variables, got {}.".format(len(profile), len(points)))
    ring = g.ring.extend(*points)
    g = g.set_ring(ring)
    z = ring.gen(variable)

    divisor = ring.one
    for name, k in zip(points, profile):
        divisor = divisor * (z - ring.gen(name)) ** k
    k = sum(profile)
    divisor = divisor.coefficients(variable)  # monic, degree k
    remainder = g.coefficients(variable)
    for degree in range(len(remainder) - 1, k - 1, -1):
        lead = remainder[degree]
        if lead.is_zero():
            continue
        shift = degree - k
        for i in range(k + 1):
            remainder[shift + i] = remainder[shift + i] - lead * divisor[i]
    remainder = remainder[:k] + [ring.zero] * max(0, k - len(remainder))
    return remainder


class _Parser(object):
    """Polynomial text format, checked by recursive descent and evaluated by sympy

    expression := ['+'|'-'] term (('+'|'-') term)*
    term := factor (('*'|'/') factor)*
    factor := '-' factor | atom ['^' integer]
    atom := number | name | '(' expression ')'

    Each production returns the sympy source of what it read and whether it involves a variable or the
    generator of an extension field. Positions are reported as 1-based (line, column).
    """
    _TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.DOTALL)
    _GENERATOR = "_g"

    def __init__(self, ring, text):
        self._ring = ring
        self._text = text.rstrip()
        self._symbols = {name: "_v{}".format(i) for i, name in enumerate(ring.variables)}
        field = ring.field
        if isinstance(field, ExtensionField) and field.generator_name not in self._symbols:
            self._symbols[field.generator_name] = self._GENERATOR
        self._tokens = list()
        position = 0
        while position < len(self._text):
            match = self._TOKEN.match(self._text, position)
            number, name, symbol = match.groups()
            line, column = self._location(match.start(match.lastindex))
            if number is not None:
                self._tokens.append(("number", int(number), line, column))
            elif name is not None:
                self._tokens.append(("name", name, line, column))
            elif symbol in "+-*/^()":
                self._tokens.append(("symbol", symbol, line, column))
            else:
                raise PolynomialParseException("Unexpected character '{}'.".format(symbol), column=column, line=line)
            position = match.end()
        self._position = 0

    def _location(self, offset):
        line = self._text.count("\n", 0, offset) + 1
        return line, offset - (self._text.rfind("\n", 0, offset) + 1) + 1

    def _error(self, message, token=None):
        line, column = (token[2], token[3]) if token is not None else self._location(len(self._text))
        return PolynomialParseException(message, column=column, line=line)

    def _peek(self):
        return self._tokens[self._position] if self._position < len(self._tokens) else None

    def _next(self):
        token = self._peek()
        self._position += 1
        return token

    def _is_symbol(self, token, symbols):
        return token is not None and token[0] == "symbol" and token[1] in symbols

    def _evaluate(self, source):
        local = {symbol: sympy.Symbol(symbol) for symbol in self._symbols.values()}
        return parse_expr(source, local_dict=local, transformations=standard_transformations)

    def parse(self):
        if len(self._tokens) == 0:
            raise self._error("Empty polynomial.")
        source, _ = self._expression()
        token = self._peek()
        if token is not None:
            raise self._error("Unexpected '{}'.".format(token[1]), token)
        return self._convert(self._evaluate(source))

    def _convert(self, expression):
        ring, field = self._ring, self._ring.field
        names = [self._symbols[name] for name in ring.variables]
        has_generator = self._GENERATOR in self._symbols.values()
        generators = [sympy.Symbol(name) for name in names + ([self._GENERATOR] if has_generator else [])]
        try:
            poly = sympy.Poly(expression, *generators, domain=sympy.QQ)
        except sympy.PolynomialError:
            raise self._error("Not a polynomial.", self._tokens[0])
        terms = dict()
        for exponents, coefficient in poly.terms():
            value = field(as_fraction(coefficient))
            if has_generator:
                value = value * field.generator ** exponents[-1]
                exponents = exponents[:-1]
            terms[exponents] = terms[exponents] + value if exponents in terms else value
        return Polynomial(ring, terms)

    def _expression(self):
        prefix = ""
        if self._is_symbol(self._peek(), "+-"):
            prefix = self._next()[1]
        source, involved = self._term()
        parts = ["{}({})".format(prefix, source)]
        while self._is_symbol(self._peek(), "+-"):
            operator = self._next()[1]
            term, term_involved = self._term()
            parts.append("{}({})".format(operator, term))
            involved = involved or term_involved
        return "".join(parts), involved

    def _term(self):
        source, involved = self._factor()
        while self._is_symbol(self._peek(), "*/"):
            operator = self._next()
            factor, factor_involved = self._factor()
            if operator[1] == "/":
                if factor_involved or self._is_zero(factor):
                    raise self._error("Division by a non-constant or zero polynomial.", operator)
            source = "({}){}({})".format(source, operator[1], factor)
            involved = involved or factor_involved
        return source, involved

    def _is_zero(self, source):
        try:
            return not self._ring.field(as_fraction(self._evaluate(source)))
        except DivisionByZeroException:
            return True

    def _factor(self):
        if self._is_symbol(self._peek(), "-"):
            self._next()
            source, involved = self._factor()
            return "-({})".format(source), involved
        source, involved = self._atom()
        if self._is_symbol(self._peek(), "^"):
            self._next()
            token = self._next()
            if token is None or token[0] != "number":
                raise self._error("Expected a non-negative integer exponent.", token)
            source = "({})**{}".format(source, token[1])
        return source, involved

    def _atom(self):
        token = self._next()
        if token is None:
            raise self._error("Unexpected end of input.")
        kind, value = token[0], token[1]
        if kind == "number":
            return str(value), False
        if kind == "name":
            if value not in self._symbols:
                raise self._error("Unknown variable '{}'.".format(value), token)
            return self._symbols[value], True
        if value == "(":
            source, involved = self._expression()
            closing = self._next()
            if not self._is_symbol(closing, ")"):
                raise self._error("Expected ')'.", closing)
            return "({})".format(source), involved
        raise self._error("Unexpected '{}'.".format(value), token)
