# -*- coding: utf-8 -*-
"""Projective varieties given by homogeneous equations or by a polynomial map, and enumeration of the
rational points and lines of projective spaces over finite fields.
"""
import itertools
from functools import reduce

from .errors import DegenerateVarietyException, InvalidLineException
from .linalg import rank, kernel
from .poly import PolynomialRing
from .univariate import UnivariatePolynomial, BinaryForm

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


def projective_variables(n, name="X"):
    return tuple("{}{}".format(name, i) for i in range(n + 1))


def normalize_point(point, field):
    """Representative of a projective point whose first nonzero coordinate is 1"""
    point = [field(value) for value in point]
    for value in point:
        if value:
            inverse = field.one / value
            return tuple(c * inverse for c in point)
    raise InvalidLineException("The zero vector is not a projective point.")


def projective_points(field, n):
    """The points of P^n over a finite field, first nonzero coordinate equal to 1, in a fixed order"""
    elements = list(field.elements())
    zero, one = field.zero, field.one
    for leading in range(n + 1):
        for tail in itertools.product(elements, repeat=n - leading):
            yield (zero,) * leading + (one,) + tuple(tail)


def count_projective_points(order, n):
    return sum(order ** i for i in range(n + 1))


def directions(beta, field):
    """Directions of the lines through beta: the points of the hyperplane X_i0 = 0 where i0 is the first
    nonzero coordinate of beta"""
    n = len(beta) - 1
    pivot = next(i for i, value in enumerate(beta) if value)
    for point in projective_points(field, n - 1):
        yield point[:pivot] + (field.zero,) + point[pivot:]


def projective_lines(field, n):
    """The lines of P^n over a finite field, as pairs of points spanning them (rows of the reduced echelon
    form of the 2 x (n+1) matrices of rank 2)"""
    elements = list(field.elements())
    zero, one = field.zero, field.one
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            free_first = [c for c in range(i + 1, n + 1) if c != j]
            free_second = list(range(j + 1, n + 1))
            for values_first in itertools.product(elements, repeat=len(free_first)):
                first = [zero] * (n + 1)
                first[i] = one
                for c, value in zip(free_first, values_first):
                    first[c] = value
                for values_second in itertools.product(elements, repeat=len(free_second)):
                    second = [zero] * (n + 1)
                    second[j] = one
                    for c, value in zip(free_second, values_second):
                        second[c] = value
                    yield tuple(first), tuple(second)


def count_projective_lines(order, n):
    """Number of lines of P^n over a field with the given number of elements"""
    numerator = (order ** (n + 1) - 1) * (order ** n - 1)
    return numerator // ((order ** 2 - 1) * (order - 1))


def line_points(first, second, field):
    """The rational points of the line spanned by two points"""
    yield normalize_point(second, field)
    for t in field.elements():
        yield normalize_point([a + t * b for a, b in zip(first, second)], field)


def _check_line(beta, direction, field):
    if not any(direction):
        raise InvalidLineException("Zero direction.")
    if rank([list(beta), list(direction)], field) < 2:
        raise InvalidLineException("The direction {} is proportional to the base point.".format(direction))


def line_restriction(generators, first, second):
    """The binary forms G(t0 first + t1 second), one per generator"""
    field = generators[0].field
    linear = [UnivariatePolynomial(field, [a, b]) for a, b in zip(first, second)]
    powers = [{0: UnivariatePolynomial(field, [1])} for _ in linear]
    forms = list()
    for g in generators:
        restricted = UnivariatePolynomial(field, [])
        for exponents, coefficient in g.items():
            term = UnivariatePolynomial(field, [coefficient])
            for i, e in enumerate(exponents):
                if e not in powers[i]:
                    powers[i][e] = linear[i] ** e
                if e > 0:
                    term = term * powers[i][e]
            restricted = restricted + term
        forms.append(BinaryForm(restricted, g.total_degree()))
    return forms


class ImplicitVariety(object):
    """A projective variety cut by homogeneous generators G_1..G_m in X_0..X_N, of codimension c (a complete
    intersection when m = c)"""
    def __init__(self, generators, codimension=None, name=None):
        """
        Parameters
        ----------
        generators: list (subtype: Polynomial)
            Homogeneous generators in a common ring with N+1 variables
        codimension: int (default: None)
            The codimension c, the number of generators by default
        name: str (default: None)
            Name used in reports
        """
        generators = list(generators)
        if len(generators) == 0:
            raise DegenerateVarietyException("An implicit variety needs at least one generator.")
        ring = generators[0].ring
        for index, g in enumerate(generators):
            if g.ring != ring:
                raise DegenerateVarietyException("Generators live in different rings.")
            if g.is_zero() or g.total_degree() < 1:
                raise DegenerateVarietyException("Generator {} is constant.".format(index + 1))
            if not g.is_homogeneous():
                raise DegenerateVarietyException("Generator {} ({}) is not homogeneous.".format(index + 1, g))
        codimension = len(generators) if codimension is None else codimension
        if not 1 <= codimension <= min(len(generators), ring.nvars - 2):
            raise DegenerateVarietyException("Invalid codimension {} for {} generators in P^{}.".format(
                codimension, len(generators), ring.nvars - 1))
        self._generators = generators
        self._codimension = codimension
        self._name = name

    @property
    def generators(self):
        return list(self._generators)

    @property
    def ring(self):
        return self._generators[0].ring

    @property
    def field(self):
        return self.ring.field

    @property
    def n(self):
        return self.ring.nvars - 1

    @property
    def codimension(self):
        return self._codimension

    @property
    def dimension(self):
        return self.n - self._codimension

    @property
    def name(self):
        return self._name

    @property
    def is_complete_intersection(self):
        return len(self._generators) == self._codimension

    @property
    def degree_bound(self):
        """Product of the generator degrees (the degree for a complete intersection)"""
        return reduce(lambda a, b: a * b, (g.total_degree() for g in self._generators), 1)

    def over_field(self, field):
        return ImplicitVariety([g.change_field(field) for g in self._generators], self._codimension, self._name)

    def contains(self, point):
        return all(not g.evaluate(list(point)) for g in self._generators)

    def jacobian_rank(self, point):
        point = list(point)
        matrix = [[g.derivative(v).evaluate(point) for v in self.ring.variables] for g in self._generators]
        return rank(matrix, self.field)

    def restrictor(self, beta):
        """Precomputed restrictions of the generators to the lines through beta"""
        return _Restrictor(self._generators, beta)

    def restrict_to_line(self, beta, direction):
        """The binary forms G_s(t0 beta + t1 direction)

        Raises
        ------
        InvalidLineException: if direction is zero or proportional to beta
        """
        return self.restrictor(beta).forms(direction)

    def to_dict(self):
        return {
            "type": "implicit",
            "field": self.field.name,
            "variables": list(self.ring.variables),
            "generators": [str(g) for g in self._generators],
            "codimension": self._codimension
        }


class _Restrictor(object):
    """Coefficients of G(beta + z D) as polynomials in the direction D, so that restricting to a line is an
    evaluation"""
    def __init__(self, generators, beta):
        ring = generators[0].ring
        field = ring.field
        self._field = field
        self._beta = tuple(field(value) for value in beta)
        direction_ring = PolynomialRing(field, tuple("D{}".format(i) for i in range(ring.nvars)) + ("z",))
        z = direction_ring.gen("z")
        mapping = {
            name: direction_ring.constant(b) + direction_ring.gen("D{}".format(i)) * z
            for i, (name, b) in enumerate(zip(ring.variables, self._beta))
        }
        self._polar = list()
        self._degrees = list()
        for g in generators:
            composed = g.compose(direction_ring, mapping)
            self._polar.append(composed.coefficients("z"))
            self._degrees.append(g.total_degree())

    def forms(self, direction):
        direction = [self._field(value) for value in direction]
        _check_line(self._beta, direction, self._field)
        values = {"D{}".format(i): value for i, value in enumerate(direction)}
        values["z"] = self._field.zero
        return [
            BinaryForm(UnivariatePolynomial(self._field, [c.evaluate(values) for c in polar]), degree)
            for polar, degree in zip(self._polar, self._degrees)
        ]


class ParametricVariety(object):
    """The image of P^m under a map given by N+1 homogeneous forms f_0..f_N of a common degree in s_0..s_m"""
    def __init__(self, components, name=None):
        """
        Parameters
        ----------
        components: list (subtype: Polynomial)
            The forms f_0..f_N, in a common ring with m+1 variables
        name: str (default: None)
            Name used in reports
        """
        components = list(components)
        if len(components) < 3:
            raise DegenerateVarietyException("A parametric variety needs at least 3 components.")
        ring = components[0].ring
        degrees = set()
        for index, f in enumerate(components):
            if f.ring != ring:
                raise DegenerateVarietyException("Components live in different rings.")
            if not f.is_homogeneous():
                raise DegenerateVarietyException("Component {} ({}) is not homogeneous.".format(index, f))
            if not f.is_zero():
                degrees.add(f.total_degree())
        if len(degrees) != 1:
            raise DegenerateVarietyException("Components must be nonzero forms of a common degree.")
        if ring.nvars - 1 >= len(components) - 1:
            raise DegenerateVarietyException("Source dimension {} too large for P^{}.".format(ring.nvars - 1, len(components) - 1))
        self._components = components
        self._degree = degrees.pop()
        self._name = name

    @property
    def components(self):
        return list(self._components)

    @property
    def ring(self):
        return self._components[0].ring

    @property
    def field(self):
        return self.ring.field

    @property
    def n(self):
        return len(self._components) - 1

    @property
    def m(self):
        """Dimension of the source projective space"""
        return self.ring.nvars - 1

    @property
    def dimension(self):
        return self.m

    @property
    def codimension(self):
        return self.n - self.m

    @property
    def map_degree(self):
        return self._degree

    @property
    def name(self):
        return self._name

    def over_field(self, field):
        return ParametricVariety([f.change_field(field) for f in self._components], self._name)

    def image(self, source):
        return tuple(f.evaluate(list(source)) for f in self._components)

    def pullback(self, forms):
        """Pull back linear forms (coefficient vectors) on P^N to forms on the source"""
        ring = self.ring
        pulled = list()
        for coefficients in forms:
            result = ring.zero
            for c, f in zip(coefficients, self._components):
                if c:
                    result = result + f.scale(c)
            pulled.append(result)
        return pulled

    def validate(self, field=None):
        """Exhaustive checks over a finite field: no base points and injectivity on the rational points

        Raises
        ------
        DegenerateVarietyException: if a source point maps to zero or two source points share their image
        """
        variety = self if field is None else self.over_field(field)
        field = variety.field
        seen = dict()
        for source in projective_points(field, variety.m):
            image = variety.image(source)
            if not any(image):
                raise DegenerateVarietyException("Base point {} over {}.".format(list(map(str, source)), field.name))
            key = normalize_point(image, field)
            if key in seen:
                raise DegenerateVarietyException("Points {} and {} have the same image over {}.".format(
                    list(map(str, seen[key])), list(map(str, source)), field.name))
            seen[key] = source
        return True

    def line_forms(self, beta, direction):
        """Coefficient vectors of N-1 independent linear forms vanishing on the line through beta and direction"""
        field = self.field
        _check_line(beta, direction, field)
        return kernel([list(beta), list(direction)], field)

    def point_forms(self, beta):
        """Coefficient vectors of N independent linear forms vanishing at beta"""
        return kernel([list(beta)], self.field)

    def to_dict(self):
        return {
            "type": "parametric",
            "field": self.field.name,
            "variables": list(self.ring.variables),
            "parametrization": [str(f) for f in self._components]
        }
