# -*- coding: utf-8 -*-
"""Zero-dimensional systems of forms on the projective plane over a prime field: geometric points by
resultant elimination, local lengths by truncation of the local algebra.

A system is first moved to generic coordinates (s = A s') where no solution lies on the line s'_0 = 0 and the
projection to the x = s'_1 / s'_0 axis separates the solutions. The x-coordinates of the solutions are the
roots of gcd(Res_y(F, G), Res_y(F, H)) for random combinations F, G, H of the forms. Each root is found in the
field it generates, so that every Frobenius orbit of solutions is represented once together with its size.
"""
from .arith import ExtensionField, make_extension
from .errors import NonZeroDimensionalException, MultiplicityTooLargeException, GenericityException
from .linalg import rank, determinant
from .poly import PolynomialRing
from .univariate import UnivariatePolynomial, BinaryForm, binary_gcd, gcd, resultant, roots, \
    squarefree_decomposition, distinct_degree_factorization, factor_profile, element_key
from .util import make_rng, RNG_COORDINATES, RNG_COMBINATIONS

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

MAX_LENGTH_DEGREE = 8


class PlanePoint(object):
    """A Frobenius orbit of solutions, represented by one of its points"""
    def __init__(self, coordinates, degree, length):
        """
        Parameters
        ----------
        coordinates: tuple
            Homogeneous coordinates of the representative, in the field it generates
        degree: int
            Number of conjugate points in the orbit
        length: int
            Length of the local algebra at each point of the orbit
        """
        self._coordinates = tuple(coordinates)
        self._degree = degree
        self._length = length

    @property
    def coordinates(self):
        return self._coordinates

    @property
    def degree(self):
        return self._degree

    @property
    def length(self):
        return self._length

    @property
    def field(self):
        return getattr(self._coordinates[0], "field", None)

    def __repr__(self):
        return "PlanePoint({}, degree={}, length={})".format([str(c) for c in self._coordinates], self._degree, self._length)


def plane_points(forms, seed=0, attempts=8, max_degree=MAX_LENGTH_DEGREE):
    """Geometric solutions of a system of forms of a common degree in three variables

    Parameters
    ----------
    forms: list (subtype: Polynomial)
        Homogeneous polynomials in 3 variables over a prime field, all of the same degree
    seed: int
        Seed of the coordinate changes and combinations
    attempts: int
        Number of coordinate changes to try
    max_degree: int
        Truncation degree cap of the local length computation

    Returns
    -------
    points: list (subtype: PlanePoint)
        One entry per Frobenius orbit of solutions

    Raises
    ------
    NonZeroDimensionalException: if the forms have a common curve
    MultiplicityTooLargeException: if a local length does not stabilize under the cap
    GenericityException: if no attempt gives generic coordinates
    """
    forms = [f for f in forms if not f.is_zero()]
    if len(forms) == 0:
        raise NonZeroDimensionalException("All the forms vanish identically.")
    if len(forms) == 1 or len({f.total_degree() for f in forms}) != 1:
        if len(forms) == 1 and forms[0].total_degree() > 0:
            raise NonZeroDimensionalException("A single form defines a curve.")
        if len(forms) == 1:
            return []
        raise ValueError("The forms must have a common degree.")
    if forms[0].total_degree() == 0:
        return []
    ring = forms[0].ring
    field = ring.field
    vanishing = 0
    for attempt in range(attempts):
        rng = make_rng(seed, RNG_COORDINATES, attempt)
        system = _GenericSystem(forms, field, rng, make_rng(seed, RNG_COMBINATIONS, attempt))
        if not system.valid:
            continue
        if system.curve:
            vanishing += 1
            continue
        points = system.solve(max_degree)
        if points is not None:
            return points
    if vanishing > 0:
        raise NonZeroDimensionalException("The forms share a curve of solutions.")
    raise GenericityException("No generic coordinates found after {} attempts.".format(attempts))


def _random_invertible(field, rng):
    while True:
        matrix = [[field.random_element(rng) for _ in range(3)] for _ in range(3)]
        if determinant(matrix, field):
            return matrix


class _GenericSystem(object):
    """The forms in random coordinates, dehomogenized at s'_0 = 1"""
    def __init__(self, forms, field, rng, combination_rng):
        self._field = field
        ring = forms[0].ring
        self._matrix = _random_invertible(field, rng)
        mapping = {
            name: sum((ring.gen(other).scale(self._matrix[i][j]) for j, other in enumerate(ring.variables)), ring.zero)
            for i, name in enumerate(ring.variables)
        }
        transformed = [f.compose(ring, mapping) for f in forms]
        s0, s1, s2 = ring.variables
        self.valid = True
        self.curve = False

        affine_ring = PolynomialRing(field, ("x", "y"))
        affine = [f.compose(affine_ring, {s0: affine_ring.one, s1: affine_ring.gen("x"), s2: affine_ring.gen("y")})
                  for f in transformed]
        self._affine = affine
        degree = forms[0].total_degree()
        combinations = list()
        for _ in range(3):
            combination = affine_ring.zero
            for f in affine:
                combination = combination + f.scale(field.random_element(combination_rng))
            combinations.append(combination)
        first = _in_y(combinations[0], field)
        if len(first) != degree + 1 or not first[-1].is_constant():
            self.valid = False
            return
        resultants = [resultant(first, _in_y(other, field)) for other in combinations[1:]]
        nonzero = [r for r in resultants if not r.is_zero()]
        if len(nonzero) == 0:
            self.curve = True
            return
        eliminant = nonzero[0]
        for r in nonzero[1:]:
            eliminant = gcd(eliminant, r)
        self._eliminant = eliminant

        # no solution on the line s'_0 = 0
        at_infinity = [BinaryForm(f.substitute({s0: 0, s1: 1}).as_univariate(s2), f.total_degree())
                       for f in transformed]
        if all(form.is_zero() for form in at_infinity) or binary_gcd(*at_infinity).degree > 0:
            self.valid = False

    def solve(self, max_degree):
        """The solution orbits, None if the projection does not separate the solutions"""
        if self._eliminant.degree <= 0:
            return []
        radical = UnivariatePolynomial(self._field, [1], variable="x")
        for factor, _ in squarefree_decomposition(self._eliminant):
            radical = radical * factor
        points = list()
        for block, degree in distinct_degree_factorization(radical):
            for x0 in _orbit_representatives(block, degree, self._field):
                found = self._fiber(x0)
                if found is False:
                    return None
                if found is None:
                    continue
                y0 = found
                length = local_length(self._affine, (x0, y0), max_degree)
                target = getattr(x0, "field", self._field)
                image = [target(row[0]) + target(row[1]) * x0 + target(row[2]) * y0 for row in self._matrix]
                points.append(PlanePoint(image, degree, length))
        return points

    def _fiber(self, x0):
        """The y-coordinate of the unique solution over x0, None if there is none, False if there are several"""
        field = getattr(x0, "field", self._field)
        fiber = UnivariatePolynomial(field, [], variable="y")
        for f in self._affine:
            restricted = UnivariatePolynomial(field, [c.evaluate(x0) for c in _in_y(f, self._field)], variable="y")
            if not restricted.is_zero():
                fiber = restricted.monic() if fiber.is_zero() else gcd(fiber, restricted)
        if fiber.is_zero():
            return False
        if fiber.degree <= 0:
            return None
        profile = factor_profile(fiber)
        if len(profile) != 1 or profile[0][0] != 1:
            return False
        root_of = fiber
        for factor, _ in squarefree_decomposition(fiber):
            root_of = factor
        return -root_of[0] / root_of[1]


def _in_y(f, field):
    """Coefficients of f(x, y) in y, as univariate polynomials in x"""
    return [c.substitute({"y": 0}).as_univariate("x").change_field(field) for c in f.coefficients("y")]


def _orbit_representatives(block, degree, field):
    """One root per irreducible factor of a product of distinct irreducible factors of a given degree"""
    if degree == 1:
        return roots(block)
    if block.degree == degree:
        extension = ExtensionField(field.p, [c.residue for c in block.monic().coefficients], check=False)
        return [extension.generator]
    extension = make_extension(field.p, degree)
    representatives, seen = list(), set()
    for root in roots(block, extension):
        if root.coordinates in seen:
            continue
        representatives.append(root)
        conjugate = root
        for _ in range(degree):
            seen.add(conjugate.coordinates)
            conjugate = conjugate ** field.p
    return sorted(representatives, key=element_key)


def local_length(polynomials, point, max_degree=MAX_LENGTH_DEGREE):
    """Length of the local algebra of the ideal of bivariate polynomials at a point, computed as the stable
    value of dim K[X, Y] / (I + m^t) for t = 1, 2, ...

    Parameters
    ----------
    polynomials: list (subtype: Polynomial)
        Generators of the ideal, in two variables
    point: tuple
        The point, coordinates in the field K they generate
    max_degree: int
        Largest truncation degree

    Raises
    ------
    MultiplicityTooLargeException: if the dimension has not stabilized at max_degree
    """
    field = getattr(point[0], "field", None) or getattr(point[1], "field", None) or polynomials[0].field
    ring = polynomials[0].ring
    local_ring = PolynomialRing(field, ring.variables)
    shifted = list()
    for f in polynomials:
        g = f.change_field(field) if field != f.field else f
        mapping = {name: local_ring.gen(name) + local_ring.constant(value) for name, value in zip(ring.variables, point)}
        shifted.append({e: c for e, c in g.compose(local_ring, mapping).items()})
    previous = None
    for t in range(1, max_degree + 1):
        current = _truncated_dimension(shifted, t, field)
        if previous is not None and current == previous:
            return current
        previous = current
    raise MultiplicityTooLargeException("The local length did not stabilize up to degree {}.".format(max_degree))


def _truncated_dimension(polynomials, t, field):
    monomials = [(a, d - a) for d in range(t) for a in range(d, -1, -1)]
    index = {m: i for i, m in enumerate(monomials)}
    if any(f.get((0, 0)) for f in polynomials):
        return 0
    vectors = list()
    for f in polynomials:
        for (a, b) in monomials:
            vector = [field.zero] * len(monomials)
            nonzero = False
            for (e0, e1), c in f.items():
                target = (e0 + a, e1 + b)
                if target in index:
                    vector[index[target]] = vector[index[target]] + c
                    nonzero = True
            if nonzero:
                vectors.append(vector)
    return len(monomials) - (rank(vectors, field) if len(vectors) > 0 else 0)


def polynomial_determinant(matrix, ring):
    """Determinant of a square matrix of polynomials by cofactor expansion"""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    result = ring.zero
    for column in range(size):
        entry = matrix[0][column]
        if entry.is_zero():
            continue
        minor = [row[:column] + row[column + 1:] for row in matrix[1:]]
        term = entry * polynomial_determinant(minor, ring)
        result = result + term if column % 2 == 0 else result - term
    return result
