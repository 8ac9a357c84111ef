# -*- coding: utf-8 -*-
"""Line charts, normalization of generator systems along a line and linearization modulo the square of the
maximal ideal.

Ambient chart coordinates are (x_1, ..., x_{N-1}, z): the base line L is {x = 0} and z is its affine
coordinate. Nearby lines are x_i = u_i z + v_i (Grassmann chart) or, for the lines through the point
(0, ..., 0, b) of L, x_i = u_i (z - b) (star chart).
"""
from .errors import LineContainedException, NormalizationException, InvalidLineException, \
    UnknownVariableException
from .hilbert import OHPresentation
from .linalg import rank, complete_basis
from .poly import PolynomialRing
from .univariate import xgcd_many
from .util import make_rng, RNG_SHUFFLE, RNG_COMBINATIONS

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


def ambient_variables(n):
    """Chart coordinates (x_1, ..., x_{N-1}, z) of P^N"""
    return tuple("x{}".format(i + 1) for i in range(n - 1)) + ("z",)


class LineChart(object):
    """Coordinates on the lines near L = {x = 0} in P^N"""
    def __init__(self, n, star=None):
        """
        Parameters
        ----------
        n: int
            Dimension N of the ambient projective space (N >= 2)
        star: field element (default: None)
            The z-coordinate b of the point the lines go through in star mode, None for the Grassmann chart
        """
        if n < 2:
            raise ValueError("Lines need an ambient dimension of at least 2, got {}.".format(n))
        self._n = n
        self._star = star

    @property
    def n(self):
        return self._n

    @property
    def star(self):
        return self._star

    @property
    def is_star(self):
        return self._star is not None

    @property
    def x_variables(self):
        return ambient_variables(self._n)[:-1]

    @property
    def u_variables(self):
        return tuple("u{}".format(i + 1) for i in range(self._n - 1))

    @property
    def v_variables(self):
        return tuple("v{}".format(i + 1) for i in range(self._n - 1))

    @property
    def chart_variables(self):
        if self.is_star:
            return self.u_variables
        return self.u_variables + self.v_variables

    def ambient_ring(self, field):
        return PolynomialRing(field, ambient_variables(self._n))

    def chart_ring(self, field):
        return PolynomialRing(field, self.chart_variables + ("z",))


def pull_to_chart(g, chart):
    """Substitute x_i = u_i z + v_i (x_i = u_i (z - b) in star mode) in a polynomial of (x, z)

    Raises
    ------
    UnknownVariableException: if g involves variables other than x_1..x_{N-1}, z
    """
    allowed = set(ambient_variables(chart.n))
    for name in g.variables_used():
        if name not in allowed:
            raise UnknownVariableException("Variable '{}' is not a chart coordinate of P^{}.".format(name, chart.n))
    ring = chart.chart_ring(g.field)
    z = ring.gen("z")
    if chart.is_star:
        shifted = z - ring.constant(chart.star)
        mapping = {x: ring.gen(u) * shifted for x, u in zip(chart.x_variables, chart.u_variables)}
    else:
        mapping = {x: ring.gen(u) * z + ring.gen(v)
                   for x, u, v in zip(chart.x_variables, chart.u_variables, chart.v_variables)}
    mapping = {x: image for x, image in mapping.items() if x in g.ring}
    if "z" not in g.ring:
        raise UnknownVariableException("The line coordinate 'z' is missing from {!r}.".format(g.ring))
    return g.compose(ring, mapping)


def specialize_to_star(presentation, b):
    """Restrict the equations of a Grassmann chart presentation to the lines through (0, .., 0, b): v_i = -b u_i

    Parameters
    ----------
    presentation: OHPresentation
        Equations in (u, v, z_1..z_r)
    b: field element
        The z-coordinate of the point

    Returns
    -------
    presentation: OHPresentation
        Equations in (u, z_1..z_r)
    """
    ring = presentation.ring
    v_variables = tuple(v for v in presentation.chart_variables if v.startswith("v"))
    target = ring.drop(*v_variables)
    b = target.field(b)
    mapping = {v: target.gen("u" + v[1:]).scale(-b) for v in v_variables}
    equations = [equation.compose(target, mapping) for equation in presentation.equations]
    return OHPresentation(target, equations, presentation.profile, presentation.n_generators,
                          presentation.marked_variables)


class LinearizedEquation(object):
    """g(u z + v, z) = p(z) + sum_i (u_i z + v_i) q_i(z) modulo the square of (u, v)"""
    def __init__(self, p, q):
        self._p = p
        self._q = tuple(q)

    @property
    def p(self):
        return self._p

    @property
    def q(self):
        return self._q


def _x_variables(g, variable):
    return tuple(v for v in g.ring.variables if v != variable)


def restriction(g, variable="z"):
    """g(0, z) as a univariate polynomial"""
    return g.substitute({x: 0 for x in _x_variables(g, variable)}).as_univariate(variable)


def linearize(g, variable="z"):
    """p = g(0, z) and q_i = dg/dx_i (0, z), the x_i being the ring variables other than z"""
    x_variables = _x_variables(g, variable)
    zeros = {x: 0 for x in x_variables}
    q = [g.derivative(x).substitute(zeros).as_univariate(variable) for x in x_variables]
    return LinearizedEquation(restriction(g, variable), q)


class NormalizedSystem(object):
    """Generators g_1..g_c in (x, z) with g_1(0, z) = d monic and g_s(0, z) = 0 for s >= 2"""
    def __init__(self, generators, d, points, variable="z"):
        self._generators = list(generators)
        self._d = d
        self._points = tuple(points)
        self._variable = variable

    @property
    def generators(self):
        return list(self._generators)

    @property
    def d(self):
        return self._d

    @property
    def points(self):
        return self._points

    @property
    def variable(self):
        return self._variable

    @property
    def c(self):
        return len(self._generators)

    @property
    def n(self):
        """Dimension of the ambient projective space"""
        return self._generators[0].ring.nvars

    @property
    def field(self):
        return self._generators[0].field

    @property
    def restrictions(self):
        return [restriction(g, self._variable) for g in self._generators]

    def linearized(self):
        return [linearize(g, self._variable) for g in self._generators]


def ambient_jacobian_rank(generators, point, variable="z"):
    """Rank of the Jacobian matrix of the generators at (x = 0, z = point)"""
    ring = generators[0].ring
    values = {v: 0 for v in ring.variables}
    values[variable] = point
    field = getattr(point, "field", ring.field)
    matrix = [[g.derivative(v).evaluate(values) for v in ring.variables] for g in generators]
    return rank(matrix, field)


def normalize_generators(generators, points, variable="z", attempts=8, seed=0):
    """Recombine generators so that only the first one meets the line {x = 0}

    With d = gcd(phi_1, .., phi_c) = sum_s a_s phi_s (phi_s = g_s(0, z)), the new system is
    g_1' = sum_s a_s g_s and g_s' = g_s - (phi_s / d) g_1' for s != j, the pivot j being the first index whose
    cofactor a_j vanishes at no marked point. The recombination is accepted when it has Jacobian rank c at every
    marked point; otherwise the generator order is shuffled and the construction retried.

    Parameters
    ----------
    generators: list (subtype: Polynomial)
        Generators in (x_1, .., x_{N-1}, z)
    points: sequence
        Marked points (z-coordinates) where the system must remain a local complete intersection
    attempts: int
        Number of generator orders to try
    seed: int
        Seed of the shuffles

    Raises
    ------
    LineContainedException: if all restrictions vanish
    NormalizationException: if no order gives a valid recombination
    """
    generators = list(generators)
    restrictions = [restriction(g, variable) for g in generators]
    if all(phi.is_zero() for phi in restrictions):
        raise LineContainedException("The line {x = 0} lies on every generator.")
    order = list(range(len(generators)))
    for attempt in range(attempts):
        if attempt > 0:
            order = [int(i) for i in make_rng(seed, RNG_SHUFFLE, attempt).permutation(len(generators))]
        system = _recombine([generators[i] for i in order], [restrictions[i] for i in order], variable, points)
        if all(ambient_jacobian_rank(system.generators, a, variable) == len(generators) for a in points):
            return NormalizedSystem(system.generators, system.d, points, variable)
    raise NormalizationException("No valid recombination of the generators after {} attempts.".format(attempts))


def _recombine(generators, restrictions, variable, points=()):
    """The change of generators has determinant +/- a_j where j is the pivot, the first generator whose
    cofactor vanishes at none of the points"""
    ring = generators[0].ring
    d, cofactors = xgcd_many(restrictions)
    pivot = next((j for j, a in enumerate(cofactors) if not a.is_zero() and all(a.evaluate(p) for p in points)), 0)
    first = ring.zero
    for a, g in zip(cofactors, generators):
        if not a.is_zero():
            first = first + a.to_polynomial(ring, variable) * g
    others = list()
    for j, (phi, g) in enumerate(zip(restrictions, generators)):
        if j == pivot:
            continue
        quotient = phi.exact_div(d)
        others.append(g - quotient.to_polynomial(ring, variable) * first)
    return NormalizedSystem([first] + others, d, (), variable)


def local_complete_intersection(generators, c, points, variable="z", attempts=8, seed=0):
    """Choose c combinations of the generators with Jacobian rank c at every marked point

    When there are exactly c generators they are returned unchanged. Otherwise random combinations with
    coefficients in the field are tried.

    Raises
    ------
    NormalizationException: if no combination has full rank at all the points
    """
    generators = list(generators)
    if len(generators) == c:
        return generators
    if len(generators) < c:
        raise ValueError("Expected at least {} generators, got {}.".format(c, len(generators)))
    field = generators[0].field
    for attempt in range(attempts):
        rng = make_rng(seed, RNG_COMBINATIONS, attempt)
        combinations = list()
        for _ in range(c):
            combination = generators[0].ring.zero
            for g in generators:
                combination = combination + g.scale(_small_element(field, rng))
            combinations.append(combination)
        if all(ambient_jacobian_rank(combinations, a, variable) == c for a in points):
            return combinations
    raise NormalizationException("No local complete intersection among {} random combinations.".format(attempts))


def _small_element(field, rng):
    if field.is_finite:
        return field.random_element(rng)
    return field(int(rng.integers(-9, 10)))


class CoordinateChange(object):
    """Generators of a variety written in chart coordinates adapted to a line

    The point with chart coordinates (x, z) is beta + sum_i x_i E_i + z P, so the line is {x = 0}, beta sits at
    z = 0 and P, the point at infinity of the chart, is off the variety.
    """
    def __init__(self, generators, beta, infinity, basis):
        self._generators = generators
        self._beta = tuple(beta)
        self._infinity = tuple(infinity)
        self._basis = [tuple(vector) for vector in basis]

    @property
    def generators(self):
        return list(self._generators)

    @property
    def beta(self):
        return self._beta

    @property
    def infinity(self):
        return self._infinity

    @property
    def basis(self):
        return list(self._basis)


def change_coordinates(generators, beta, direction):
    """Write homogeneous generators in chart coordinates adapted to the line through beta and direction

    Parameters
    ----------
    generators: list (subtype: Polynomial)
        Homogeneous generators in X_0..X_N
    beta: sequence
        A point of the line (z = 0 in the chart)
    direction: sequence
        Another point of the line

    Returns
    -------
    change: CoordinateChange
        The generators in the ring (x_1..x_{N-1}, z)

    Raises
    ------
    InvalidLineException: if the points do not span a line, or no rational point of the line is off the
        variety
    LineContainedException: if the line lies on the variety
    """
    ring = generators[0].ring
    field = ring.field
    n = ring.nvars - 1
    beta = [field(value) for value in beta]
    direction = [field(value) for value in direction]
    if rank([beta, direction], field) != 2:
        raise InvalidLineException("The points {} and {} do not span a line.".format(beta, direction))
    infinity = None
    candidates = field.elements() if field.is_finite else (field(i) for i in range(64))
    for scalar in candidates:
        point = [d + scalar * b for d, b in zip(direction, beta)]
        if any(g.evaluate(point) for g in generators):
            infinity = point
            break
    if infinity is None:
        if _line_contained(generators, beta, direction):
            raise LineContainedException("The line through {} and {} lies on the variety.".format(beta, direction))
        raise InvalidLineException("No rational point of the line is off the variety.")
    completion = complete_basis([beta, infinity], field)
    basis = list()
    for index in completion:
        vector = [field.zero] * (n + 1)
        vector[index] = field.one
        basis.append(vector)
    chart = PolynomialRing(field, ambient_variables(n))
    coordinates = list()
    for i in range(n + 1):
        value = chart.constant(beta[i]) + chart.gen("z").scale(infinity[i])
        for x, vector in zip(chart.variables[:-1], basis):
            if vector[i]:
                value = value + chart.gen(x).scale(vector[i])
        coordinates.append(value)
    mapping = dict(zip(ring.variables, coordinates))
    return CoordinateChange([g.compose(chart, mapping) for g in generators], beta, infinity, basis)


def _line_contained(generators, beta, direction):
    ring = PolynomialRing(generators[0].field, ("z",))
    z = ring.gen("z")
    point = [ring.constant(b) + z.scale(d) for b, d in zip(beta, direction)]
    return all(g.compose(ring, dict(zip(g.ring.variables, point))).is_zero() for g in generators)
