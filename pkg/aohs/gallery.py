# -*- coding: utf-8 -*-
"""Built-in example varieties, the census of varieties given by a parametrization and the JSON input
documents."""
import itertools
import json
import re

from .arith import QQ, make_extension, is_prime
from .census import LineCensus, CONTAINED, profile_from_forms
from .chart import ambient_variables
from .elimination import plane_points, polynomial_determinant
from .errors import UnknownBuiltinException, DegenerateVarietyException, InputFormatException, \
    InvalidBuildingException, NonZeroDimensionalException, GenericityException, PolynomialParseException, \
    NotPrimeException
from .linalg import rank, kernel, determinant
from .logging import SilentLogger
from .poly import PolynomialRing, Polynomial
from .univariate import BinaryForm, binary_gcd
from .util import make_rng, RNG_PROJECTION, RNG_RANDOM_CI
from .variety import ImplicitVariety, ParametricVariety, projective_variables

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

DEFAULT_SEED = 42


def _binary(f):
    s0, s1 = f.ring.variables
    return BinaryForm(f.substitute({s0: 1}).as_univariate(s1), f.total_degree())


def pullback_profile(pulled, m, seed=0):
    """Geometric multiplicity profile of the common zeros of forms on P^1 or P^2, CONTAINED when they share a
    curve (m = 2) or all vanish

    Raises
    ------
    MultiplicityTooLargeException: if a local length does not stabilize
    """
    if m == 1:
        return profile_from_forms([_binary(f) for f in pulled])
    try:
        points = plane_points(pulled, seed=seed)
    except NonZeroDimensionalException:
        return CONTAINED
    parts = [point.length for point in points for _ in range(point.degree)]
    return tuple(sorted(parts, reverse=True))


def parametric_line_profile(variety, beta, direction, seed=0):
    """Geometric multiplicity profile of the intersection of a parametrized curve or surface with the line
    through beta and direction, read on the pullback of the linear forms vanishing on the line

    Raises
    ------
    InvalidLineException: if direction is zero or proportional to beta
    """
    field = variety.field
    forms = variety.line_forms([field(v) for v in beta], [field(v) for v in direction])
    return pullback_profile(variety.pullback(forms), variety.m, seed=seed)


def tangency_scheme(variety, beta, seed=0):
    """The source points s where beta lies on the tangent space of the image at f(s): the maximal minors of the
    matrix [beta | df/ds_0 | .. | df/ds_m] vanish

    Returns
    -------
    count: int
        Number of geometric points of the scheme
    reduced: bool
        True if every point has length 1

    Raises
    ------
    GenericityException: if the scheme is not finite
    """
    ring = variety.ring
    columns = [[ring.constant(b) for b in beta]]
    for s in ring.variables:
        columns.append([f.derivative(s) for f in variety.components])
    rows = [[column[i] for column in columns] for i in range(variety.n + 1)]
    minors = [polynomial_determinant([rows[i] for i in chosen], ring)
              for chosen in itertools.combinations(range(variety.n + 1), variety.m + 2)]
    minors = [minor for minor in minors if not minor.is_zero()]
    if len(minors) == 0:
        raise GenericityException("The tangency scheme is not finite.")
    if variety.m == 1:
        common = binary_gcd(*[_binary(minor) for minor in minors])
        entries = common.factor_profile()
        return sum(d for d, _ in entries), all(multiplicity == 1 for _, multiplicity in entries)
    try:
        points = plane_points(minors, seed=seed)
    except NonZeroDimensionalException:
        raise GenericityException("The tangency scheme is not finite.")
    return sum(point.degree for point in points), all(point.length == 1 for point in points)


class _ParametricLineClassifier(object):
    def __init__(self, variety, beta, seed):
        self._variety = variety
        self._beta = tuple(beta)
        self._seed = seed

    def classify(self, direction):
        forms = self._variety.line_forms(self._beta, direction)
        return pullback_profile(self._variety.pullback(forms), self._variety.m, seed=self._seed)


class ParametricCensus(LineCensus):
    """Census for a curve or a surface given by a parametrization. Profiles are computed on the source, so that
    points of the image are counted geometrically. When N = 2m the geometric number of lines tangent to the
    image through the base point is added under the key '2'."""
    def __init__(self, variety, prime, **kwargs):
        """
        Raises
        ------
        DegenerateVarietyException: if the source is not P^1 or P^2, or if the parametrization has base points
            or is not injective on the rational points
        """
        if kwargs.get("extension", 1) != 1:
            raise InvalidBuildingException("Parametric censuses enumerate rational lines only.")
        super(ParametricCensus, self).__init__(variety, prime, **kwargs)
        if self._variety.m not in {1, 2}:
            raise DegenerateVarietyException("Parametric censuses handle curves and surfaces, got a source of "
                                             "dimension {}.".format(self._variety.m))
        self._variety.validate()

    @property
    def codimension(self):
        return self._variety.codimension

    @property
    def units_per_line(self):
        return self._prime ** self._variety.m

    def contains(self, beta):
        pulled = self._variety.pullback(self._variety.point_forms(self._point(beta)))
        profile = pullback_profile(pulled, self._variety.m, seed=self._seed)
        return profile == CONTAINED or len(profile) > 0

    def line_classifier(self, beta):
        return _ParametricLineClassifier(self._variety, self._point(beta), self._seed)

    def geometric_counts(self, beta, timing):
        if self.n != 2 * self._variety.m:
            return dict()
        with timing.cm(LineCensus.TIMING_TANGENCY):
            try:
                count, reduced = tangency_scheme(self._variety, self._point(beta), seed=self._seed)
            except GenericityException:
                count, reduced = None, False
        return {"2": count if reduced else None}


def parametric_census(variety, beta, prime, **kwargs):
    """Classify all the lines through beta over F_p for a parametrized variety (see LineCensus.count)"""
    return ParametricCensus(variety, prime, **kwargs).count(beta)


def _projective_ring(n, field=QQ):
    return PolynomialRing(field, projective_variables(n))


def _implicit(n, texts, codimension, name):
    ring = _projective_ring(n)
    return ImplicitVariety([ring.parse(text) for text in texts], codimension=codimension, name=name)


def twisted_cubic(**kwargs):
    return _implicit(3, ["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"], 2, "twisted-cubic")


def rational_normal_quartic(**kwargs):
    ring = _projective_ring(4)
    gens = ring.gens
    minors = [gens[i] * gens[j + 1] - gens[j] * gens[i + 1] for i, j in itertools.combinations(range(4), 2)]
    return ImplicitVariety(minors, codimension=3, name="rational-normal-quartic")


def parabola(**kwargs):
    return _implicit(2, ["X0*X2 - X1^2"], 1, "parabola")


def _veronese_monomials(ring):
    s = ring.gens
    return [s[i] * s[j] for i, j in itertools.combinations_with_replacement(range(3), 2)]


def veronese_p5(**kwargs):
    ring = PolynomialRing(QQ, ("s0", "s1", "s2"))
    return ParametricVariety(_veronese_monomials(ring), name="veronese-p5")


def _projection_issue(matrix, field):
    """Why a 5 x 6 matrix does not project the Veronese surface isomorphically, None if it does"""
    rows = [[field(v) for v in row] for row in matrix]
    if rank(rows, field) < 5:
        return "rank deficient over {}".format(field.name)
    c = kernel(rows, field)[0]
    symmetric = [[c[0], c[1], c[2]], [c[1], c[3], c[4]], [c[2], c[4], c[5]]]
    if not determinant(symmetric, field):
        return "center on the secant variety over {}".format(field.name)
    return None


def projected_veronese_p4(seed=DEFAULT_SEED, primes=(), logger=SilentLogger(), attempts=20):
    """Isomorphic projection of the Veronese surface to P^4 by a seeded 5 x 6 integer matrix, valid over QQ
    and modulo each of the given primes

    Raises
    ------
    DegenerateVarietyException: if no valid matrix is drawn
    """
    ring = PolynomialRing(QQ, ("s0", "s1", "s2"))
    monomials = _veronese_monomials(ring)
    fields = [QQ] + [make_extension(p, 1) for p in primes]
    for attempt in range(attempts):
        rng = make_rng(seed, RNG_PROJECTION, attempt)
        matrix = [[int(v) for v in row] for row in rng.integers(-3, 4, size=(5, 6))]
        issue = next((found for found in (_projection_issue(matrix, field) for field in fields) if found is not None), None)
        if issue is None:
            logger.info("Projected Veronese (seed {}, attempt {}): matrix {}.".format(seed, attempt, matrix))
            components = list()
            for row in matrix:
                component = ring.zero
                for coefficient, monomial in zip(row, monomials):
                    component = component + monomial.scale(coefficient)
                components.append(component)
            return ParametricVariety(components, name="projected-veronese-p4")
        logger.warning("Projected Veronese: matrix {} rejected ({}), resampling.".format(matrix, issue))
    raise DegenerateVarietyException("No valid projection matrix after {} attempts.".format(attempts))


def random_complete_intersection(n, degrees, seed=0):
    """Complete intersection of forms of the given degrees in P^n with pseudorandom integer coefficients in
    [-3, 3]"""
    degrees = tuple(degrees)
    if not 1 <= len(degrees) <= n - 1 or any(d < 1 for d in degrees):
        raise DegenerateVarietyException("Invalid complete intersection type {} in P^{}.".format(degrees, n))
    ring = _projective_ring(n)
    rng = make_rng(seed, RNG_RANDOM_CI, n, *degrees)
    generators = list()
    for degree in degrees:
        while True:
            terms = dict()
            for combination in itertools.combinations_with_replacement(range(n + 1), degree):
                exponents = [0] * (n + 1)
                for i in combination:
                    exponents[i] += 1
                terms[tuple(exponents)] = int(rng.integers(-3, 4))
            generator = Polynomial(ring, terms)
            if not generator.is_zero():
                break
        generators.append(generator)
    name = "random-ci:{}:{}:{}".format(n, ",".join(str(d) for d in degrees), seed)
    return ImplicitVariety(generators, name=name)


_RANDOM_CI = re.compile(r"^random-ci:(\d+):(\d+(?:,\d+)*):(\d+)$")

BUILTINS = {
    "twisted-cubic": ("twisted cubic curve in P^3 (three quadrics, codimension 2)", twisted_cubic),
    "rational-normal-quartic": ("rational normal quartic curve in P^4 (six quadrics, codimension 3)",
                                rational_normal_quartic),
    "parabola": ("conic X0*X2 - X1^2 in P^2", parabola),
    "veronese-p5": ("Veronese surface in P^5 (parametrized)", veronese_p5),
    "projected-veronese-p4": ("isomorphic projection of the Veronese surface to P^4 (parametrized, seeded)",
                              projected_veronese_p4),
    "random-ci:N:d1,d2,...:seed": ("pseudorandom complete intersection of the given degrees in P^N", None)
}

CHART_FORMS = {
    "parabola": (2, ["x1 - z^2"]),
    "twisted-cubic": (3, ["x1 - z^2", "x2 - z*x1"]),
    "rational-normal-quartic": (4, ["x1 - z^2", "x2 - z*x1", "x3 - z*x2"])
}


def names():
    return sorted(BUILTINS.keys())


def builtin(name, seed=DEFAULT_SEED, primes=(), logger=SilentLogger()):
    """A built-in variety by name

    Raises
    ------
    UnknownBuiltinException: if the name is unknown, the message lists the choices
    """
    match = _RANDOM_CI.match(name)
    if match is not None:
        degrees = [int(d) for d in match.group(2).split(",")]
        return random_complete_intersection(int(match.group(1)), degrees, seed=int(match.group(3)))
    if name not in BUILTINS or BUILTINS[name][1] is None:
        raise UnknownBuiltinException("Unknown builtin '{}', choose among: {}.".format(name, ", ".join(names())))
    return BUILTINS[name][1](seed=seed, primes=primes, logger=logger)


def builtin_chart(name):
    """Generators of a built-in curve in chart coordinates (x_1, .., x_{N-1}, z) along a tangent line

    Raises
    ------
    UnknownBuiltinException: if the builtin has no chart form
    """
    if name not in CHART_FORMS:
        raise UnknownBuiltinException("No chart form for '{}', choose among: {}.".format(
            name, ", ".join(sorted(CHART_FORMS))))
    n, texts = CHART_FORMS[name]
    ring = PolynomialRing(QQ, ambient_variables(n))
    return [ring.parse(text) for text in texts]


def load_document(text):
    """Parse a JSON input document

    Raises
    ------
    InputFormatException: if the text is not a JSON object, with the line:column of the error
    """
    try:
        document = json.loads(text)
    except ValueError as e:
        lineno, colno = getattr(e, "lineno", None), getattr(e, "colno", None)
        raise InputFormatException("Invalid JSON at {}:{}: {}.".format(lineno, colno, getattr(e, "msg", str(e))))
    if not isinstance(document, dict):
        raise InputFormatException("The input document must be a JSON object.")
    return document


def document_field(document):
    """The field of a document: 'QQ' or 'GF(p)'"""
    name = document.get("field", "QQ")
    if name == "QQ":
        return QQ
    match = re.match(r"^GF\((\d+)\)$", str(name).replace(" ", ""))
    if match is None:
        raise InputFormatException("Unknown field '{}', expected 'QQ' or 'GF(p)'.".format(name))
    p = int(match.group(1))
    if not is_prime(p):
        raise NotPrimeException("{} is not a prime.".format(p))
    return make_extension(p, 1)


def _document_polynomials(document, key):
    variables = document.get("variables")
    if not isinstance(variables, list) or len(variables) == 0 or not all(isinstance(v, str) for v in variables):
        raise InputFormatException("The document needs a non-empty list of variable names.")
    texts = document.get(key)
    if not isinstance(texts, list) or len(texts) == 0 or not all(isinstance(t, str) for t in texts):
        raise InputFormatException("'{}' must be a non-empty list of strings.".format(key))
    ring = PolynomialRing(document_field(document), tuple(variables))
    polynomials = list()
    for index, text in enumerate(texts):
        try:
            polynomials.append(ring.parse(text))
        except PolynomialParseException as e:
            raise PolynomialParseException("{}[{}], line {}, column {}: {}".format(key, index, e.line, e.column, e),
                                           column=e.column, line=e.line)
    return polynomials


def is_chart_document(document):
    variables = document.get("variables", [])
    return isinstance(variables, list) and len(variables) >= 2 \
        and tuple(variables) == ambient_variables(len(variables))


def document_chart(document):
    """Chart generators of a document whose variables are x1, .., x_{N-1}, z"""
    if not is_chart_document(document):
        raise InputFormatException("Chart documents use the variables x1, .., x(N-1), z.")
    if "generators" not in document:
        raise InputFormatException("Chart documents list their 'generators'.")
    return _document_polynomials(document, "generators")


def document_variety(document):
    """The variety described by a document, implicit ('generators', optional 'codimension') or parametric
    ('parametrization')"""
    if "parametrization" in document:
        return ParametricVariety(_document_polynomials(document, "parametrization"), name=document.get("name"))
    if "generators" not in document:
        raise InputFormatException("The document needs 'generators' or a 'parametrization'.")
    if is_chart_document(document):
        raise InputFormatException("Chart documents describe a variety along a line, not a projective variety.")
    codimension = document.get("codimension")
    if codimension is not None and not isinstance(codimension, int):
        raise InputFormatException("'codimension' must be an integer.")
    return ImplicitVariety(_document_polynomials(document, "generators"), codimension=codimension,
                           name=document.get("name"))
