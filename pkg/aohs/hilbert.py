# -*- coding: utf-8 -*-
"""Defining equations of the aligned ordered Hilbert schemes OH_(k_1..k_r) of line sections and the
brute-force Jacobian smoothness oracle.

A scheme is cut in (chart variables, z_1, ..., z_r)-space by the coefficients h_l of the remainders of the
generators g_s(z) modulo prod_i (z - z_i)^(k_i).
"""
from .errors import InvalidProfileException, ZeroGeneratorException, OffSchemeException, \
    CoincidentPointsException
from .linalg import rank
from .poly import rem_mod_product

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


class MultiplicityProfile(object):
    """An ordered tuple (k_1, ..., k_r) of positive multiplicities"""
    def __init__(self, parts):
        parts = tuple(int(k) for k in parts)
        if len(parts) == 0:
            raise InvalidProfileException("A multiplicity profile needs at least one part.")
        if any(k < 1 for k in parts):
            raise InvalidProfileException("Multiplicities must be positive, got {}.".format(parts))
        self._parts = parts

    @classmethod
    def parse(cls, text):
        """Parse 'k1,k2,...'"""
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError:
            raise InvalidProfileException("Invalid multiplicity profile '{}'.".format(text))

    @property
    def parts(self):
        return self._parts

    @property
    def r(self):
        return len(self._parts)

    @property
    def k(self):
        return sum(self._parts)

    def merged(self, s, t):
        """Profile where part t is added to part s and removed (s < t)"""
        if not 0 <= s < t < len(self._parts):
            raise IndexError("Invalid parts to merge ({}, {}) for profile {}.".format(s, t, self))
        parts = list(self._parts)
        parts[s] += parts[t]
        del parts[t]
        return MultiplicityProfile(parts)

    def unordered(self):
        """The parts as a descending tuple"""
        return tuple(sorted(self._parts, reverse=True))

    def __iter__(self):
        return iter(self._parts)

    def __len__(self):
        return len(self._parts)

    def __getitem__(self, item):
        return self._parts[item]

    def __eq__(self, other):
        if isinstance(other, MultiplicityProfile):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash(self._parts)

    def __str__(self):
        return ",".join(str(k) for k in self._parts)

    def __repr__(self):
        return "MultiplicityProfile({})".format(self._parts)


def as_profile(profile):
    return profile if isinstance(profile, MultiplicityProfile) else MultiplicityProfile(profile)


def marked_variables(r, variable="z"):
    return tuple("{}{}".format(variable, i + 1) for i in range(r))


class OHPresentation(object):
    """The equations of an ordered Hilbert scheme: k equations per generator, in the ring of the chart
    variables followed by the marked point variables z_1, ..., z_r"""
    def __init__(self, ring, equations, profile, n_generators, marked):
        """
        Parameters
        ----------
        ring: PolynomialRing
            Ring of the equations
        equations: list (subtype: Polynomial)
            h_{s,l} for s = 1..c and l = 0..k-1, generator-major
        profile: MultiplicityProfile
            The multiplicities
        n_generators: int
            The number c of generators
        marked: tuple (subtype: str)
            Names of the marked point variables
        """
        if len(equations) != n_generators * profile.k:
            raise ValueError("Expected {} equations, got {}.".format(n_generators * profile.k, len(equations)))
        self._ring = ring
        self._equations = list(equations)
        self._profile = profile
        self._n_generators = n_generators
        self._marked = tuple(marked)

    @property
    def ring(self):
        return self._ring

    @property
    def equations(self):
        return list(self._equations)

    @property
    def profile(self):
        return self._profile

    @property
    def n_generators(self):
        return self._n_generators

    @property
    def marked_variables(self):
        return self._marked

    @property
    def chart_variables(self):
        return tuple(v for v in self._ring.variables if v not in self._marked)

    @property
    def expected_dimension(self):
        """Number of chart variables + r - c*k"""
        return len(self.chart_variables) + self._profile.r - self._n_generators * self._profile.k

    def equation(self, s, l):
        """h_{s,l}, generator s and power l are 0-based"""
        return self._equations[s * self._profile.k + l]

    def evaluate(self, point):
        """Values of the equations at a point (dict mapping every ring variable to a value)"""
        return [equation.evaluate(point) for equation in self._equations]

    def to_text(self):
        return "\n".join(str(equation) for equation in self._equations)

    def __eq__(self, other):
        return isinstance(other, OHPresentation) and self._ring == other._ring \
            and self._equations == other._equations and self._profile == other._profile

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._ring, tuple(self._equations)))


class HilbertPoint(object):
    """A point of an ordered Hilbert scheme: values of the chart variables and marked points on the line"""
    def __init__(self, chart_values, marked_points, profile):
        """
        Parameters
        ----------
        chart_values: dict
            Maps chart variable names to field elements
        marked_points: sequence
            The points a_1, ..., a_r on the line (z-coordinates)
        profile: MultiplicityProfile
            The multiplicities attached to the marked points
        """
        profile = as_profile(profile)
        if len(marked_points) != profile.r:
            raise ValueError("Expected {} marked points, got {}.".format(profile.r, len(marked_points)))
        self._chart_values = dict(chart_values)
        self._marked_points = tuple(marked_points)
        self._profile = profile

    @property
    def chart_values(self):
        return dict(self._chart_values)

    @property
    def marked_points(self):
        return self._marked_points

    @property
    def profile(self):
        return self._profile

    def coincident_pair(self):
        """First pair s < t with a_s = a_t, None if the points are distinct"""
        for t in range(len(self._marked_points)):
            for s in range(t):
                if self._marked_points[s] == self._marked_points[t]:
                    return s, t
        return None

    def assignment(self, presentation):
        """Values of every variable of the presentation ring"""
        values = dict(self._chart_values)
        values.update(zip(presentation.marked_variables, self._marked_points))
        missing = [v for v in presentation.ring.variables if v not in values]
        if len(missing) > 0:
            raise ValueError("No value for variables {}.".format(", ".join(missing)))
        return values


def oh_equations(generators, profile, variable="z"):
    """Equations of OH_(k_1..k_r) for a system of generators written in (chart variables, z)

    Parameters
    ----------
    generators: list (subtype: Polynomial)
        The c generators, in a common ring containing the variable z
    profile: MultiplicityProfile|iterable
        The multiplicities
    variable: str
        The name of the line coordinate

    Returns
    -------
    presentation: OHPresentation
        The c*k equations, in the ring of the chart variables extended with z_1..z_r

    Raises
    ------
    ZeroGeneratorException: if a generator is zero
    """
    profile = as_profile(profile)
    generators = list(generators)
    if len(generators) == 0:
        raise ValueError("At least one generator is needed.")
    for index, g in enumerate(generators):
        if g.is_zero():
            raise ZeroGeneratorException("Generator {} is identically zero.".format(index + 1))
    marked = marked_variables(profile.r, variable)
    ring = generators[0].ring.extend(*marked)
    target = ring.drop(variable)
    equations = list()
    for g in generators:
        remainders = rem_mod_product(g.set_ring(ring), profile, variable=variable, points=marked)
        equations.extend(h.set_ring(target) for h in remainders)
    return OHPresentation(target, equations, profile, len(generators), marked)


class OracleVerdict(object):
    """Outcome of the Jacobian oracle"""
    def __init__(self, rank, expected_codimension, n_variables):
        self._rank = rank
        self._expected_codimension = expected_codimension
        self._n_variables = n_variables

    @property
    def smooth(self):
        """True iff the scheme is smooth of expected dimension at the point"""
        return self._rank == self._expected_codimension

    @property
    def rank(self):
        return self._rank

    @property
    def expected_codimension(self):
        return self._expected_codimension

    @property
    def expected_dimension(self):
        return self._n_variables - self._expected_codimension

    def to_dict(self):
        return {
            "smooth": self.smooth,
            "rank": self._rank,
            "expected_codimension": self._expected_codimension,
            "expected_dimension": self.expected_dimension
        }

    def __repr__(self):
        return "OracleVerdict(smooth={}, rank={}, expected_codimension={})".format(
            self.smooth, self._rank, self._expected_codimension)


def jacobian_oracle(presentation, point):
    """Rank of the Jacobian matrix of the equations at a point of the scheme

    Parameters
    ----------
    presentation: OHPresentation
        The equations
    point: HilbertPoint|dict
        The point, or an assignment of every ring variable

    Returns
    -------
    verdict: OracleVerdict
        Smooth of expected dimension iff the rank is c*k

    Raises
    ------
    OffSchemeException: if an equation does not vanish at the point (the first one is reported)
    """
    values = point.assignment(presentation) if isinstance(point, HilbertPoint) else dict(point)
    for index, value in enumerate(presentation.evaluate(values)):
        if value:
            equation = presentation.equations[index]
            raise OffSchemeException(
                "Point not on the scheme: equation {} ({}) evaluates to {}.".format(index + 1, equation, value),
                index=index, equation=str(equation)
            )
    variables = presentation.ring.variables
    jacobian = [[equation.derivative(v).evaluate(values) for v in variables] for equation in presentation.equations]
    field = _value_field(values.values(), presentation.ring.field)
    expected = len(presentation.equations)
    return OracleVerdict(rank(jacobian, field) if expected > 0 else 0, expected, len(variables))


def _value_field(values, default):
    for value in values:
        field = getattr(value, "field", None)
        if field is not None and field != default:
            return field
    return default


class MergeCheck(object):
    """Verdicts of the oracle on a coincident point, before and after merging the coincident parts"""
    def __init__(self, split, merged, pair):
        self._split = split
        self._merged = merged
        self._pair = pair

    @property
    def split(self):
        return self._split

    @property
    def merged(self):
        return self._merged

    @property
    def pair(self):
        return self._pair

    @property
    def equal(self):
        return self._split.smooth == self._merged.smooth


def merge_profile_check(generators, point, variable="z"):
    """Compare the oracle verdicts at a point with coincident marked points a_s = a_t for the profile
    (.., k_s, .., k_t, ..) and for the merged profile with k_s + k_t

    Parameters
    ----------
    generators: list (subtype: Polynomial)
        Generators in (chart variables, z)
    point: HilbertPoint
        The point, with at least one coincident pair

    Raises
    ------
    CoincidentPointsException: if the marked points are distinct
    """
    pair = point.coincident_pair()
    if pair is None:
        raise CoincidentPointsException("The marked points {} are distinct.".format(point.marked_points))
    s, t = pair
    split = jacobian_oracle(oh_equations(generators, point.profile, variable=variable), point)
    marked = [a for i, a in enumerate(point.marked_points) if i != t]
    merged_point = HilbertPoint(point.chart_values, marked, point.profile.merged(s, t))
    merged = jacobian_oracle(oh_equations(generators, merged_point.profile, variable=variable), merged_point)
    return MergeCheck(split, merged, pair)
