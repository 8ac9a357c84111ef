# -*- coding: utf-8 -*-
"""Cotangent-space smoothness criteria for ordered Hilbert schemes of line sections.

Given a normalized system along a line, the scheme OH_(k_1..k_r) is smooth of expected dimension at the
marked points a_j iff explicit vectors of M/M^2 (Grassmann chart) are linearly independent. For the fiber
over a point of the line, the criterion becomes the full column rank of the matrix of Taylor coefficients
q_{t,i}^{(s)}(a_j). Taylor coefficients are divided derivatives, which keeps the criteria valid in positive
characteristic.
"""
from .errors import OffSchemeException, CoincidentPointsException, StarPointException
from .hilbert import as_profile, MultiplicityProfile
from .linalg import rank, transpose
from .univariate import order_at
from .util import format_exact

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

MODE_GRASSMANN = "grassmann"
MODE_STAR = "star"


class MultFlags(object):
    """Orders e_j of the line section at the marked points and the row counts h_j"""
    def __init__(self, orders, flags):
        self._orders = tuple(orders)
        self._flags = tuple(flags)

    @property
    def e(self):
        return self._orders

    @property
    def h(self):
        return self._flags

    def __repr__(self):
        return "MultFlags(e={}, h={})".format(self._orders, self._flags)


def mult_flags(norm, profile, points):
    """e_j = order of d at a_j, h_j = k_j if e_j > k_j else k_j - 1

    Raises
    ------
    OffSchemeException: if e_j < k_j for some j
    """
    profile = as_profile(profile)
    orders, flags = list(), list()
    for index, (a, k) in enumerate(zip(points, profile)):
        e = order_at(norm.d, a)
        if e < k:
            raise OffSchemeException(
                "Point not on the Hilbert scheme: the line section vanishes to order {} < {} at {}.".format(
                    e, k, format_exact(a)), index=index)
        orders.append(e)
        flags.append(k if e > k else k - 1)
    return MultFlags(orders, flags)


def _check_distinct(points):
    for t in range(len(points)):
        for s in range(t):
            if points[s] == points[t]:
                raise CoincidentPointsException(
                    "Marked points {} and {} coincide, merge their multiplicities first.".format(s + 1, t + 1))


def _row_count(flags, profile, t, j):
    return flags.h[j] if t == 0 else profile[j]


def grassmann_rows(linearized, flags, profile, points):
    """Cotangent rows in the basis (u_1..u_{N-1}, v_1..v_{N-1}) of M/M^2

    Parameters
    ----------
    linearized: list (subtype: LinearizedEquation)
        Linearizations of the normalized generators
    flags: MultFlags
        The flags of the marked points
    profile: MultiplicityProfile
        The multiplicities
    points: sequence
        The distinct marked points

    Returns
    -------
    rows: list (subtype: list)
        For generator 1 the rows s < h_j, for the others s < k_j; the u_i-coordinate of a row is
        D^(s-1) q_i (a_j) + a_j D^(s) q_i (a_j), its v_i-coordinate D^(s) q_i (a_j)
    """
    profile = as_profile(profile)
    _check_distinct(points)
    rows = list()
    for t, equation in enumerate(linearized):
        for j, a in enumerate(points):
            for s in range(_row_count(flags, profile, t, j)):
                u_part = [q.hasse_derivative(s - 1).evaluate(a) + a * q.hasse_derivative(s).evaluate(a) for q in equation.q]
                v_part = [q.hasse_derivative(s).evaluate(a) for q in equation.q]
                rows.append(u_part + v_part)
    return rows


def fiber_matrix(linearized, flags, profile, points):
    """The (N-1) x ((c-1)k + sum_j h_j) matrix of the D^(s) q_{t,i} (a_j)"""
    profile = as_profile(profile)
    columns = list()
    for t, equation in enumerate(linearized):
        for j, a in enumerate(points):
            for s in range(_row_count(flags, profile, t, j)):
                columns.append([q.hasse_derivative(s).evaluate(a) for q in equation.q])
    n_rows = len(linearized[0].q)
    if len(columns) == 0:
        return [[] for _ in range(n_rows)]
    return transpose(columns)


class SmoothnessVerdict(object):
    """Outcome of a cotangent criterion"""
    def __init__(self, mode, rank, expected_rank, expected_dimension, rows, basis, flags):
        self._mode = mode
        self._rank = rank
        self._expected_rank = expected_rank
        self._expected_dimension = expected_dimension
        self._rows = [list(row) for row in rows]
        self._basis = tuple(basis)
        self._flags = flags

    @property
    def smooth(self):
        return self._rank == self._expected_rank

    @property
    def mode(self):
        return self._mode

    @property
    def rank(self):
        return self._rank

    @property
    def expected_rank(self):
        """Sum_j h_j + (c-1) k"""
        return self._expected_rank

    @property
    def expected_dimension(self):
        return self._expected_dimension

    @property
    def rows(self):
        """Cotangent rows (Grassmann mode) or matrix rows (star mode)"""
        return [list(row) for row in self._rows]

    @property
    def basis(self):
        return self._basis

    @property
    def flags(self):
        return self._flags

    def to_dict(self):
        return {
            "mode": self._mode,
            "smooth": self.smooth,
            "rank": self._rank,
            "expected_rank": self._expected_rank,
            "expected_dimension": self._expected_dimension,
            "basis": list(self._basis),
            "rows": [[format_exact(value) for value in row] for row in self._rows],
            "e": list(self._flags.e),
            "h": list(self._flags.h)
        }

    def __repr__(self):
        return "SmoothnessVerdict(mode={}, smooth={}, rank={}, expected_rank={})".format(
            self._mode, self.smooth, self._rank, self._expected_rank)


def _verdict_field(norm, points):
    for a in points:
        field = getattr(a, "field", None)
        if field is not None:
            return field
    return norm.field


def smooth_at(norm, profile, points):
    """Grassmann chart criterion: OH_(k) is smooth of dimension 2N-2+r-ck at the point iff the cotangent rows
    are linearly independent

    Raises
    ------
    CoincidentPointsException: if marked points coincide
    OffSchemeException: if the line section vanishes to a too low order at a marked point
    """
    profile = as_profile(profile)
    points = tuple(norm.field(a) if not hasattr(a, "field") else a for a in points)
    _check_distinct(points)
    flags = mult_flags(norm, profile, points)
    linearized = norm.linearized()
    rows = grassmann_rows(linearized, flags, profile, points)
    n = norm.n
    expected = sum(flags.h) + (norm.c - 1) * profile.k
    field = _verdict_field(norm, points)
    achieved = rank(rows, field) if len(rows) > 0 else 0
    basis = tuple("u{}".format(i + 1) for i in range(n - 1)) + tuple("v{}".format(i + 1) for i in range(n - 1))
    return SmoothnessVerdict(MODE_GRASSMANN, achieved, expected, 2 * n - 2 + profile.r - norm.c * profile.k,
                             rows, basis, flags)


def smooth_fiber_at(norm, profile, points, b):
    """Star chart criterion: the fiber over the point z = b of the line is smooth of dimension N-1+r-kc at the
    marked points iff the matrix of Taylor coefficients has full column rank. The verdict does not depend on b.

    Raises
    ------
    StarPointException: if b is one of the marked points
    CoincidentPointsException: if marked points coincide
    """
    profile = as_profile(profile)
    points = tuple(norm.field(a) if not hasattr(a, "field") else a for a in points)
    if any(a == b for a in points):
        raise StarPointException("The point b = {} is a marked point.".format(format_exact(b)))
    _check_distinct(points)
    flags = mult_flags(norm, profile, points)
    linearized = norm.linearized()
    matrix = fiber_matrix(linearized, flags, profile, points)
    n = norm.n
    expected = sum(flags.h) + (norm.c - 1) * profile.k
    field = _verdict_field(norm, points)
    achieved = rank(matrix, field) if expected > 0 else 0
    basis = tuple("u{}".format(i + 1) for i in range(n - 1))
    return SmoothnessVerdict(MODE_STAR, achieved, expected, n - 1 + profile.r - profile.k * norm.c,
                             matrix, basis, flags)


def merge_coincident(profile, points):
    """Merge the multiplicities of coincident marked points, keeping the order of first occurrence

    Returns
    -------
    profile: MultiplicityProfile
        The merged profile
    points: tuple
        The distinct points
    """
    profile = as_profile(profile)
    parts, distinct = list(), list()
    for a, k in zip(points, profile):
        for index, b in enumerate(distinct):
            if a == b:
                parts[index] += k
                break
        else:
            distinct.append(a)
            parts.append(k)
    return MultiplicityProfile(parts), tuple(distinct)


def merge_then_test(norm, profile, points):
    """smooth_at after merging coincident marked points (identity when the points are distinct)"""
    profile, points = merge_coincident(profile, points)
    return smooth_at(norm, profile, points)
