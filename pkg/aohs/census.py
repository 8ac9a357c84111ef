# -*- coding: utf-8 -*-
"""Exhaustive censuses of the lines through a point over a finite field, classified by the geometric
multiplicity profile of their intersection with a variety.
"""
import os
from abc import abstractmethod
from collections import Counter
from fractions import Fraction
from functools import reduce

import numpy as np
from joblib import delayed, Parallel, effective_n_jobs

from .arith import is_prime, make_extension
from .chart import change_coordinates, restriction, normalize_generators, local_complete_intersection
from .errors import NotPrimeException, BasePointException, BudgetExceededException, GenericityException, \
    InsufficientDataException, NoTestableSampleException, DegenerateVarietyException, LineContainedException, \
    NormalizationException, InvalidLineException
from .hilbert import as_profile
from .information import CensusReport, SweepInformation, DrawRecord, DimensionEstimate, SampleReport, \
    CoverReport, merge_information
from .logging import Loggable, SilentLogger
from .tangent import smooth_fiber_at
from .timing import PhaseTiming
from .univariate import binary_gcd, gcd, roots, order_at
from .util import batch_split, make_rng, RNG_BETA, format_exact, nearest_fraction, profile_key, \
    parse_profile_key
from .variety import ImplicitVariety, ParametricVariety, normalize_point, directions, count_projective_points, \
    projective_lines, count_projective_lines, line_points, line_restriction

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

CONTAINED = "contained"
RESIDUAL_THRESHOLD = Fraction(3, 10)
MAX_DRAWS = 10
DEFAULT_BUDGET = 1000000


def profile_from_forms(forms):
    """Geometric multiplicity profile of the common zeros of binary forms: every irreducible factor of degree d
    and multiplicity m of their gcd gives d points of multiplicity m. CONTAINED when all the forms vanish."""
    nonzero = [form for form in forms if not form.is_zero()]
    if len(nonzero) == 0:
        return CONTAINED
    common = binary_gcd(*nonzero)
    if common.degree == 0:
        return tuple()
    parts = list()
    for degree, multiplicity in common.factor_profile():
        parts.extend([multiplicity] * degree)
    return tuple(sorted(parts, reverse=True))


def line_profile(variety, beta, direction):
    """Geometric multiplicity profile of the intersection of an implicit variety with the line through beta
    and direction, or CONTAINED

    Raises
    ------
    InvalidLineException: if direction is zero or proportional to beta
    """
    field = variety.field
    return profile_from_forms(variety.restrict_to_line([field(v) for v in beta], [field(v) for v in direction]))


def expected_fiber_dimension(n, c, parts):
    """N - 1 + r - k c"""
    return n - 1 + len(parts) - sum(parts) * c


class _ImplicitLineClassifier(object):
    def __init__(self, restrictor):
        self._restrictor = restrictor

    def classify(self, direction):
        return profile_from_forms(self._restrictor.forms(direction))


def _batch_classify(classifier, batch, timing_root=None):
    """Classify a batch of directions

    Returns
    -------
    timing: PhaseTiming
        Time spent classifying
    counts: Counter
        Maps profile keys to numbers of lines
    """
    timing = PhaseTiming(root=timing_root)
    counts = Counter()
    with timing.cm(LineCensus.TIMING_CLASSIFY):
        for direction in batch:
            counts[profile_key(classifier.classify(direction))] += 1
    return timing, counts


class LineCensus(Loggable):
    """Abstract census of the lines through a point of P^N over F_p, or over F_{p^e} for the lines through a
    rational point that are defined over an extension"""
    TIMING_ROOT = "census"
    TIMING_ENUMERATE = "enumerate"
    TIMING_CLASSIFY = "classify"
    TIMING_MERGE = "merge"
    TIMING_TANGENCY = "tangency"

    def __init__(self, variety, prime, extension=1, n_jobs=1, budget=DEFAULT_BUDGET, seed=0, logger=SilentLogger()):
        """
        Parameters
        ----------
        variety: ImplicitVariety|ParametricVariety
            The variety, over QQ or F_p
        prime: int
            The characteristic p
        extension: int (default: 1)
            Degree e of the field of definition of the enumerated lines
        n_jobs: int (default: 1)
            Number of jobs classifying the lines
        budget: int (default: 1000000)
            Largest accepted number of line-classification units
        seed: int (default: 0)
            Seed of the pseudorandom choices
        logger: Logger (default: SilentLogger)
            A logger

        Raises
        ------
        NotPrimeException: if prime is not a prime
        """
        super(LineCensus, self).__init__(logger=logger)
        if not is_prime(prime):
            raise NotPrimeException("{} is not a prime.".format(prime))
        if extension < 1:
            raise ValueError("The extension degree must be positive, got {}.".format(extension))
        self._prime = prime
        self._extension = extension
        self._base_field = make_extension(prime, 1)
        self._field = make_extension(prime, extension)
        self._variety = variety.over_field(self._base_field)
        self._extended = self._variety if extension == 1 else variety.over_field(self._field)
        self._n_jobs = n_jobs
        self._budget = budget
        self._seed = seed
        self._pool = None  # cache across censuses

    @property
    def variety(self):
        return self._variety

    @property
    def prime(self):
        return self._prime

    @property
    def extension(self):
        return self._extension

    @property
    def base_field(self):
        return self._base_field

    @property
    def field(self):
        """Field of definition of the enumerated lines"""
        return self._field

    @property
    def n(self):
        return self._variety.n

    @property
    def seed(self):
        return self._seed

    @property
    def budget(self):
        return self._budget

    @property
    def n_jobs(self):
        return self._n_jobs

    @n_jobs.setter
    def n_jobs(self, value):
        if value != self._n_jobs:
            self._pool = None
            self._n_jobs = value

    def _set_pool(self):
        if self._pool is None:
            self._pool = Parallel(n_jobs=self._n_jobs)

    @property
    def pool(self):
        self._set_pool()
        return self._pool

    def __getstate__(self):
        self._pool = None  # so that the census is serializable
        return self.__dict__

    @property
    @abstractmethod
    def codimension(self):
        pass

    @property
    @abstractmethod
    def units_per_line(self):
        """Cost of classifying one line"""
        pass

    @abstractmethod
    def contains(self, beta):
        """True if the rational point beta lies on the variety"""
        pass

    @abstractmethod
    def line_classifier(self, beta):
        """A picklable object whose classify(direction) method returns the profile of a line through beta"""
        pass

    def geometric_counts(self, beta, timing):
        """Geometric counts of finite strata that rational lines cannot capture, by profile key. A None value
        marks a count that cannot be trusted for this base point."""
        return dict()

    @property
    def n_lines(self):
        return count_projective_points(self._field.order, self.n - 1)

    @property
    def cost(self):
        return self.n_lines * self.units_per_line

    def check_budget(self):
        """
        Raises
        ------
        BudgetExceededException: if the census costs more than the budget
        """
        if self.cost > self._budget:
            raise BudgetExceededException("Instance too large: {} lines through a point of P^{} over {} cost {} "
                                          "units, the budget is {}.".format(self.n_lines, self.n, self._field.name,
                                                                             self.cost, self._budget))

    def _point(self, beta):
        return normalize_point(beta, self._base_field)

    def count(self, beta):
        """Census of the lines through beta

        Parameters
        ----------
        beta: sequence
            A rational point off the variety

        Returns
        -------
        report: CensusReport
            The profile counts, 'none' counting the lines missing the variety

        Raises
        ------
        BasePointException: if beta lies on the variety
        BudgetExceededException: if the instance is too large
        """
        beta = self._point(beta)
        if self.contains(beta):
            raise BasePointException("The base point {} lies on the variety.".format([format_exact(v) for v in beta]))
        self.check_budget()
        timing = PhaseTiming(root=LineCensus.TIMING_ROOT)
        name = self.__class__.__name__
        self.logger.info("{} : start census through {} over {}.".format(
            name, [format_exact(v) for v in beta], self._field.name))

        with timing.cm(LineCensus.TIMING_ENUMERATE):
            lifted = tuple(self._field(v) for v in beta)
            enumerated = list(directions(lifted, self._field))
            classifier = self.line_classifier(beta)

        results = self.pool(delayed(_batch_classify)(
            classifier,
            batch,
            LineCensus.TIMING_ROOT
        ) for batch in batch_split(effective_n_jobs(self._n_jobs), enumerated))
        sub_timings, counters = list(zip(*results))

        with timing.cm(LineCensus.TIMING_MERGE):
            counts = Counter()
            for counter in counters:
                counts.update(counter)
        for sub_timing in sub_timings:
            timing.merge(sub_timing)

        geometric = self.geometric_counts(beta, timing)
        report = CensusReport(self._prime, self._field, beta, counts, len(enumerated), geometric=geometric,
                              timing=timing)
        self.logger.info(
            "{} : end census.".format(name) + os.linesep +
            "{} : {} line(s) classified in {} s.".format(
                name, len(enumerated), timing.total(LineCensus.TIMING_CLASSIFY)) + os.linesep +
            "{} : counts {}.".format(name, ", ".join("{}: {}".format(k, v) for k, v in sorted(report.counts.items())))
        )
        return report

    def lines_with(self, beta, profile):
        """Directions of the lines through beta with a given geometric profile (sequential)"""
        beta = self._point(beta)
        key = profile_key(profile)
        lifted = tuple(self._field(v) for v in beta)
        classifier = self.line_classifier(beta)
        return [direction for direction in directions(lifted, self._field)
                if profile_key(classifier.classify(direction)) == key]

    def genericity_issue(self, report):
        """Why the base point of a report is not general, None if nothing was detected"""
        if report.count(CONTAINED) > 0:
            return "{} line(s) through the base point lie on the variety".format(report.count(CONTAINED))
        for key, value in sorted(report.counts.items()):
            parts = parse_profile_key(key)
            if isinstance(parts, str) or len(parts) == 0:
                continue
            if expected_fiber_dimension(self.n, self.codimension, parts) < 0:
                return "{} line(s) with profile {} of negative expected fiber dimension".format(value, key)
        if any(value is None for value in report.geometric.values()):
            return "the tangency scheme is not reduced"
        return None


class ImplicitCensus(LineCensus):
    """Census for a variety given by homogeneous generators"""
    @property
    def codimension(self):
        return self._variety.codimension

    @property
    def units_per_line(self):
        return 1

    def contains(self, beta):
        return self._variety.contains(self._point(beta))

    def line_classifier(self, beta):
        lifted = tuple(self._field(v) for v in self._point(beta))
        return _ImplicitLineClassifier(self._extended.restrictor(lifted))


def make_census(variety, prime, **kwargs):
    """The census engine suited to a presentation"""
    if isinstance(variety, ImplicitVariety):
        return ImplicitCensus(variety, prime, **kwargs)
    if isinstance(variety, ParametricVariety):
        from .gallery import ParametricCensus
        return ParametricCensus(variety, prime, **kwargs)
    raise TypeError("No census for objects of type '{}'.".format(type(variety)))


def census_through_point(variety, beta, prime, **kwargs):
    """Classify all the lines through beta over F_p (see LineCensus.count)"""
    return make_census(variety, prime, **kwargs).count(beta)


def random_point(field, n, rng):
    while True:
        point = [field.random_element(rng) for _ in range(n + 1)]
        if any(point):
            return normalize_point(point, field)


def draw_general_point(census, index=0, max_draws=MAX_DRAWS):
    """Draw pseudorandom base points until one passes the genericity checks: off the variety, no line through it
    on the variety, no line whose profile has a negative expected fiber dimension (plus the checks of the
    census, such as a reduced tangency scheme)

    Parameters
    ----------
    census: LineCensus
        The census engine
    index: int
        Index of the accepted draw (several general points can be drawn for the same census)
    max_draws: int
        Number of attempts

    Returns
    -------
    report: CensusReport
        The census through the accepted point, with the records of all the attempts

    Raises
    ------
    GenericityException: if no attempt is accepted
    """
    records = list()
    for attempt in range(max_draws):
        rng = make_rng(census.seed, RNG_BETA, census.prime, index, attempt)
        beta = random_point(census.base_field, census.n, rng)
        report = None
        if census.contains(beta):
            reason = "the base point lies on the variety"
        else:
            report = census.count(beta)
            reason = census.genericity_issue(report)
        records.append(DrawRecord(index, attempt, beta, reason))
        census.logger.info("Draw {}.{} over {}: beta = [{}] {}.".format(
            index, attempt, census.base_field.name, ", ".join(format_exact(v) for v in beta),
            "accepted" if reason is None else "rejected ({})".format(reason)))
        if reason is None:
            report.draws = records
            return report
    raise GenericityException("No general base point over {} after {} draws.".format(census.base_field.name, max_draws))


def census_sweep(variety, primes, draws=1, profile=None, **kwargs):
    """Censuses through draws general points for each prime

    Returns
    -------
    sweep: SweepInformation
        The reports and dimension estimates
    """
    per_prime = list()
    for prime in primes:
        census = make_census(variety, prime, **kwargs)
        reports = [draw_general_point(census, index=index) for index in range(draws)]
        per_prime.append(SweepInformation({prime: reports}, profile=profile))
    return reduce(merge_information, per_prime)


def dimension_estimate(counts, threshold=RESIDUAL_THRESHOLD):
    """Dimension of a stratum from the growth of its point counts: the slope of the least-squares fit of
    log(count) against log(p), rounded to the nearest integer

    Parameters
    ----------
    counts: dict
        Maps primes to counts
    threshold: Fraction
        Residuals above this value are flagged

    Returns
    -------
    estimate: DimensionEstimate
        'empty' when all the counts are zero

    Raises
    ------
    InsufficientDataException: if fewer than 2 counts are positive
    """
    counts = {int(p): int(c) for p, c in counts.items()}
    if len(counts) > 0 and all(c == 0 for c in counts.values()):
        return DimensionEstimate(counts, DimensionEstimate.EMPTY)
    positive = sorted((p, c) for p, c in counts.items() if c > 0)
    if len(positive) < 2:
        raise InsufficientDataException("Insufficient data: {} positive count(s), at least 2 are needed.".format(len(positive)))
    primes, values = np.array(positive, dtype=float).T
    slope = float(np.polyfit(np.log(primes), np.log(values), 1)[0])
    dimension = int(round(slope))
    return DimensionEstimate(counts, dimension, slope, nearest_fraction(abs(slope - dimension)), threshold)


def _chart_points(generators, profile):
    """Marked points of the line {x = 0} assigned to the parts of the profile, None if the points are not all
    rational"""
    restrictions = [phi for phi in (restriction(g) for g in generators) if not phi.is_zero()]
    if len(restrictions) == 0:
        return None
    common = restrictions[0].monic()
    for phi in restrictions[1:]:
        common = gcd(common, phi)
    found = [(a, order_at(common, a)) for a in roots(common)] if common.degree > 0 else []
    if sum(m for _, m in found) != common.degree:
        return None
    points, used = list(), set()
    for part in profile:
        for index, (a, multiplicity) in enumerate(found):
            if index not in used and multiplicity == part:
                used.add(index)
                points.append(a)
                break
        else:
            return None
    return tuple(points)


def smooth_sample(variety, prime, profile, samples=20, seed=0, budget=DEFAULT_BUDGET, max_draws=None,
                  logger=SilentLogger()):
    """Check the fiber smoothness criterion at configurations of the lines with a given profile through general
    points. Lines are taken from successive accepted draws until enough configurations with rational marked
    points were tested.

    Parameters
    ----------
    variety: ImplicitVariety
        The variety
    prime: int
        The characteristic
    profile: MultiplicityProfile|iterable
        The multiplicities
    samples: int
        Number of configurations to test
    seed: int
        Seed of the draws
    budget: int
        Budget of each census
    max_draws: int (default: None)
        Number of accepted draws to try, 10 * samples by default
    logger: Logger
        A logger

    Returns
    -------
    report: SampleReport
        Tested, smooth and skipped configurations

    Raises
    ------
    DegenerateVarietyException: if the variety is not given by generators
    NoTestableSampleException: if no configuration could be tested
    """
    if not isinstance(variety, ImplicitVariety):
        raise DegenerateVarietyException("Fiber sampling needs a variety given by generators.")
    profile = as_profile(profile)
    key = profile_key(profile.unordered())
    census = ImplicitCensus(variety, prime, budget=budget, seed=seed, logger=logger)
    c = census.codimension
    max_draws = 10 * samples if max_draws is None else max_draws
    tested, smooth, skipped, failures, draws = 0, 0, 0, list(), list()
    for index in range(max_draws):
        if tested >= samples:
            break
        report = draw_general_point(census, index=index)
        draws.extend(report.draws)
        if report.count(key) == 0:
            continue
        beta = report.beta
        for direction in census.lines_with(beta, key):
            if tested >= samples:
                break
            try:
                change = change_coordinates(census.variety.generators, beta, direction)
                points = _chart_points(change.generators, profile)
                if points is None:
                    logger.debug("Sample: skipped line through {}, marked points not rational.".format(
                        [format_exact(v) for v in direction]))
                    skipped += 1
                    continue
                generators = local_complete_intersection(change.generators, c, points, seed=seed)
                norm = normalize_generators(generators, points, seed=seed)
                verdict = smooth_fiber_at(norm, profile, points, census.base_field.zero)
            except (LineContainedException, NormalizationException, InvalidLineException) as e:
                logger.debug("Sample: skipped line through {} ({}).".format([format_exact(v) for v in direction], e))
                skipped += 1
                continue
            tested += 1
            if verdict.smooth:
                smooth += 1
            else:
                failures.append({
                    "beta": [format_exact(v) for v in beta],
                    "direction": [format_exact(v) for v in direction],
                    "points": [format_exact(a) for a in points],
                    "rank": verdict.rank,
                    "expected_rank": verdict.expected_rank
                })
    if tested == 0:
        raise NoTestableSampleException("No testable configuration for profile {} over GF({}).".format(profile, prime))
    logger.info("Sample: {}/{} configuration(s) smooth, {} skipped.".format(smooth, tested, skipped))
    return SampleReport(profile, prime, tested, smooth, skipped, failures, draws)


def secant_locus_points(variety, k, prime, budget=DEFAULT_BUDGET):
    """Rational points of P^N lying on a line meeting the variety in a scheme of degree at least k (or
    contained in it)

    Returns
    -------
    marked: int
        Number of covered points
    lines: int
        Number of such lines

    Raises
    ------
    BudgetExceededException: if P^N has more lines than the budget
    """
    if not isinstance(variety, ImplicitVariety):
        raise DegenerateVarietyException("Secant covers need a variety given by generators.")
    if k < 2:
        raise ValueError("The secant order must be at least 2, got {}.".format(k))
    field = make_extension(prime, 1)
    variety = variety.over_field(field)
    n_lines = count_projective_lines(field.order, variety.n)
    if n_lines > budget:
        raise BudgetExceededException("Instance too large: P^{} over {} has {} lines, the budget is {}.".format(
            variety.n, field.name, n_lines, budget))
    marked, secants = set(), 0
    for first, second in projective_lines(field, variety.n):
        forms = [form for form in line_restriction(variety.generators, first, second) if not form.is_zero()]
        if len(forms) == 0 or binary_gcd(*forms).degree >= k:
            secants += 1
            marked.update(line_points(first, second, field))
    return len(marked), secants


def secant_locus_cover(variety, k, primes, budget=DEFAULT_BUDGET, logger=SilentLogger()):
    """Dimension of the union of the k-secant lines, estimated from the covered point counts

    Returns
    -------
    report: CoverReport
        Counts per prime and the dimension estimate
    """
    marked, totals, lines = dict(), dict(), dict()
    for prime in primes:
        timing = PhaseTiming(root="cover")
        with timing.cm("lines"):
            marked[prime], lines[prime] = secant_locus_points(variety, k, prime, budget=budget)
        totals[prime] = count_projective_points(prime, variety.n)
        logger.info("Cover : {} point(s) of {} on {} {}-secant line(s) over GF({}), {} s.".format(
            marked[prime], totals[prime], lines[prime], k, prime, timing.total("lines")))
    try:
        estimate = dimension_estimate(marked)
    except InsufficientDataException:
        estimate = None
    return CoverReport(k, marked, totals, lines, estimate)
