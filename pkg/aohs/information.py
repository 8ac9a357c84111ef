# -*- coding: utf-8 -*-
from fractions import Fraction

from .timing import merge_timings
from .util import format_exact, profile_key, parse_profile_key

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"


class DrawRecord(object):
    """A pseudorandom base point draw and its genericity verdict"""
    def __init__(self, index, attempt, beta, reason=None):
        """
        Parameters
        ----------
        index: int
            Index of the accepted draw this attempt was made for
        attempt: int
            Attempt number for that index
        beta: tuple
            The drawn point
        reason: str (default: None)
            Why the draw was rejected, None if it was accepted
        """
        self._index = index
        self._attempt = attempt
        self._beta = tuple(beta)
        self._reason = reason

    @property
    def index(self):
        return self._index

    @property
    def attempt(self):
        return self._attempt

    @property
    def beta(self):
        return self._beta

    @property
    def accepted(self):
        return self._reason is None

    @property
    def reason(self):
        return self._reason

    def to_dict(self):
        return {
            "index": self._index,
            "attempt": self._attempt,
            "beta": [format_exact(value) for value in self._beta],
            "accepted": self.accepted,
            "reason": self._reason
        }


class CensusReport(object):
    """Classification of the lines through a base point (immutable apart from the attached draw records)"""
    def __init__(self, prime, field, beta, counts, n_lines, geometric=None, timing=None):
        """
        Parameters
        ----------
        prime: int
            The characteristic
        field: Field
            Field of definition of the enumerated lines (F_p or an extension)
        beta: tuple
            The base point
        counts: dict
            Maps profile keys ('2,1', 'none', 'contained') to numbers of lines
        n_lines: int
            Number of lines through the base point
        geometric: dict (default: None)
            Geometric counts of finite strata, by profile key
        timing: PhaseTiming (default: None)
            Execution times
        """
        if sum(counts.values()) != n_lines:
            raise ValueError("Counts sum to {} for {} lines.".format(sum(counts.values()), n_lines))
        self._prime = prime
        self._field = field
        self._beta = tuple(beta)
        self._counts = {profile_key(key): value for key, value in counts.items() if value > 0}
        self._n_lines = n_lines
        self._geometric = dict() if geometric is None else dict(geometric)
        self._timing = timing
        self._draws = list()

    @property
    def prime(self):
        return self._prime

    @property
    def field(self):
        return self._field

    @property
    def beta(self):
        return self._beta

    @property
    def counts(self):
        return dict(self._counts)

    @property
    def n_lines(self):
        return self._n_lines

    @property
    def geometric(self):
        return dict(self._geometric)

    @property
    def timing(self):
        return self._timing

    @property
    def draws(self):
        return list(self._draws)

    @draws.setter
    def draws(self, draws):
        self._draws = list(draws)

    def count(self, profile):
        """Number of lines with the given profile (a key or a collection of multiplicities)"""
        return self._counts.get(profile_key(profile), 0)

    def secant_lines(self, degree):
        """Number of lines not contained in the variety meeting it in a scheme of degree at least degree"""
        total = 0
        for key, value in self._counts.items():
            parts = parse_profile_key(key)
            if not isinstance(parts, str) and sum(parts) >= degree:
                total += value
        return total

    def to_dict(self, with_timing=False):
        report = {
            "prime": self._prime,
            "field": self._field.name,
            "beta": [format_exact(value) for value in self._beta],
            "lines": self._n_lines,
            "counts": dict(self._counts),
            "geometric": dict(self._geometric),
            "draws": [draw.to_dict() for draw in self._draws]
        }
        if with_timing and self._timing is not None:
            report["timing"] = self._timing.to_dict()
        return report


class SweepInformation(object):
    """Census reports of several primes, several accepted draws per prime"""
    def __init__(self, reports, profile=None):
        """
        Parameters
        ----------
        reports: dict
            Maps primes to the lists of reports of their accepted draws
        profile: MultiplicityProfile (default: None)
            Restrict the dimension estimates to this profile
        """
        self._reports = {p: list(r) for p, r in reports.items()}
        self._profile = profile

    @property
    def primes(self):
        return sorted(self._reports.keys())

    @property
    def profile(self):
        return self._profile

    def reports(self, prime):
        return list(self._reports[prime])

    def first(self, prime):
        """The report of the first accepted draw, the one dimension estimates are computed from"""
        return self._reports[prime][0]

    @property
    def timing(self):
        return merge_timings(*[r.timing for reports in self._reports.values() for r in reports])

    def merge(self, other):
        """Merge with the sweep of other primes into a new object

        Raises
        ------
        ValueError: if both sweeps contain a prime, or their profile filters differ
        """
        if not isinstance(other, SweepInformation):
            raise TypeError("'other' should be a SweepInformation object (actual type is '{}').".format(type(other)))
        common = set(self._reports).intersection(other._reports)
        if len(common) > 0:
            raise ValueError("Both sweeps contain primes {}.".format(sorted(common)))
        if self._profile != other._profile:
            raise ValueError("Sweeps with different profile filters cannot be merged.")
        reports = dict(self._reports)
        reports.update(other._reports)
        return SweepInformation(reports, self._profile)

    def profile_keys(self):
        if self._profile is not None:
            return [profile_key(self._profile.unordered())]
        keys = set()
        for prime in self._reports:
            keys.update(self.first(prime).counts.keys())
        return sorted(keys)

    def estimates(self):
        """Dimension estimates per profile key, from the first accepted draw of every prime"""
        from .census import dimension_estimate
        from .errors import InsufficientDataException
        estimates = dict()
        for key in self.profile_keys():
            counts = {prime: self.first(prime).count(key) for prime in self.primes}
            try:
                estimates[key] = dimension_estimate(counts)
            except InsufficientDataException:
                estimates[key] = None
        return estimates

    @property
    def flagged(self):
        return any(estimate is not None and estimate.flagged for estimate in self.estimates().values())

    def to_dict(self, with_timing=False):
        return {
            "reports": {str(p): [r.to_dict(with_timing=with_timing) for r in self._reports[p]] for p in self.primes},
            "estimates": {
                key: (estimate.to_dict() if estimate is not None else {"dimension": "insufficient data"})
                for key, estimate in self.estimates().items()
            },
            "flagged": self.flagged
        }


def merge_information(info1, info2):
    if not isinstance(info1, SweepInformation):
        raise TypeError("The first object is not a SweepInformation object (actual type: {})".format(type(info1)))
    return info1.merge(info2)


class DimensionEstimate(object):
    """Dimension read off the growth of counts in p"""
    EMPTY = "empty"

    def __init__(self, counts, dimension, slope=None, residual=None, threshold=None):
        self._counts = dict(counts)
        self._dimension = dimension
        self._slope = slope
        self._residual = residual
        self._threshold = threshold

    @property
    def counts(self):
        return dict(self._counts)

    @property
    def dimension(self):
        """Integer dimension or 'empty'"""
        return self._dimension

    @property
    def is_empty(self):
        return self._dimension == self.EMPTY

    @property
    def slope(self):
        return self._slope

    @property
    def residual(self):
        """Distance of the fitted slope to the dimension, as a Fraction"""
        return self._residual

    @property
    def flagged(self):
        return self._residual is not None and self._residual > self._threshold

    def to_dict(self):
        return {
            "counts": {str(p): c for p, c in sorted(self._counts.items())},
            "dimension": self._dimension,
            "residual": None if self._residual is None else format_exact(self._residual),
            "flagged": self.flagged
        }


class SampleReport(object):
    """Outcome of a fiber smoothness sampling"""
    def __init__(self, profile, prime, tested, smooth, skipped, failures, draws):
        """
        Parameters
        ----------
        profile: MultiplicityProfile
            The sampled profile
        prime: int
            The characteristic
        tested: int
            Number of configurations tested
        smooth: int
            Number of configurations found smooth of expected dimension
        skipped: int
            Number of lines of the profile whose marked points are not rational, or could not be normalized
        failures: list (subtype: dict)
            Descriptions of the configurations found singular
        draws: list (subtype: DrawRecord)
            The base point draws
        """
        self._profile = profile
        self._prime = prime
        self._tested = tested
        self._smooth = smooth
        self._skipped = skipped
        self._failures = list(failures)
        self._draws = list(draws)

    @property
    def profile(self):
        return self._profile

    @property
    def prime(self):
        return self._prime

    @property
    def tested(self):
        return self._tested

    @property
    def smooth(self):
        return self._smooth

    @property
    def skipped(self):
        return self._skipped

    @property
    def failures(self):
        return list(self._failures)

    @property
    def draws(self):
        return list(self._draws)

    @property
    def fraction(self):
        return Fraction(self._smooth, self._tested)

    def to_dict(self):
        return {
            "profile": str(self._profile),
            "prime": self._prime,
            "tested": self._tested,
            "smooth": self._smooth,
            "skipped": self._skipped,
            "fraction": format_exact(self.fraction),
            "failures": self._failures,
            "draws": [draw.to_dict() for draw in self._draws]
        }


class CoverReport(object):
    """Points covered by k-secant lines, per prime"""
    def __init__(self, k, marked, totals, lines, estimate):
        """
        Parameters
        ----------
        k: int
            The secant order
        marked: dict
            Maps primes to numbers of covered points
        totals: dict
            Maps primes to numbers of points of the ambient space
        lines: dict
            Maps primes to numbers of k-secant lines
        estimate: DimensionEstimate
            Dimension of the cover, None if the data is insufficient
        """
        self._k = k
        self._marked = dict(marked)
        self._totals = dict(totals)
        self._lines = dict(lines)
        self._estimate = estimate

    @property
    def k(self):
        return self._k

    @property
    def marked(self):
        return dict(self._marked)

    @property
    def lines(self):
        return dict(self._lines)

    @property
    def estimate(self):
        return self._estimate

    @property
    def flagged(self):
        return self._estimate is not None and self._estimate.flagged

    def to_dict(self):
        return {
            "k": self._k,
            "points": {str(p): {"marked": self._marked[p], "total": self._totals[p], "lines": self._lines[p]}
                       for p in sorted(self._marked)},
            "estimate": self._estimate.to_dict() if self._estimate is not None else {"dimension": "insufficient data"}
        }
