# -*- coding: utf-8 -*-
from .arith import is_prime
from .census import DEFAULT_BUDGET
from .errors import MissingComponentException, InvalidBuildingException, InvalidProfileException
from .hilbert import MultiplicityProfile
from .logging import SilentLogger

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

COMMANDS = ("oh-eqs", "smooth-at", "census", "secant-cover", "sample", "gallery")
_NEEDS_PRIMES = {"census", "secant-cover", "sample"}
_NEEDS_PROFILE = {"oh-eqs", "smooth-at", "sample"}


class RunConfig(object):
    """Parameters of a run, embedded in every report so that a run can be replayed"""
    def __init__(self, command, builtin=None, input_path=None, primes=(), profile=None, seed=0, out=None,
                 budget=DEFAULT_BUDGET, n_jobs=1, draws=1, extension=1, star=None, points=(), k=2, samples=20,
                 with_timing=False, logger=SilentLogger()):
        self._command = command
        self._builtin = builtin
        self._input_path = input_path
        self._primes = tuple(primes)
        self._profile = profile
        self._seed = seed
        self._out = out
        self._budget = budget
        self._n_jobs = n_jobs
        self._draws = draws
        self._extension = extension
        self._star = star
        self._points = tuple(points)
        self._k = k
        self._samples = samples
        self._with_timing = with_timing
        self._logger = logger

    @property
    def command(self):
        return self._command

    @property
    def builtin(self):
        return self._builtin

    @property
    def input_path(self):
        return self._input_path

    @property
    def primes(self):
        return self._primes

    @property
    def profile(self):
        """The multiplicity profile (MultiplicityProfile), None if not given"""
        return self._profile

    @property
    def seed(self):
        return self._seed

    @property
    def out(self):
        return self._out

    @property
    def budget(self):
        return self._budget

    @property
    def n_jobs(self):
        return self._n_jobs

    @property
    def draws(self):
        return self._draws

    @property
    def extension(self):
        return self._extension

    @property
    def star(self):
        """Text of the star point b, None for the Grassmann chart"""
        return self._star

    @property
    def points(self):
        """Texts of the marked points"""
        return self._points

    @property
    def k(self):
        return self._k

    @property
    def samples(self):
        return self._samples

    @property
    def with_timing(self):
        return self._with_timing

    @property
    def logger(self):
        return self._logger

    def to_dict(self):
        return {
            "command": self._command,
            "builtin": self._builtin,
            "input": self._input_path,
            "primes": list(self._primes),
            "profile": None if self._profile is None else str(self._profile),
            "seed": self._seed,
            "out": self._out,
            "budget": self._budget,
            "jobs": self._n_jobs,
            "draws": self._draws,
            "extension": self._extension,
            "star": self._star,
            "points": list(self._points),
            "k": self._k,
            "samples": self._samples,
            "timing": self._with_timing
        }


class RunConfigBuilder(object):
    """Builds RunConfig objects. Fields are reset after each call to get()"""
    def __init__(self):
        self._command = None
        self._builtin = None
        self._input_path = None
        self._primes = None
        self._profile = None
        self._seed = None
        self._out = None
        self._budget = None
        self._n_jobs = None
        self._draws = None
        self._extension = None
        self._star = None
        self._points = None
        self._k = None
        self._samples = None
        self._with_timing = None
        self._logger = None
        self._reset()

    def _reset(self):
        self._command = None
        self._builtin = None
        self._input_path = None
        self._primes = ()
        self._profile = None
        self._seed = 0
        self._out = None
        self._budget = DEFAULT_BUDGET
        self._n_jobs = 1
        self._draws = 1
        self._extension = 1
        self._star = None
        self._points = ()
        self._k = 2
        self._samples = 20
        self._with_timing = False
        self._logger = SilentLogger()

    def set_command(self, command):
        """Set the command to run
        Parameters
        ----------
        command: str
            One of 'oh-eqs', 'smooth-at', 'census', 'secant-cover', 'sample', 'gallery'

        Returns
        -------
        builder: RunConfigBuilder
            The builder
        """
        self._command = command
        return self

    def set_builtin(self, name):
        """Set a built-in variety as variety source
        Parameters
        ----------
        name: str
            The gallery name

        Returns
        -------
        builder: RunConfigBuilder
            The builder
        """
        self._builtin = name
        return self

    def set_input(self, path):
        """Set an input document as variety source
        Parameters
        ----------
        path: str
            Path of the JSON document

        Returns
        -------
        builder: RunConfigBuilder
            The builder
        """
        self._input_path = path
        return self

    def set_primes(self, primes):
        """Set the characteristics
        Parameters
        ----------
        primes: iterable (subtype: int)
            Distinct primes

        Returns
        -------
        builder: RunConfigBuilder
            The builder
        """
        self._primes = tuple(primes)
        return self

    def set_profile(self, profile):
        """Set the multiplicity profile
        Parameters
        ----------
        profile: str|iterable|MultiplicityProfile
            Positive multiplicities, as 'k1,k2,..' or a sequence

        Returns
        -------
        builder: RunConfigBuilder
            The builder
        """
        self._profile = profile
        return self

    def set_seed(self, seed):
        self._seed = seed
        return self

    def set_out(self, path):
        """Set the output file (optional, the report is written to the standard output by default)"""
        self._out = path
        return self

    def set_budget(self, budget):
        """Set the maximal number of line classification units. If not called, 1000000 is used."""
        self._budget = budget
        return self

    def set_n_jobs(self, n_jobs):
        self._n_jobs = n_jobs
        return self

    def set_draws(self, draws):
        """Set the number of accepted base point draws per prime"""
        self._draws = draws
        return self

    def set_extension(self, extension):
        """Set the degree of the field of the enumerated directions over F_p"""
        self._extension = extension
        return self

    def set_star(self, b):
        """Set the star point b (text), lines through (0, .., 0, b) instead of the Grassmann chart"""
        self._star = b
        return self

    def set_points(self, points):
        self._points = tuple(points)
        return self

    def set_k(self, k):
        """Set the secant order of the cover"""
        self._k = k
        return self

    def set_samples(self, samples):
        self._samples = samples
        return self

    def set_timing(self, with_timing=True):
        self._with_timing = with_timing
        return self

    def set_logger(self, logger):
        """Set the logger. If not called, a SilentLogger is provided by default."""
        self._logger = logger
        return self

    def _parse_profile(self):
        if self._profile is None:
            return None
        try:
            if isinstance(self._profile, MultiplicityProfile):
                return self._profile
            if isinstance(self._profile, str):
                return MultiplicityProfile.parse(self._profile)
            return MultiplicityProfile(self._profile)
        except InvalidProfileException as e:
            raise InvalidBuildingException(str(e))

    def _check_primes(self):
        if len(set(self._primes)) != len(self._primes):
            raise InvalidBuildingException("Repeated primes in {}.".format(list(self._primes)))
        for p in self._primes:
            if not isinstance(p, int) or not is_prime(p):
                raise InvalidBuildingException("{} is not a prime.".format(p))

    def get(self):
        """Validate the parameters and build the configuration

        Returns
        -------
        config: RunConfig
            The configuration

        Raises
        ------
        MissingComponentException:
            If a parameter the command needs was not set
        InvalidBuildingException:
            If the parameters are inconsistent
        """
        if self._command is None:
            raise MissingComponentException("Missing command.")
        if self._command not in COMMANDS:
            raise InvalidBuildingException("Unknown command '{}', choose among: {}.".format(
                self._command, ", ".join(COMMANDS)))
        if self._command != "gallery":
            if self._builtin is None and self._input_path is None:
                raise MissingComponentException("Missing variety: either a builtin or an input document.")
            if self._builtin is not None and self._input_path is not None:
                raise InvalidBuildingException("Cannot use a builtin alongside an input document.")
        if self._command in _NEEDS_PRIMES and len(self._primes) == 0:
            raise MissingComponentException("Missing primes.")
        self._check_primes()
        if self._command == "sample" and len(self._primes) != 1:
            raise InvalidBuildingException("Sampling runs over a single prime.")
        profile = self._parse_profile()
        if self._command in _NEEDS_PROFILE and profile is None:
            raise MissingComponentException("Missing multiplicity profile.")
        if self._command == "smooth-at":
            if len(self._points) == 0:
                raise MissingComponentException("Missing marked points.")
            if len(self._points) != profile.r:
                raise InvalidBuildingException("Expected {} marked points for profile {}, got {}.".format(
                    profile.r, profile, len(self._points)))
        if self._seed < 0:
            raise InvalidBuildingException("The seed must be non-negative, got {}.".format(self._seed))
        if self._budget <= 0:
            raise InvalidBuildingException("The budget must be positive, got {}.".format(self._budget))
        if self._k < 2:
            raise InvalidBuildingException("The secant order must be at least 2, got {}.".format(self._k))
        if self._n_jobs == 0:
            raise InvalidBuildingException("The number of jobs cannot be 0.")
        for name, value in [("draws", self._draws), ("extension", self._extension), ("samples", self._samples)]:
            if value < 1:
                raise InvalidBuildingException("The number of {} must be positive, got {}.".format(name, value))
        config = RunConfig(
            self._command, builtin=self._builtin, input_path=self._input_path, primes=self._primes,
            profile=profile, seed=self._seed, out=self._out, budget=self._budget, n_jobs=self._n_jobs,
            draws=self._draws, extension=self._extension, star=self._star, points=self._points, k=self._k,
            samples=self._samples, with_timing=self._with_timing, logger=self._logger
        )
        self._reset()
        return config
