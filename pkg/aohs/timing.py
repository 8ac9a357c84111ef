# -*- coding: utf-8 -*-
import timeit

import numpy as np

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.2"


class PhaseTiming(dict):
    """Execution times of the phases of a computation, keyed by phase name.

    Phase names are chosen by the caller. Dots separate sub-phases: "census.classify" is the sub-phase
    "classify" of "census". A phase can be timed several times, every duration is kept.
    """

    def __init__(self, root=None):
        """
        Parameters
        ----------
        root: str (default: None)
            Phase prepended to every phase passed to this object, None for no prefix.

        Raises
        ------
        ValueError: if the root phase is invalid
        """
        super(PhaseTiming, self).__init__()
        if root is not None:
            self.validate_phase(root)
        self._root = root
        self._starts = dict()

    @staticmethod
    def validate_phase(phase):
        if phase is None or len(phase) == 0 or phase.startswith(".") or phase.endswith(".") or ".." in phase:
            raise ValueError("Invalid phase identifier '{}'.".format(phase))

    def _qualified(self, phase):
        self.validate_phase(phase)
        return phase if self._root is None else "{}.{}".format(self._root, phase)

    def start(self, phase):
        self._starts[self._qualified(phase)] = timeit.default_timer()

    def end(self, phase):
        """Close the phase and record its duration

        Raises
        ------
        KeyError: if the phase was not started
        """
        qualified = self._qualified(phase)
        if qualified not in self._starts:
            raise KeyError("Phase '{}' was never started.".format(qualified))
        duration = timeit.default_timer() - self._starts.pop(qualified)
        self[qualified] = np.append(self.get(qualified, np.zeros(0)), duration)

    def cm(self, phase):
        """Context manager timing the enclosed block as the given phase"""
        return _PhaseContext(self, phase)

    def total(self, phase):
        qualified = self._qualified(phase)
        if qualified not in self:
            raise KeyError("Unknown phase '{}'.".format(qualified))
        return float(np.sum(self[qualified]))

    def merge(self, other):
        """Add the durations recorded by other to this object (in place)

        Parameters
        ----------
        other: PhaseTiming
            The timing to merge into this one
        """
        if not isinstance(other, PhaseTiming):
            raise TypeError("Expected a PhaseTiming, got '{}'.".format(type(other)))
        if other is self:
            return
        for phase, durations in other.items():
            self[phase] = np.concatenate((self.get(phase, np.zeros(0)), durations))

    def hierarchy(self):
        """Nested dictionaries of the recorded phases, leaves are None"""
        tree = dict()
        for phase in sorted(self.keys()):
            node = tree
            for part in phase.split("."):
                node = node.setdefault(part, dict())
        return _close_leaves(tree)

    def statistics(self, phase):
        """Statistics of the durations of a phase, in seconds

        Returns
        -------
        statistics: dict
            Maps 'count', 'sum', 'mean', 'std', 'min' and 'max' to their values
        """
        if phase not in self:
            raise KeyError("Unknown phase '{}'.".format(phase))
        durations = self[phase]
        return {
            "count": int(durations.shape[0]),
            "sum": float(np.sum(durations)),
            "mean": float(np.mean(durations)),
            "std": float(np.std(durations)),
            "min": float(np.min(durations)),
            "max": float(np.max(durations))
        }

    def to_dict(self):
        """Per-phase statistics rounded to the millisecond, for reports"""
        return {
            phase: {key: (value if key == "count" else round(value, 3)) for key, value in self.statistics(phase).items()}
            for phase in sorted(self.keys())
        }


def _close_leaves(tree):
    return {key: (_close_leaves(sub) if len(sub) > 0 else None) for key, sub in tree.items()}


class _PhaseContext(object):
    def __init__(self, timing, phase):
        self._timing = timing
        self._phase = phase

    def __enter__(self):
        self._timing.start(self._phase)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._timing.end(self._phase)


def merge_timings(*timings):
    """Merge timings into a new object, the passed objects are left untouched (None entries are skipped)"""
    merged = PhaseTiming()
    for timing in timings:
        if timing is not None:
            merged.merge(timing)
    return merged


def _report(hierarchy, parent, depth, timing, logger, indent):
    for phase in sorted(hierarchy.keys()):
        qualified = phase if len(parent) == 0 else "{}.{}".format(parent, phase)
        next_depth = depth
        if qualified in timing:
            stats = timing.statistics(qualified)
            logger.i("{}* {}: {:.5f}s (mean:{:.5f}s std:{:.5f}s min:{:.5f}s max:{:.5f}s, count:{})".format(
                indent * depth, phase, stats["sum"], stats["mean"], stats["std"], stats["min"], stats["max"],
                stats["count"]
            ))
            next_depth += 1
        if hierarchy[phase] is not None:
            _report(hierarchy[phase], qualified, next_depth, timing, logger, indent)


def report_timing(timing, logger, indent="  "):
    """Log the recorded durations at INFO level, one line per phase

    Parameters
    ----------
    timing: PhaseTiming
        The durations to report
    logger: Logger
        The logger to report through
    indent: str
        Indentation of sub-phases
    """
    logger.i("Timing report:")
    _report(timing.hierarchy(), "", 0, timing, logger, indent)
