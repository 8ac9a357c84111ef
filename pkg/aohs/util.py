# -*- coding: utf-8 -*-
from fractions import Fraction

import numpy as np

__author__ = "Mormont Romain <romain.mormont@gmail.com>"
__version__ = "0.2"

# stream identifiers for make_rng, so that unrelated random choices never share a generator
RNG_BETA = 1
RNG_PROJECTION = 2
RNG_RANDOM_CI = 3
RNG_COORDINATES = 4
RNG_SHUFFLE = 5
RNG_COMBINATIONS = 6
RNG_SPLITTING = 7


def batch_split(n_batches, items):
    """Partition the items into a given number of batches of similar sizes, preserving their order. If there
    are fewer items than batches, each item gets its own batch.

    Parameters
    ----------
    n_batches: int
        The number of batches
    items: sequence
        The elements to split into batches

    Returns
    -------
    batches: list (subtype: list, size: min(n_batches, len(items)))
        The batches, bigger ones first
    """
    items = list(items)
    if n_batches >= len(items):
        return [[item] for item in items]
    smaller, n_bigger = divmod(len(items), n_batches)
    batches, start = list(), 0
    for index in range(n_batches):
        size = smaller + (1 if index < n_bigger else 0)
        batches.append(items[start:start + size])
        start += size
    return batches


def make_rng(seed, *stream):
    """Seeded numpy generator for a given stream

    Parameters
    ----------
    seed: int
        The user seed
    stream: int
        Identifiers of the consumer (one of the RNG_* constants followed by any non-negative integers)

    Returns
    -------
    rng: numpy.random.Generator
    """
    return np.random.default_rng([int(seed)] + [int(s) for s in stream])


def format_exact(value):
    """Exact text rendering of a number or field element for reports: integers as decimal strings, rationals
    as 'a/b', field elements through their field"""
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else "{}/{}".format(value.numerator, value.denominator)
    if hasattr(value, "field"):
        return value.field.format(value)
    return str(value)


def nearest_fraction(value, max_denominator=10000):
    """The fraction closest to a float among those with a bounded denominator"""
    return Fraction(float(value)).limit_denominator(max_denominator)


def profile_key(profile):
    """Report key of a geometric intersection profile: descending comma-separated parts, 'none' for the
    empty profile; markers (strings) are returned unchanged"""
    if isinstance(profile, str):
        return profile
    if len(profile) == 0:
        return "none"
    return ",".join(str(part) for part in sorted(profile, reverse=True))


def parse_profile_key(key):
    """Inverse of profile_key"""
    if key == "none":
        return tuple()
    if not key[0].isdigit():
        return key
    return tuple(sorted((int(part) for part in key.split(",")), reverse=True))
