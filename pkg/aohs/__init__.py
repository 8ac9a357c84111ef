# -*- coding: utf-8 -*-

from .arith import QQ, RationalField, PrimeField, ExtensionField, make_extension, is_prime
from .builder import RunConfig, RunConfigBuilder
from .census import LineCensus, ImplicitCensus, make_census, census_through_point, census_sweep, \
    draw_general_point, dimension_estimate, smooth_sample, secant_locus_points, secant_locus_cover, line_profile
from .chart import LineChart, pull_to_chart, specialize_to_star, normalize_generators, linearize, restriction, \
    change_coordinates, NormalizedSystem
from .errors import AOHSException, MissingComponentException, InvalidBuildingException
from .gallery import ParametricCensus, builtin, builtin_chart, names, document_variety, tangency_scheme
from .hilbert import MultiplicityProfile, OHPresentation, HilbertPoint, oh_equations, jacobian_oracle, \
    merge_profile_check
from .information import CensusReport, SweepInformation, SampleReport, CoverReport, DimensionEstimate, \
    merge_information
from .logging import Logger, StreamLogger, FileLogger, RecordingLogger, SilentLogger, Loggable
from .poly import PolynomialRing, Polynomial, rem_mod_product
from .tangent import SmoothnessVerdict, smooth_at, smooth_fiber_at, merge_then_test
from .timing import PhaseTiming, report_timing, merge_timings
from .univariate import UnivariatePolynomial, BinaryForm, gcd, xgcd, factor_profile, binary_gcd
from .util import batch_split, make_rng
from .variety import ImplicitVariety, ParametricVariety

__version__ = "0.1.0"

__all__ = [
    "QQ", "RationalField", "PrimeField", "ExtensionField", "make_extension", "is_prime", "RunConfig",
    "RunConfigBuilder", "LineCensus", "ImplicitCensus", "make_census", "census_through_point", "census_sweep",
    "draw_general_point", "dimension_estimate", "smooth_sample", "secant_locus_points", "secant_locus_cover",
    "line_profile", "LineChart", "pull_to_chart", "specialize_to_star", "normalize_generators", "linearize",
    "restriction", "change_coordinates", "NormalizedSystem", "AOHSException", "MissingComponentException",
    "InvalidBuildingException", "ParametricCensus", "builtin", "builtin_chart", "names", "document_variety",
    "tangency_scheme", "MultiplicityProfile", "OHPresentation", "HilbertPoint", "oh_equations", "jacobian_oracle",
    "merge_profile_check", "CensusReport", "SweepInformation", "SampleReport", "CoverReport", "DimensionEstimate",
    "merge_information", "Logger", "StreamLogger", "FileLogger", "RecordingLogger", "SilentLogger", "Loggable",
    "PolynomialRing", "Polynomial", "rem_mod_product", "SmoothnessVerdict", "smooth_at", "smooth_fiber_at",
    "merge_then_test", "PhaseTiming", "report_timing", "merge_timings", "UnivariatePolynomial", "BinaryForm", "gcd",
    "xgcd", "factor_profile", "binary_gcd", "batch_split", "make_rng", "ImplicitVariety", "ParametricVariety"
]
