# -*- coding: utf-8 -*-
"""Command line front-end: equations of ordered Hilbert schemes, smoothness verdicts, line censuses,
secant covers and fiber sampling. Reports are JSON documents written after every computation is merged, so
that two runs with the same configuration produce the same bytes (unless timings are requested).

Exit status: 0 on success, 1 when a verification fails (flagged dimension residual, smooth fraction below 1),
2 on usage or input errors.
"""
import argparse
import io
import json
import sys

from .builder import RunConfigBuilder
from .census import census_sweep, secant_locus_cover, smooth_sample, DEFAULT_BUDGET
from .chart import LineChart, pull_to_chart, normalize_generators
from .errors import AOHSException, InputFormatException
from .gallery import BUILTINS, names, builtin, builtin_chart, load_document, document_chart, document_variety
from .hilbert import HilbertPoint, oh_equations, jacobian_oracle
from .logging import Logger, StreamLogger
from .tangent import smooth_at, smooth_fiber_at, merge_coincident
from .timing import report_timing

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.1"

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_ERROR = 2


def _split(text, cast=str):
    return [cast(part.strip()) for part in text.split(",") if len(part.strip()) > 0]


def _primes(text):
    try:
        return _split(text, int)
    except ValueError:
        raise argparse.ArgumentTypeError("invalid list of primes '{}'".format(text))


def _add_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--builtin", help="name of a built-in variety (see 'gallery list')")
    source.add_argument("--input", help="path of a JSON input document")


def build_parser():
    parser = argparse.ArgumentParser(prog="aohs", description="Aligned ordered Hilbert schemes of line sections.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more log messages (repeatable)")
    parser.add_argument("-q", "--quiet", action="count", default=0, help="fewer log messages (repeatable)")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("oh-eqs", help="equations of the ordered Hilbert scheme near a line")
    _add_source(p)
    p.add_argument("--profile", required=True, help="multiplicities k1,k2,...")
    p.add_argument("--star", default=None, help="restrict to the lines through the point z = B of the line")
    p.add_argument("--out", default=None)

    p = sub.add_parser("smooth-at", help="smoothness verdict at marked points of a line")
    _add_source(p)
    p.add_argument("--profile", required=True, help="multiplicities k1,k2,...")
    p.add_argument("--points", required=True, help="marked points a1,a2,... on the line")
    p.add_argument("--star", default=None, help="test the fiber over the point z = B of the line")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("census", help="classify the lines through general points over finite fields")
    _add_source(p)
    p.add_argument("--primes", type=_primes, required=True, help="distinct primes p1,p2,...")
    p.add_argument("--profile", default=None, help="restrict the dimension estimates to a profile")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--draws", type=int, default=1, help="accepted base points per prime")
    p.add_argument("--extension", type=int, default=1, help="enumerate the directions over GF(p^E)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--timing", action="store_true", help="write the execution times in the report")
    p.add_argument("--out", default=None)

    p = sub.add_parser("secant-cover", help="dimension of the union of the k-secant lines")
    _add_source(p)
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sample", help="fiber smoothness at the lines of a profile through general points")
    _add_source(p)
    p.add_argument("--primes", type=_primes, required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--out", default=None)

    p = sub.add_parser("gallery", help="built-in varieties")
    p.add_argument("action", choices=["list"])
    return parser


def log_level(verbose, quiet):
    return max(Logger.SILENT, min(Logger.DEBUG, Logger.WARNING + verbose - quiet))


def make_config(args, logger):
    """Translate parsed arguments into a validated RunConfig"""
    builder = RunConfigBuilder().set_command(args.command).set_logger(logger)
    if args.command == "gallery":
        return builder.get()
    builder.set_builtin(args.builtin).set_input(args.input).set_out(args.out)
    optional = {
        "primes": builder.set_primes, "profile": builder.set_profile, "seed": builder.set_seed,
        "draws": builder.set_draws, "extension": builder.set_extension, "jobs": builder.set_n_jobs,
        "budget": builder.set_budget, "star": builder.set_star, "k": builder.set_k,
        "samples": builder.set_samples, "timing": builder.set_timing
    }
    for name, setter in optional.items():
        value = getattr(args, name, None)
        if value is not None:
            setter(value)
    if getattr(args, "points", None) is not None:
        builder.set_points(_split(args.points))
    return builder.get()


def _read(path):
    try:
        with io.open(path, "r", encoding="utf-8") as file:
            return file.read()
    except (IOError, OSError) as e:
        raise InputFormatException("Cannot read '{}': {}.".format(path, e))


def load_variety(config):
    if config.builtin is not None:
        return builtin(config.builtin, primes=config.primes, logger=config.logger)
    return document_variety(load_document(_read(config.input_path)))


def load_chart(config):
    if config.builtin is not None:
        return builtin_chart(config.builtin)
    return document_chart(load_document(_read(config.input_path)))


def parse_element(field, text):
    try:
        return field(text)
    except (ValueError, ZeroDivisionError):
        raise InputFormatException("'{}' is not an element of {}.".format(text, field.name))


def _chart(generators, star):
    n = generators[0].ring.nvars
    field = generators[0].field
    return LineChart(n, star=None if star is None else parse_element(field, star))


def cmd_oh_eqs(config):
    """Equations of the ordered Hilbert scheme in the chart of the lines near {x = 0}, as text"""
    generators = load_chart(config)
    chart = _chart(generators, config.star)
    presentation = oh_equations([pull_to_chart(g, chart) for g in generators], config.profile)
    config.logger.info("OH : {} equation(s) in {} variable(s).".format(
        len(presentation.equations), presentation.ring.nvars))
    return presentation.to_text(), EXIT_SUCCESS


def cmd_smooth_at(config):
    """Verdict of the rank criterion at marked points of {x = 0}, cross-checked by the Jacobian of the
    equations. Coincident points are merged first."""
    generators = load_chart(config)
    field = generators[0].field
    points = [parse_element(field, text) for text in config.points]
    profile, points = merge_coincident(config.profile, points)
    chart = _chart(generators, config.star)
    presentation = oh_equations([pull_to_chart(g, chart) for g in generators], profile)
    origin = {name: field.zero for name in chart.chart_variables}
    oracle = jacobian_oracle(presentation, HilbertPoint(origin, points, profile))
    norm = normalize_generators(generators, points, seed=config.seed)
    if chart.is_star:
        verdict = smooth_fiber_at(norm, profile, points, chart.star)
    else:
        verdict = smooth_at(norm, profile, points)
    config.logger.info("Smoothness : criterion {}, oracle {}.".format(verdict.smooth, oracle.smooth))
    if verdict.smooth != oracle.smooth:
        config.logger.warning("Smoothness : the criterion and the Jacobian oracle disagree.")
    report = {
        "config": config.to_dict(),
        "profile": str(profile),
        "verdict": verdict.to_dict(),
        "oracle": oracle.to_dict(),
        "agree": verdict.smooth == oracle.smooth
    }
    return report, EXIT_SUCCESS


def cmd_census(config):
    variety = load_variety(config)
    sweep = census_sweep(
        variety, config.primes, draws=config.draws, profile=config.profile, extension=config.extension,
        n_jobs=config.n_jobs, budget=config.budget, seed=config.seed, logger=config.logger
    )
    report_timing(sweep.timing, config.logger)
    report = {
        "config": config.to_dict(),
        "variety": variety.to_dict(),
        "census": sweep.to_dict(with_timing=config.with_timing)
    }
    return report, EXIT_FAILURE if sweep.flagged else EXIT_SUCCESS


def cmd_secant_cover(config):
    variety = load_variety(config)
    cover = secant_locus_cover(variety, config.k, config.primes, budget=config.budget, logger=config.logger)
    report = {"config": config.to_dict(), "variety": variety.to_dict(), "cover": cover.to_dict()}
    return report, EXIT_FAILURE if cover.flagged else EXIT_SUCCESS


def cmd_sample(config):
    variety = load_variety(config)
    sample = smooth_sample(variety, config.primes[0], config.profile, samples=config.samples, seed=config.seed,
                           budget=config.budget, logger=config.logger)
    report = {"config": config.to_dict(), "variety": variety.to_dict(), "sample": sample.to_dict()}
    return report, EXIT_SUCCESS if sample.fraction == 1 else EXIT_FAILURE


def cmd_gallery(config):
    lines = ["{}: {}".format(name, BUILTINS[name][0]) for name in names()]
    return "\n".join(lines), EXIT_SUCCESS


COMMANDS = {
    "oh-eqs": cmd_oh_eqs,
    "smooth-at": cmd_smooth_at,
    "census": cmd_census,
    "secant-cover": cmd_secant_cover,
    "sample": cmd_sample,
    "gallery": cmd_gallery
}


def render(output):
    """Text of a report: JSON with sorted keys for dictionaries, the text itself otherwise, newline-terminated"""
    if isinstance(output, dict):
        text = json.dumps(output, sort_keys=True, indent=2)
    else:
        text = output
    return text if text.endswith("\n") else text + "\n"


def write_output(text, path=None):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with io.open(path, "w", encoding="utf-8", newline="\n") as file:
        file.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger = StreamLogger(log_level(args.verbose, args.quiet))
    try:
        config = make_config(args, logger)
        output, status = COMMANDS[config.command](config)
        write_output(render(output), getattr(config, "out", None))
        return status
    except AOHSException as e:
        sys.stderr.write("aohs: error: {}\n".format(e))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
