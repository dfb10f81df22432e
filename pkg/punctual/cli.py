# -*- coding: UTF-8 -*-

__author__ = "d01"
__email__ = "jungflor@gmail.com"
__copyright__ = "Copyright (C) 2026, Florian JUNG"
__license__ = "MIT"
__version__ = "0.1.0"
__date__ = "2026-10-17"
# Created: 2026-10-13 18:47

import argparse
import csv
import io
import json
import logging
import logging.config
import sys

from flotils import get_logger
from flotils.logable import default_logging_config

from .__version__ import __version__ as version
from .apolar import InverseSystem, apolar_ideal, apolar_local_invariants
from .checks import table_diff
from .controller import Punctual
from .errors import PunctualException, ValueException, \
    ResourceCapException
from .exact import parse_generators
from .golden import TABLES
from .hilbert import HFConstraints, enumerate_o_sequences, is_o_sequence, \
    HilbertFunction
from .loci import gorenstein_locus_dim, h3eq1_bound, N_bound, areole_bound, \
    fiber_dim, counterexample_margin, dimension_estimates
from .model import RunConfig
from .monomial import MonomialIdeal
from .regular import monomial_regular_map, tau_power, check_k_regular, \
    check_projected
from .tangent import graded_ideal_from_generators, tangent_report


logger = get_logger()
logging.captureWarnings(True)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3

TABLE_NAMES = ("o_sequences", "n3_counts", "nk_counts")
BOUND_KINDS = (
    "gorenstein", "h3eq1", "nbound", "areole", "fiber", "margin", "estimate",
)


def setup_parser():
    """
    Create and init argument parser

    :return: Argument parser
    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(prog="punctual")
    parser.add_argument(
        "--debug", action="store_true",
        help="Use debug level output"
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + version
    )
    parser.add_argument(
        "-s", "--settings", nargs="?",
        help="Settings file"
    )
    parser.add_argument(
        "--pre_path", nargs="?", default=None,
        help="Base path to use"
    )
    parser.add_argument(
        "--format", dest="output_format", default="json",
        choices=["json", "csv", "ascii"],
        help="Output format"
    )
    parser.add_argument(
        "--seed", type=int, default=None,
        help="Seed of randomized operations"
    )
    parser.add_argument(
        "--jobs", type=int, default=None,
        help="Worker processes (default: all cores)"
    )
    parser.add_argument(
        "--cache-dir", dest="cache_dir", default=None,
        help="Result cache directory"
    )
    parser.add_argument(
        "--cap", type=int, default=None,
        help="Enumeration node cap"
    )
    sub = parser.add_subparsers(dest="subcommand")

    tables = sub.add_parser("tables", help="Recompute and diff the tables")
    tables.add_argument(
        "which", nargs="?", default="all", choices=TABLE_NAMES + ("all",)
    )
    tables.add_argument("--k", type=int, default=None, help="Largest colength")

    verify = sub.add_parser("verify", help="Run a named check")
    verify.add_argument("check", help="Check name or 'all'")

    enum = sub.add_parser("enumerate", help="Enumerate ideals or O-sequences")
    enum.add_argument(
        "--kind", default="borel", choices=["monomial", "borel", "oseq"]
    )
    enum.add_argument("--n", type=int, default=3)
    enum.add_argument("--k", type=int, required=True)

    tangent = sub.add_parser("tangent", help="Tangent series of an ideal")
    source = tangent.add_mutually_exclusive_group(required=True)
    source.add_argument("--ideal", help="Homogeneous generators in x1..xn")
    source.add_argument("--dual", help="Inverse system in y1..yn")
    tangent.add_argument("--n", type=int, default=None)
    tangent.add_argument(
        "--window", type=int, nargs=2, default=None, metavar=("LOW", "HIGH")
    )
    tangent.add_argument("--expected", type=int, default=None)

    apolar = sub.add_parser("apolar", help="Invariants of an apolar algebra")
    apolar.add_argument("--dual", required=True)
    apolar.add_argument("--n", type=int, default=None)

    oseq = sub.add_parser("oseq", help="Filtered O-sequences")
    oseq.add_argument("--k", type=int, default=None)
    oseq.add_argument("--h1", type=int, default=None)
    oseq.add_argument("--min", dest="minimum", nargs="*", default=[],
                      metavar="I:V")
    oseq.add_argument("--max", dest="maximum", nargs="*", default=[],
                      metavar="I:V")
    oseq.add_argument("--check", default=None, help="e.g. 1,3,3,2,1")

    bounds = sub.add_parser("bounds", help="Dimension formulas and margins")
    bounds.add_argument("kind", choices=BOUND_KINDS)
    bounds.add_argument("values", nargs="+")
    bounds.add_argument("--base", type=int, default=None)
    bounds.add_argument("--fiber", type=int, default=None)

    regular = sub.add_parser("regular", help="Sampled k-regularity")
    regular.add_argument("--n", type=int, required=True)
    regular.add_argument("--k", type=int, required=True)
    regular.add_argument("--tau", type=int, default=1)
    regular.add_argument("--trials", type=int, default=100)
    regular.add_argument("--project", type=int, default=None, metavar="M")

    cache = sub.add_parser("cache", help="Result cache maintenance")
    cache.add_argument("action", choices=["status", "clear", "rebuild"])

    return parser


def format_ascii(header, rows):
    """
    Fixed width table

    :type header: list
    :type rows: list[list]
    :rtype: str
    """
    cells = [[str(v) for v in header]] + [[str(v) for v in r] for r in rows]
    widths = [
        max(len(row[i]) for row in cells if i < len(row))
        for i in range(max(len(row) for row in cells))
    ]
    lines = []

    for i, row in enumerate(cells):
        lines.append(" | ".join(
            v.rjust(widths[j]) if j else v.ljust(widths[j])
            for j, v in enumerate(row)
        ).rstrip())

        if i == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines)


def format_csv(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue().rstrip("\n")


def render(data, output_format, header=None, rows=None):
    """
    JSON of data, or the table (header, rows) for csv and ascii

    Data without a tabular view is written as flat key/value rows.

    :rtype: str
    """
    if output_format == "json":
        return json.dumps(data, sort_keys=True, indent=2)
    if header is None:
        if isinstance(data, dict):
            header = ["key", "value"]
            rows = [
                [key, json.dumps(data[key], sort_keys=True)]
                for key in sorted(data)
            ]
        else:
            header = ["value"]
            rows = [[json.dumps(v, sort_keys=True)] for v in data]
    if output_format == "csv":
        return format_csv(header, rows)
    return format_ascii(header, rows)


def _pairs(values):
    res = {}

    for value in values:
        index, _, bound = value.partition(":")

        try:
            res[int(index)] = int(bound)
        except ValueError:
            raise ValueException("Expected I:V, got '{}'".format(value))
    return res


def _ints(text):
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise ValueException("Expected integers, got '{}'".format(text))


def cmd_tables(instance, args):
    names = TABLE_NAMES if args.which == "all" else (args.which,)
    payload = {}
    rows = []
    diffs = []

    for which in names:
        table = TABLES[which]
        computed = instance.table_rows(which, args.k)
        diff = table_diff(table, computed)
        diffs.extend(diff)
        payload[which] = {
            'rows': computed,
            'published': {
                label: table.rows[label][:len(values)]
                for label, values in computed.items()
            },
            'citation': table.citation,
            'diffs': diff,
        }

        for label in sorted(computed):
            rows.append(["{}:{}".format(which, label)] + computed[label])
    k_max = max(len(r) - 1 for r in rows)
    header = ["k"] + list(range(1, k_max + 1))

    if diffs:
        logger.error("{} cells differ from the published tables".format(
            len(diffs)
        ))
    return payload, header, rows, EXIT_MISMATCH if diffs else EXIT_OK


def cmd_verify(instance, args):
    reports = instance.verify(args.check)
    payload = [report.to_dict() for report in reports]
    rows = [
        [r.name, "pass" if r.passed else "FAIL", r.citation] for r in reports
    ]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH
    return payload, ["check", "result", "citation"], rows, code


def cmd_enumerate(instance, args):
    if args.kind == "oseq":
        values = instance.o_sequences(args.k)
        return values, ["H"], [[",".join(map(str, v))] for v in values], \
            EXIT_OK
    ideals = instance.enumerate_ideals(args.kind, args.n, args.k)
    payload = [
        dict(ideal.to_dict(), H=ideal.hilbert.to_list()) for ideal in ideals
    ]
    rows = [
        [", ".join(ideal.to_dict()['gens']),
         ",".join(map(str, ideal.hilbert.to_list()))]
        for ideal in ideals
    ]
    return payload, ["generators", "H"], rows, EXIT_OK


def load_ideal(text, n=None, degree_cap=None):
    """
    Monomial ideal when every generator is a monomial, graded otherwise

    :rtype: punctual.monomial.MonomialIdeal | punctual.tangent.GradedIdeal
    """
    polys = parse_generators(text, n=n, dual=False)

    if all(len(p.items()) == 1 for p in polys):
        return MonomialIdeal.parse(text, n=polys[0].n)
    if degree_cap is None:
        return graded_ideal_from_generators(polys, n=n)
    return graded_ideal_from_generators(polys, n=n, degree_cap=degree_cap)


def cmd_tangent(instance, args):
    if args.dual:
        ideal = apolar_ideal(InverseSystem.parse(args.dual, n=args.n))
    else:
        ideal = load_ideal(args.ideal, args.n, instance.degree_cap)
    window = tuple(args.window) if args.window else None
    report = tangent_report(ideal, args.expected, window)
    payload = report.to_dict()
    rows = [[d, report.dims[d]] for d in sorted(report.dims)]
    return payload, ["d", "dim"], rows, EXIT_OK


def cmd_apolar(instance, args):
    fs = InverseSystem.parse(args.dual, n=args.n)
    report = apolar_local_invariants(fs)
    payload = report.to_dict()

    if report.graded:
        payload['ideal'] = apolar_ideal(fs).to_dict()['gens']
    return payload, None, None, EXIT_OK


def cmd_oseq(instance, args):
    if args.check:
        values = _ints(args.check)

        try:
            ok = is_o_sequence(HilbertFunction(values))
        except ValueException:
            ok = False
        return {'H': values, 'o_sequence': ok}, None, None, EXIT_OK
    if args.k is None:
        raise ValueException("oseq needs --k or --check")
    constraints = HFConstraints(
        h1=args.h1, minimum=_pairs(args.minimum), maximum=_pairs(args.maximum)
    )
    values = [H.to_list() for H in enumerate_o_sequences(args.k, constraints)]
    return values, ["H"], [[",".join(map(str, v))] for v in values], EXIT_OK


def cmd_bounds(instance, args):
    kind = args.kind
    values = args.values

    def ints(count):
        if len(values) != count:
            raise ValueException("bounds {} takes {} values".format(
                kind, count
            ))
        try:
            return [int(v) for v in values]
        except ValueError:
            raise ValueException("Expected integers: {}".format(values))

    if kind == "gorenstein":
        n, b, s = ints(3)
        payload = {'dim': gorenstein_locus_dim(n, b, s)}
    elif kind == "h3eq1":
        payload = {'bound': h3eq1_bound(_ints(",".join(values)))}
    elif kind == "nbound":
        tau, k, n = ints(3)
        payload = {'N': N_bound(tau, k, n)}
    elif kind == "areole":
        if len(values) < 3:
            raise ValueException("bounds areole takes tau k dims")
        tau, k = int(values[0]), int(values[1])
        payload = {'bound': areole_bound(tau, k, _ints(",".join(values[2:])))}
    elif kind == "fiber":
        n, a, b = ints(3)
        payload = {'dim': fiber_dim(n, a, b)}
    elif kind == "margin":
        if len(values) != 2:
            raise ValueException("bounds margin takes kind n")
        payload = counterexample_margin(values[0], int(values[1])).to_dict()
    else:
        t_zero, t_pos = ints(2)
        payload = dimension_estimates(
            t_zero, t_pos, base_dim=args.base, fiber_dim=args.fiber
        ).to_dict()
    return payload, None, None, EXIT_OK


def cmd_regular(instance, args):
    if instance.seed is None:
        raise ValueException("regular needs --seed")
    F = tau_power(monomial_regular_map(args.n, args.k), args.tau)

    if args.project:
        verdict = check_projected(
            F, args.k, args.project, args.trials, instance.seed,
            instance.max_draws
        )
    else:
        verdict = check_k_regular(F, args.k, args.trials, instance.seed)
    code = EXIT_OK if verdict.passed else EXIT_MISMATCH
    return verdict.to_dict(), None, None, code


def cmd_cache(instance, args):
    if args.action == "status":
        payload = instance.cache_status()
    elif args.action == "clear":
        payload = instance.cache_clear()
    else:
        payload = instance.cache_rebuild()
    code = EXIT_MISMATCH if payload.get('diffs') else EXIT_OK
    return payload, None, None, code


COMMANDS = {
    'tables': cmd_tables,
    'verify': cmd_verify,
    'enumerate': cmd_enumerate,
    'tangent': cmd_tangent,
    'apolar': cmd_apolar,
    'oseq': cmd_oseq,
    'bounds': cmd_bounds,
    'regular': cmd_regular,
    'cache': cmd_cache,
}


def main(argv=None):
    logging.config.dictConfig(default_logging_config)
    logging.getLogger().setLevel(logging.INFO)

    parser = setup_parser()
    args = parser.parse_args(argv)

    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)
    if not args.subcommand:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    config = RunConfig(
        subcommand=args.subcommand, seed=args.seed, jobs=args.jobs,
        output_format=args.output_format, cache_dir=args.cache_dir,
        cap=args.cap
    )
    logger.debug(config)
    settings = {
        'settings_file': args.settings,
        'path_prefix': args.pre_path,
    }

    for key in ("seed", "jobs", "cache_dir"):
        if getattr(config, key) is not None:
            settings[key] = getattr(config, key)
    if config.cap is not None:
        settings['node_cap'] = config.cap
    if config.jobs == 1:
        settings['threading_mode'] = None

    try:
        with Punctual(settings) as instance:
            payload, header, rows, code = COMMANDS[args.subcommand](
                instance, args
            )
    except ResourceCapException as e:
        logger.error("Resource cap {} exceeded: {}".format(e.cap, e))
        return EXIT_CAP
    except PunctualException as e:
        logger.error("{}".format(e))
        return EXIT_USAGE
    sys.stdout.write(render(payload, config.output_format, header, rows))
    sys.stdout.write("\n")
    return code
