"""Fixed-point combinatorics of the GL_3 fundamental domain F_gamma of affine
Springer fibers: Poincare polynomials, pavings, strata and generating series.

Execute with:
$ fundom [-h] [--format {json,csv,table}] [--out S] [-v] command ...

commands:
  poincare N1 N2 [--mode {closed,pipeline,both}]
                        Poincare polynomial of F_gamma for n = (N1, N2)
  fixed-points N1 N2 [--regions {none,triangle,complement,v,ak}]
                        fixed points, optionally labelled by a partition
  series N [--form {symmetric,literal}]
                        generating series up to total degree N against the
                        closed formula
  vertices N1 [N2 ...]  vertices of the regular family, rank up to 6
  classify N1 N2 MU1 MU2 MU3
                        Arthur-Kottwitz region of one coweight
  strata N1 N2 [--bound P] [--level-offset I]
                        classification table of a window
  svg FIGURE N1 N2 OUT  figure in {partition,hexagon,nonstandard,triangle,
                        complement} written to the SVG file OUT

Argument types
- N denotes a non-negative and P a positive integer argument.
- I denotes an integer argument.
- S denotes a string argument.

Output is JSON (default), CSV or a plain table, written to stdout or to the
file given by --out. JSON documents carry schema_version 1.0 and echo the
command, so that every payload can be recomputed from its own inputs.
Logging goes to stderr; the verbosity defaults to the environment variable
FUNDOM_VERBOSE (0, 1 or 2).

Exit codes: 0 on success, 2 on invalid arguments, 1 when a run time
invariant fails, a file cannot be written or the series comparison fails.

"""

# Licensed under the 3-clause BSD license.
# http://opensource.org/licenses/BSD-3-Clause
#
# Copyright (C) 2026 fundom contributors
# All rights reserved.

import argparse
import csv
import io
import json
import logging
import os
import sys

from tabulate import tabulate

from . import __version__
from .family import face_distance, maximal_parabolics, regular_family
from .figures import FIGURES, render
from .paving import (
    SIGN_ZERO,
    V_PRIORITY,
    V_TIE,
    closed_form,
    complement_region,
    complement_total,
    fundamental_fixed_points,
    poincare_pipeline,
    sorted_valuation,
    triangle_points,
    triangle_region,
    triangle_total,
    v_partition,
)
from .reduction import (
    BOUNDARY_CONVENTION,
    LABELS,
    TieBreak,
    Window,
    ak_classify,
    classify_points,
    default_window,
    levi_level,
    strata_table,
)
from .series import (
    coefficients,
    corollary_expression,
    direct_series,
    expand_rational,
    fold,
    poly_doc,
    poly_text,
    series_equal,
    symmetric_expression,
)
from .weyl import RootValuation, one_line

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"
MAX_VERTEX_RANK = 6
VERBOSE_ENV = "FUNDOM_VERBOSE"
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


CONFS = [
    "format",
    "out",
    "verbose",
    "mode",
    "regions",
    "form",
    "bound",
    "level_offset",
]

CONF_DEFAULT = dict(
    format="json",
    out=None,
    verbose=None,
    mode="both",
    regions="none",
    form="symmetric",
    # 3(2n_1+n_2) when not given
    bound=None,
    level_offset=0,
)


class configurations(object):
    """Configuration container for the function main."""

    def __init__(self, **kwargs):
        for k, v in kwargs.items():
            if k not in CONF_DEFAULT:
                raise ValueError("Invalid option `{}`".format(k))
            setattr(self, k, v)
        for k, v in CONF_DEFAULT.items():
            if k not in kwargs:
                setattr(self, k, v)

    def __str__(self):
        conf_dict = self.__dict__
        opts = [
            "{!s} = {!r}".format(opt, conf_dict[opt])
            for opt in CONFS
            if opt in conf_dict
        ]
        return "\n".join(opts)

    def __repr__(self):
        return self.__str__()

    def table(self):
        return tabulate([(opt, repr(getattr(self, opt))) for opt in CONFS],
                        headers=["option", "value"])


# ==============================================================================
# Command line argument parsing
# ==============================================================================

def _parse_positive_int(arg):
    if arg.isdigit() and int(arg) > 0:
        return int(arg)
    else:
        raise ValueError("Invalid integer option")


def _parse_nonnegative_int(arg):
    if arg.isdigit():
        return int(arg)
    else:
        raise ValueError("Invalid integer option")


def _parse_int(arg):
    return int(arg)


CONF_HELP = dict(
    format="output format",
    out="write the output to this file instead of stdout",
    verbose="increase logging verbosity, overrides " + VERBOSE_ENV,
    mode="closed formula, region pipeline or both compared",
    regions="partition used to label the fixed points",
    form=(
        "symmetric compares B(T1,T2)+B(T2,T1)-D with the full series, "
        "literal compares 2B-D with the folded series"
    ),
    bound="bound of the coordinates in the window, 3(2n_1+n_2) by default",
    level_offset="level of the window relative to 2n_1+n_2",
)
for conf in CONFS:
    CONF_HELP[conf] = CONF_HELP[conf] + ", default {}".format(CONF_DEFAULT[conf])

CONF_CUSTOMS = dict(
    format=dict(choices=["json", "csv", "table"]),
    out=dict(metavar="S"),
    verbose=dict(action="count"),
    mode=dict(choices=["closed", "pipeline", "both"]),
    regions=dict(choices=["none", "triangle", "complement", "v", "ak"]),
    form=dict(choices=["symmetric", "literal"]),
    bound=dict(type=_parse_nonnegative_int, metavar="N"),
    level_offset=dict(type=_parse_int, metavar="I"),
)

# Options attached to the subcommands, the rest are global
COMMAND_OPTS = dict(
    poincare=["mode"],
    fixed_points=["regions"],
    series=["form"],
    vertices=[],
    classify=[],
    strata=["bound", "level_offset"],
    svg=[],
)


def _add_opt(parser, opt):
    flags = ["--" + opt.replace("_", "-")]
    if opt == "verbose":
        flags.insert(0, "-v")
    parser.add_argument(
        *flags,
        dest=opt,
        default=CONF_DEFAULT[opt],
        help=CONF_HELP[opt],
        **CONF_CUSTOMS[opt],
    )


def _add_valuation(parser):
    parser.add_argument("n1", type=_parse_positive_int, metavar="N1",
                        help="valuation of the first simple root (P)")
    parser.add_argument("n2", type=_parse_positive_int, metavar="N2",
                        help="valuation of the second simple root (P)")


def build_parser():
    """The argparse parser; description and epilog come from the docstring."""
    descr_ind = __doc__.find("\n\n")
    epilog_ind = __doc__.find("commands:\n")
    epilog_ind = __doc__.find("\n\n", epilog_ind)
    description = __doc__[:descr_ind]
    epilog = __doc__[epilog_ind + 2:]

    parser = argparse.ArgumentParser(
        prog="fundom",
        description=description,
        epilog=epilog,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    for opt in ("format", "out", "verbose"):
        _add_opt(parser, opt)
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    cmd = sub.add_parser("poincare", help="Poincare polynomial of F_gamma")
    _add_valuation(cmd)

    cmd = sub.add_parser("fixed-points", help="fixed points of F_gamma")
    _add_valuation(cmd)

    cmd = sub.add_parser("series", help="generating series check")
    cmd.add_argument("order", type=_parse_positive_int, metavar="N",
                     help="truncation order, at least 2")

    cmd = sub.add_parser("vertices", help="regular family of any rank")
    cmd.add_argument("vals", nargs="+", type=_parse_positive_int,
                     metavar="N1", help="simple root valuations (P)")

    cmd = sub.add_parser("classify", help="Arthur-Kottwitz region of a point")
    _add_valuation(cmd)
    cmd.add_argument("mu", nargs=3, type=_parse_int, metavar="MU",
                     help="coordinates of the coweight (I)")

    cmd = sub.add_parser("strata", help="classification table of a window")
    _add_valuation(cmd)

    cmd = sub.add_parser("svg", help="write a figure")
    cmd.add_argument("figure", choices=FIGURES)
    _add_valuation(cmd)
    cmd.add_argument("path", metavar="OUT", help="output SVG file (S)")

    for name, action in sub.choices.items():
        for opt in COMMAND_OPTS[name.replace("-", "_")]:
            _add_opt(action, opt)
    return parser


def _default_verbosity():
    raw = os.environ.get(VERBOSE_ENV, "0")
    if raw not in ("0", "1", "2"):
        raise ValueError(
            "Invalid environment variable `{}`, expected 0, 1 or 2"
            .format(VERBOSE_ENV)
        )
    return int(raw)


def setup_logging(verbosity):
    """Single stderr handler; WARNING, INFO or DEBUG for 0, 1, 2."""
    logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT,
                        stream=sys.stderr, force=True)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(verbosity, 2)]
    logging.getLogger("fundom").setLevel(level)


# ==============================================================================
# Output
# ==============================================================================

def output_document(command, payload, **metadata):
    """Wrap a payload with the schema version, command echo and metadata."""
    meta = dict(
        version=__version__,
        sign_zero=SIGN_ZERO,
        v_priority=V_PRIORITY,
        v_tie=V_TIE,
        boundary=BOUNDARY_CONVENTION,
    )
    meta.update(metadata)
    return dict(schema_version=SCHEMA_VERSION, command=command,
                payload=payload, metadata=meta)


def _t_doc(p):
    return dict(t=coefficients(p), text=poly_text(p))


def format_rows(rows, fmt):
    """CSV or table text of a list of flat dicts."""
    if fmt == "table":
        return tabulate(rows, headers="keys") + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if rows:
        writer.writerow(list(rows[0]))
        for row in rows:
            writer.writerow([row[k] for k in rows[0]])
    return buf.getvalue()


def format_output(doc, rows, fmt):
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=4) + "\n"
    return format_rows(rows, fmt)


def _point_cols(mu):
    return dict(mu1=mu[0], mu2=mu[1], mu3=mu[2])


# ==============================================================================
# Commands
# ==============================================================================

def cmd_poincare(args, conf):
    rv, swapped = sorted_valuation((args.n1, args.n2))
    payload = dict(n=[args.n1, args.n2], mode=conf.mode)
    polys = {}
    if conf.mode in ("closed", "both"):
        polys["closed"] = closed_form(rv)
        payload["closed"] = poly_doc(polys["closed"])
    if conf.mode in ("pipeline", "both"):
        polys["pipeline"] = poincare_pipeline(rv)
        payload["pipeline"] = dict(
            triangle=poly_doc(triangle_total(rv)),
            complement=poly_doc(complement_total(rv)),
            total=poly_doc(polys["pipeline"]),
        )
    status = 0
    if conf.mode == "both":
        payload["equal"] = bool(polys["closed"] == polys["pipeline"])
        if not payload["equal"]:
            logger.error("closed formula and pipeline differ for %s", rv)
            status = 1

    width = max(len(coefficients(p)) for p in polys.values())
    rows = []
    for k in range(width):
        row = dict(degree_q=k, degree_t=2 * k)
        for name, p in sorted(polys.items()):
            c = coefficients(p)
            row[name] = c[k] if k < len(c) else 0
        rows.append(row)
    doc = output_document(
        dict(name="poincare", n1=args.n1, n2=args.n2, mode=conf.mode),
        payload,
        swapped=swapped,
        n_sorted=list(rv.simple_vals),
    )
    return doc, rows, status


def _label_points(rv, regions):
    """(point, labels) pairs for the fixed-points command."""
    if regions == "none":
        return [(mu, {}) for mu in fundamental_fixed_points(rv)], {}
    if regions == "triangle":
        return [(mu, dict(region=triangle_region(rv, mu),
                          complement=complement_region(rv, mu)))
                for mu in triangle_points(rv)], {}
    if regions == "complement":
        out = []
        for mu in triangle_points(rv):
            label = complement_region(rv, mu)
            if label is not None:
                out.append((mu, dict(region=label)))
        return out, {}
    if regions == "v":
        labels, overlap = v_partition(rv)
        return ([(mu, dict(region=labels[mu])) for mu in labels],
                dict(overlap=[list(mu) for mu in overlap]))
    pts = fundamental_fixed_points(rv)
    tie = TieBreak.default(rv, pts)
    index = classify_points(rv, pts, tie)
    return ([(mu, dict(region=str(LABELS[int(k)])))
             for mu, k in zip(pts, index)],
            dict(scale=tie.scale))


def cmd_fixed_points(args, conf):
    rv = RootValuation((args.n1, args.n2))
    if not rv.is_sorted:
        raise ValueError("Invalid arg `n`, fixed points require n1 <= n2")
    labelled, extra = _label_points(rv, conf.regions)
    points = [dict(point=list(mu), **labels) for mu, labels in labelled]
    payload = dict(n=[args.n1, args.n2], regions=conf.regions,
                   count=len(points), points=points)
    meta = {}
    if "overlap" in extra:
        payload["overlap"] = extra["overlap"]
    if "scale" in extra:
        meta["tie_scale"] = extra["scale"]
    rows = [dict(_point_cols(mu), **labels) for mu, labels in labelled]
    doc = output_document(
        dict(name="fixed-points", n1=args.n1, n2=args.n2,
             regions=conf.regions),
        payload,
        **meta,
    )
    return doc, rows, 0


def cmd_series(args, conf):
    order = args.order
    if order < 2:
        raise ValueError("Invalid arg `N`, the series needs N >= 2")
    direct = direct_series(order)
    if conf.form == "symmetric":
        left = expand_rational(symmetric_expression(), order)
        right = direct
    else:
        left = expand_rational(corollary_expression(), order)
        right = fold(direct)
    result = series_equal(left, right)
    keys = sorted(set(left.coeffs) | set(right.coeffs))
    coeffs = [dict(index=list(k), expansion=_t_doc(left.coefficient(*k)),
                   direct=_t_doc(right.coefficient(*k))) for k in keys]
    mismatch = None
    if not result.equal:
        mismatch = dict(index=list(result.index), expansion=_t_doc(result.left),
                        direct=_t_doc(result.right))
        logger.error("series differ first at %s", result.index)
    payload = dict(order=order, form=conf.form, equal=result.equal,
                   mismatch=mismatch, coefficients=coeffs)
    rows = [dict(n1=k[0], n2=k[1],
                 expansion=poly_text(left.coefficient(*k)),
                 direct=poly_text(right.coefficient(*k))) for k in keys]
    doc = output_document(
        dict(name="series", order=order, form=conf.form), payload)
    return doc, rows, 0 if result.equal else 1


def cmd_vertices(args, conf):
    if len(args.vals) + 1 > MAX_VERTEX_RANK:
        raise ValueError(
            "Invalid arg `vals`, rank must be <= {}".format(MAX_VERTEX_RANK))
    rv = RootValuation(tuple(args.vals))
    fam = regular_family(rv)
    verts = {one_line(w): list(mu) for w, mu in fam.items()}
    faces = [dict(block=sorted(face.block), distance=str(face_distance(fam, face)))
             for face in maximal_parabolics(rv.d)]
    payload = dict(n=list(rv.simple_vals), d=rv.d, level=fam.level,
                   vertices=verts, face_distances=faces)
    rows = [dict(sigma=one_line(w),
                 **{"x{}".format(i): c for i, c in enumerate(mu, start=1)})
            for w, mu in fam.items()]
    doc = output_document(dict(name="vertices", vals=list(args.vals)), payload)
    return doc, rows, 0


def cmd_classify(args, conf):
    rv = RootValuation((args.n1, args.n2))
    mu = tuple(args.mu)
    tie = TieBreak.default(rv, [mu])
    label = ak_classify(rv, mu, tie)
    varpi = label.face.pair(mu) if label.kind == "maximal" else None
    payload = dict(n=[args.n1, args.n2], point=list(mu), label=str(label),
                   nu=list(levi_level(label, mu)),
                   varpi=None if varpi is None else str(varpi))
    rows = [dict(_point_cols(mu), label=str(label), varpi=payload["varpi"])]
    doc = output_document(
        dict(name="classify", n1=args.n1, n2=args.n2, mu=list(mu)),
        payload,
        tie_scale=tie.scale,
    )
    return doc, rows, 0


def cmd_strata(args, conf):
    rv = RootValuation((args.n1, args.n2))
    window = default_window(rv, conf.level_offset)
    if conf.bound is not None:
        window = Window(window.level, conf.bound)
    tie = TieBreak.default(rv, window.points())
    table = strata_table(rv, window, tie)
    rows = [dict(_point_cols(r["point"]), label=str(r["label"]),
                 nu=" ".join(str(c) for c in r["nu"]),
                 varpi="" if r["varpi"] is None else str(r["varpi"]))
            for r in table]
    counts = {}
    for r in table:
        counts[str(r["label"])] = counts.get(str(r["label"]), 0) + 1
    payload = dict(
        n=[args.n1, args.n2],
        window=dict(level=window.level, bound=window.bound),
        counts=counts,
        rows=[dict(point=list(r["point"]), label=str(r["label"]),
                   nu=list(r["nu"]),
                   varpi=None if r["varpi"] is None else str(r["varpi"]))
              for r in table],
    )
    doc = output_document(
        dict(name="strata", n1=args.n1, n2=args.n2,
             bound=conf.bound, level_offset=conf.level_offset),
        payload,
        tie_scale=tie.scale,
    )
    return doc, rows, 0


def cmd_svg(args, conf):
    swapped = render(args.figure, (args.n1, args.n2), args.path)
    payload = dict(figure=args.figure, n=[args.n1, args.n2], path=args.path)
    doc = output_document(
        dict(name="svg", figure=args.figure, n1=args.n1, n2=args.n2,
             path=args.path),
        payload,
        swapped=swapped,
    )
    return doc, [payload], 0


COMMANDS = {
    "poincare": cmd_poincare,
    "fixed-points": cmd_fixed_points,
    "series": cmd_series,
    "vertices": cmd_vertices,
    "classify": cmd_classify,
    "strata": cmd_strata,
    "svg": cmd_svg,
}


# ==============================================================================
# Entry points
# ==============================================================================

def main(argv=None):
    """Run the command line interface and return the exit code.

    Invalid arguments end in ``SystemExit(2)`` raised by argparse.

    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        verbosity = (args.verbose if args.verbose is not None
                     else _default_verbosity())
    except ValueError as err:
        parser.error(str(err))
    setup_logging(verbosity)

    opts = {k: getattr(args, k) for k in CONFS if hasattr(args, k)}
    opts["verbose"] = verbosity
    conf = configurations(**opts)
    logger.info("configuration of %s:\n%s", args.command, conf.table())

    try:
        doc, rows, status = COMMANDS[args.command](args, conf)
    except ValueError as err:
        parser.error(str(err))
    except (RuntimeError, OSError) as err:
        logger.error("%s: %s", type(err).__name__, err)
        return 1

    text = format_output(doc, rows, conf.format)
    if conf.out is None:
        sys.stdout.write(text)
    else:
        try:
            with open(conf.out, "w", newline="") as f:
                f.write(text)
        except OSError as err:
            logger.error("cannot write %s: %s", conf.out, err)
            return 1
    return status


def run():
    sys.exit(main())
