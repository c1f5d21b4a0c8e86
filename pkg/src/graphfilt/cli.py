"""Command-line interface: design, order, response, apply.

Exit codes: 0 success, 2 bad specification, 3 unreadable/unparsable input,
4 dimension mismatch, 5 numerical-stability failure.  All file output uses
fixed float formatting (17 significant digits, lowercase exponent) so
identical inputs produce byte-identical artifacts.
"""

import argparse
import json
import sys

import numpy as np

from .design import design_filter, from_document, to_document
from .errors import (
    DimensionError,
    DomainError,
    GraphFiltError,
    ParseError,
    SpecError,
    StabilityError,
)
from .graphs import (
    apply_rational_matrix_filter,
    apply_spectral_filter,
    load_edge_list,
    load_signal,
    spectral_decomposition,
)
from .prototype import BANDS, FAMILIES, DesignSpec
from .response import identity_response
from .svg import write_response_svg


def _fnum(x) -> str:
    return "%.17g" % float(x)


def _parse_edges(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected four comma-separated edges a,b,c,d")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_spec_arguments(p):
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--band", default="highpass", choices=BANDS)
    p.add_argument("--lp", dest="lambda_p", type=float,
                   help="passband cutoff graph frequency")
    p.add_argument("--ls", dest="lambda_s", type=float,
                   help="stopband cutoff graph frequency")
    p.add_argument("--edges", type=_parse_edges,
                   help="band edges a,b,c,d for bandpass/bandstop")
    p.add_argument("--rp", dest="rp_db", type=float, default=1.0,
                   help="maximum passband attenuation in dB")
    p.add_argument("--as", dest="as_db", type=float, default=30.0,
                   help="minimum stopband attenuation in dB")
    p.add_argument("--order", dest="order_override", type=int, default=None,
                   help="override the computed minimal order")


def _spec_from_args(args) -> DesignSpec:
    return DesignSpec(
        family=args.family,
        band=args.band,
        lambda_p=args.lambda_p,
        lambda_s=args.lambda_s,
        band_edges=args.edges,
        rp_db=args.rp_db,
        as_db=args.as_db,
        order_override=args.order_override,
    )


def _load_design(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read design document {path}: {exc}") from exc
    return from_document(doc)


def cmd_design(args) -> int:
    design = design_filter(_spec_from_args(args))
    doc = to_document(design)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print(f"N = {design.order}")
    print(f"composed_order = {design.composed_order}")
    for label, lam, kind in design.band_edges_with_targets:
        att = design.attenuation_at(lam)
        target = f"<= {_fnum(args.rp_db)}" if kind == "pass" else f">= {_fnum(args.as_db)}"
        print(f"att({label}={_fnum(lam)}) = {_fnum(att)} dB  (target {target})")
    print(f"wrote {args.out}")
    return 0


def cmd_order(args) -> int:
    design = design_filter(_spec_from_args(args))
    print(f"minimum_order = {_fnum(design.trace.min_order_real)}")
    print(f"N = {design.order}")
    print(f"composed_order = {design.composed_order}")
    return 0


def cmd_response(args) -> int:
    if args.grid < 2:
        raise SpecError("--grid must be at least 2")
    design = _load_design(args.design)
    lam = np.linspace(0.0, 2.0, args.grid)
    h = np.atleast_1d(design.response_at(lam))
    att = np.atleast_1d(design.attenuation_at(lam))
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("lambda,H,att_dB\n")
        for row in zip(lam, h, att):
            fh.write(",".join(_fnum(v) for v in row) + "\n")
    print(f"wrote {args.out}")
    if args.svg:
        write_response_svg(args.svg, list(lam), list(h), list(att))
        print(f"wrote {args.svg}")
    return 0


def cmd_apply(args) -> int:
    if args.design is None and not args.identity:
        raise SpecError("apply needs --design FILE or --identity")
    graph = load_edge_list(args.graph)
    signal = load_signal(args.signal)
    if len(signal) != graph.node_count:
        raise DimensionError(
            f"signal length {len(signal)} does not match graph with {graph.node_count} nodes"
        )
    if args.identity:
        design = None
        response = identity_response()
    else:
        design = _load_design(args.design)
        response = design.response
    if args.method == "matrix":
        if design is not None and design.mapping is not None:
            raise SpecError("matrix application is only defined for highpass prototypes")
        out = apply_rational_matrix_filter(graph, response, signal)
    else:
        dec = spectral_decomposition(graph)
        if design is None:
            h = lambda lam: np.ones_like(np.asarray(lam, dtype=float))
        else:
            h = design.frequency_response()
        out = apply_spectral_filter(dec, h, signal)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        for v in out:
            fh.write(_fnum(v) + "\n")
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphfilt",
        description="Design IIR graph filters and apply them to signals on graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="design a filter and write a JSON design document")
    _add_spec_arguments(p)
    p.add_argument("--out", default="design.json", help="output design document path")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("order", help="print the minimal order for a specification")
    _add_spec_arguments(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("response", help="sample a designed response over [0, 2]")
    p.add_argument("--design", required=True, help="design document path")
    p.add_argument("--grid", type=int, default=201, help="number of sample points")
    p.add_argument("--out", default="response.csv", help="output CSV path")
    p.add_argument("--svg", default=None, help="optional SVG plot path")
    p.set_defaults(func=cmd_response)

    p = sub.add_parser("apply", help="filter a graph signal with a designed filter")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--signal", required=True, help="signal file (one value per line)")
    p.add_argument("--design", default=None, help="design document path")
    p.add_argument("--identity", action="store_true", help="bypass design: identity filter")
    p.add_argument("--method", choices=("spectral", "matrix"), default="spectral")
    p.add_argument("--out", default="filtered.csv", help="output signal path")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, DomainError) as exc:
        print(f"error: spec: {exc}", file=sys.stderr)
        return 2
    except (ParseError, OSError) as exc:
        print(f"error: input: {exc}", file=sys.stderr)
        return 3
    except DimensionError as exc:
        print(f"error: dimensions: {exc}", file=sys.stderr)
        return 4
    except StabilityError as exc:
        print(f"error: stability: {exc}", file=sys.stderr)
        return 5
    except GraphFiltError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())
