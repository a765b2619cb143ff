"""Command-line entry point: ``cliquetheta {poly,roots,verify-nalpha,approximate}``.

Machine-readable output goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 2 unparsable input or no closed form available,
3 formula/oracle or scaling mismatch, 4 graph too large for the oracle,
5 root finder did not converge.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import closed_forms, grids, nalpha
from .graphs import CliqueTheta, InvalidSpec, SimpleGraph, build, spec_from_json, spec_to_json
from .oracle import TooLarge, chromatic_poly_oracle
from .poly import IntPoly, poly_from_json
from .roots import DEFAULT_TOL, NoConvergence, find_roots

log = logging.getLogger("cliquetheta")

EXIT_OK, EXIT_PARSE, EXIT_MISMATCH, EXIT_TOO_LARGE, EXIT_NO_CONVERGENCE = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _read_inline_or_file(value: str) -> str:
    if os.path.isfile(value):
        with open(value) as fh:
            return fh.read()
    return value


def _load_spec(args):
    if args.spec is None:
        return None
    return spec_from_json(_read_inline_or_file(args.spec))


def _load_graph6(args):
    if args.graph6 is None:
        return None
    try:
        return SimpleGraph.from_graph6(args.graph6)
    except Exception as exc:  # networkx raises several types on malformed input
        raise InvalidSpec(f"bad graph6 string {args.graph6!r}: {exc}") from exc


def _oracle(args, graph):
    return chromatic_poly_oracle(graph, cap=None if args.no_cap else args.cap)


def cmd_poly(args) -> int:
    spec, graph = _load_spec(args), _load_graph6(args)
    if (spec is None) == (graph is None):
        raise UsageError("give exactly one of --spec or --graph6")
    if graph is not None and args.method != "oracle":
        raise UsageError("graph6 input has no closed form; use --method oracle")
    out = {}
    if args.method in ("formula", "both"):
        out["formula"] = closed_forms.formula_poly(spec)
    if args.method in ("oracle", "both"):
        out["oracle"] = _oracle(args, graph if graph is not None else build(spec))
    if args.method != "both":
        (poly,) = out.values()
        print(poly.to_json())
        return EXIT_OK
    match = out["formula"] == out["oracle"]
    print(json.dumps({
        "formula": json.loads(out["formula"].to_json()),
        "oracle": json.loads(out["oracle"].to_json()),
        "match": match,
    }))
    if not match:
        log.error("formula and oracle disagree")
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_roots(args) -> int:
    spec, graph = _load_spec(args), _load_graph6(args)
    given = [x for x in (spec, graph, args.poly) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --spec, --graph6 or --poly")
    if args.poly is not None:
        try:
            poly = poly_from_json(_read_inline_or_file(args.poly))
        except (ValueError, KeyError, TypeError) as exc:
            raise InvalidSpec(f"bad polynomial JSON: {exc}") from exc
        if not isinstance(poly, IntPoly) or poly.degree < 1:
            raise InvalidSpec("--poly needs an integer polynomial of degree >= 1")
    elif graph is not None:
        poly = _oracle(args, graph)
    else:
        try:
            poly = closed_forms.formula_poly(spec)
        except closed_forms.NoClosedForm:
            poly = _oracle(args, build(spec))
    sys.stdout.write(find_roots(poly, args.tol).to_csv())
    return EXIT_OK


def cmd_verify_nalpha(args) -> int:
    if args.grid:
        specs = list(grids.scaling_grid())
    else:
        spec = _load_spec(args)
        if not isinstance(spec, CliqueTheta):
            raise UsageError("--spec must be a clique_theta family (or use --grid)")
        if spec.j != 1:
            raise UsageError("scaling needs j = 1")
        specs = [spec]
    print("spec\tp\tdegree\texact\tnumeric\tworst_distance")
    all_ok = True
    for spec in specs:
        for p in range(1, args.p_max + 1):
            exact = nalpha.verify_scaling_exact(spec, p).holds
            numeric, worst = nalpha.verify_scaling_numeric(spec, p, args.match_tol)
            ok = exact and numeric
            all_ok &= ok
            print(f"{spec_to_json(spec)}\t{p}\t{nalpha.interesting_factor_theta(spec).degree}\t"
                  f"{'ok' if exact else 'FAIL'}\t{'ok' if numeric else 'FAIL'}\t{worst:.3e}")
    log.info("%d specs x %d scale factors: %s", len(specs), args.p_max, "all pass" if all_ok else "FAILURES")
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _parse_target(text: str) -> complex:
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError as exc:
        raise InvalidSpec(f"target must be 're,im', got {text!r}") from exc


def cmd_approximate(args) -> int:
    target = _parse_target(args.target)
    budget = nalpha.Budget(args.budget_n, args.budget_m, args.budget_p, args.budget_nonuniform)
    cloud = [] if args.emit_cloud else None
    result = nalpha.approximate_root(target, args.eps, budget, cloud=cloud)
    if cloud is not None:
        with open(args.emit_cloud, "w") as fh:
            fh.write(nalpha.cloud_to_csv(cloud))
    if result.error > args.eps:
        log.warning("best error %.3e exceeds eps %.1e at this budget", result.error, args.eps)
    print(result.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquetheta", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def inputs(p, with_poly=False):
        p.add_argument("--spec", help="family spec JSON, inline or a file path")
        p.add_argument("--graph6", help="graph in graph6 format")
        if with_poly:
            p.add_argument("--poly", help='polynomial JSON {"coeffs": [...]}, inline or a file path')
        p.add_argument("--cap", type=int, default=18, help="oracle vertex cap")
        p.add_argument("--no-cap", action="store_true", help="lift the oracle vertex cap")

    p = sub.add_parser("poly", help="chromatic polynomial as JSON")
    inputs(p)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="formula")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", help="chromatic roots as CSV")
    inputs(p, with_poly=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify-nalpha", help="check root scaling for p = 1..p_max")
    p.add_argument("--spec")
    p.add_argument("--grid", action="store_true", help="sweep the built-in clique-theta grid")
    p.add_argument("--p-max", type=int, default=4)
    p.add_argument("--match-tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify_nalpha)

    p = sub.add_parser("approximate", help="search for a chromatic root near a target")
    p.add_argument("--target", required=True, help="re,im")
    p.add_argument("--eps", type=float, default=1e-6)
    p.add_argument("--budget-n", type=int, default=12)
    p.add_argument("--budget-m", type=int, default=12)
    p.add_argument("--budget-p", type=int, default=1)
    p.add_argument("--budget-nonuniform", type=int, default=0)
    p.add_argument("--emit-cloud", metavar="PATH", help="write every candidate root to this CSV")
    p.set_defaults(func=cmd_approximate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s: %(message)s",
    )
    try:
        return args.func(args)
    except (InvalidSpec, UsageError, closed_forms.NoClosedForm, nalpha.EmptySearch) as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except TooLarge as exc:
        log.error("%s", exc)
        return EXIT_TOO_LARGE
    except NoConvergence as exc:
        log.error("%s", exc)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
