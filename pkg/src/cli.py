"""
Command-line interface.

    randic charpoly --graph petersen
    randic energy --graph windmill:5,2 --json
    randic perm --catalog G_7
    randic census --n 10 --output cubic10.g6
    randic classes --key randic --tol 1e-6
    randic families --probe 2.5 2.7
    randic verify --all
"""

import argparse
import json
import logging
import sys
from typing import Any, List, Optional, Tuple

import pandas as pd

from . import __version__
from .census_catalog import build_catalog, catalog_graph, enumerate_cubic, equivalence_classes, verify_tables
from .config import configure_logging
from .exact_poly import (
    RatPolynomial,
    charpoly_adjacency,
    randic_charpoly,
    randic_charpoly_cycle,
    randic_charpoly_regular,
    randic_charpoly_windmill,
)
from .exceptions import InvalidParameterError, RandicError
from .families_density import FamilySpec, closed_form_re, density_probe, verify_closed_forms
from .graph_core import Graph, graph6_encode
from .permanent import permanent_of_graph
from .reporting import VerificationReport
from .spectral import energy_report
from .utils.export_helpers import ExportHelper
from .utils.graph_parsers import GraphSpecParser, write_graph6_file
from .verification import (
    verify_census,
    verify_classes,
    verify_factorizations,
    verify_petersen,
    verify_windmill_identity,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VERIFY_CHECKS = ("tables", "closed-forms", "census", "classes", "windmill", "factorizations", "petersen")


def _emit(payload: Any):
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _parse_graph(text: str) -> Graph:
    return GraphSpecParser().parse(text)


def _randic_polynomial(text: str, graph: Graph) -> Tuple[RatPolynomial, str]:
    form, _, params = text.strip().partition(":")
    form = form.strip().lower()
    if form == "windmill":
        m, n = (int(p) for p in params.split(","))
        return randic_charpoly_windmill(m, n), "windmill"
    if form == "cycle":
        return randic_charpoly_cycle(int(params)), "cycle"
    k = graph.regular_degree
    if k:
        return randic_charpoly_regular(graph, k), "regular"
    return randic_charpoly(graph), "general"


def cmd_charpoly(args: argparse.Namespace) -> int:
    polynomial = charpoly_adjacency(_parse_graph(args.graph))
    if args.json:
        _emit({"graph": args.graph, "charpoly": polynomial.to_text(), "coefficients": polynomial.to_json()})
    else:
        print(polynomial.to_text())
    return EXIT_OK


def cmd_randic_charpoly(args: argparse.Namespace) -> int:
    graph = _parse_graph(args.graph)
    polynomial, method = _randic_polynomial(args.graph, graph)
    if args.json:
        _emit(
            {
                "graph": args.graph,
                "randic_charpoly": polynomial.to_text(),
                "coefficients": polynomial.to_json(),
                "method": method,
            }
        )
    else:
        print(polynomial.to_text())
        print(f"method: {method}")
    return EXIT_OK


def cmd_energy(args: argparse.Namespace) -> int:
    report = energy_report(_parse_graph(args.graph), args.graph, allow_shortcut=not args.no_shortcut)
    if args.json:
        print(report.to_json())
    else:
        print(f"graph: {report.graph_id}")
        print(f"n: {report.n}")
        print(f"edges: {report.edges}")
        print(f"energy: {report.energy:.12f}")
        print(f"randic_energy: {report.randic_energy:.12f}")
        print(f"method: {report.method}")
    return EXIT_OK


def cmd_perm(args: argparse.Namespace) -> int:
    if args.catalog:
        label, graph = args.catalog, catalog_graph(args.catalog)
    else:
        label, graph = args.graph, _parse_graph(args.graph)
    value = permanent_of_graph(graph)
    if args.json:
        _emit({"graph": label, "permanent": str(value)})
    else:
        print(value)
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    graphs = enumerate_cubic(args.n)
    rows = [
        {
            "index": i,
            "graph6": graph6_encode(g),
            "connected": g.is_connected(),
            "charpoly": charpoly_adjacency(g).to_text(),
        }
        for i, g in enumerate(graphs, start=1)
    ]
    if args.output:
        write_graph6_file(graphs, args.output)
    if args.json:
        _emit({"n": args.n, "count": len(rows), "graphs": rows})
    else:
        print(ExportHelper().render_table(pd.DataFrame(rows)))
        print(f"{len(rows)} cubic graphs on {args.n} vertices up to cospectrality")
    return EXIT_OK


def cmd_classes(args: argparse.Namespace) -> int:
    classes = equivalence_classes(build_catalog(), args.key, args.tol)
    if args.json:
        _emit({"key": classes.key, "tol": classes.tol, "classes": [list(c) for c in classes.classes]})
    else:
        for members in classes.classes:
            print(", ".join(members))
    return EXIT_OK


def cmd_families(args: argparse.Namespace) -> int:
    if args.closed_form:
        spec = FamilySpec.parse(args.closed_form)
        value = closed_form_re(spec)
        if args.json:
            _emit(
                {
                    "family": spec.family,
                    "params": list(spec.params),
                    "re_exact": value.to_text(),
                    "re_float": value.value,
                }
            )
        else:
            print(f"{spec}: RE = {value} = {value.value:.12f}")
        return EXIT_OK
    if args.probe is None:
        raise InvalidParameterError("families needs --probe LO HI or --closed-form FAMILY:PARAMS")
    lo, hi = args.probe
    witnesses = density_probe(lo, hi, cap=args.cap, limit=args.limit)
    if args.json:
        _emit([w.to_json() for w in witnesses])
    else:
        for w in witnesses:
            print(f"{w.re_float:.12f}  {w.spec}  {w.re}")
        print(f"{len(witnesses)} witnesses in [{lo}, {hi}]")
    return EXIT_OK


def _run_check(name: str, tol: Optional[float]) -> VerificationReport:
    # --tol applies to printed-table and closed-form comparisons only.
    if name == "tables":
        return verify_tables(tol)
    if name == "closed-forms":
        return verify_closed_forms() if tol is None else verify_closed_forms(tol=tol)
    checks = {
        "census": verify_census,
        "classes": verify_classes,
        "windmill": verify_windmill_identity,
        "factorizations": verify_factorizations,
        "petersen": verify_petersen,
    }
    return checks[name]()


def cmd_verify(args: argparse.Namespace) -> int:
    selected = [name for name in VERIFY_CHECKS if getattr(args, name.replace("-", "_"))]
    if args.all or not selected:
        selected = list(VERIFY_CHECKS)
    report = VerificationReport("verify")
    for name in selected:
        report = report.merge(_run_check(name, args.tol))
    if args.json:
        _emit(report.to_dict())
    else:
        print(report.render(only_failures=args.failures_only))
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print machine-readable JSON")
    common.add_argument("--verbose", "-v", action="store_true", help="Log progress at INFO level")

    parser = argparse.ArgumentParser(
        prog="randic",
        description="Energy, Randić energy, permanents and cubic graph catalogs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="Exact characteristic polynomial")
    p.add_argument("--graph", required=True, help="Graph, e.g. cycle:5, windmill:5,3, kmn-e:3,4, petersen")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("randic-charpoly", parents=[common], help="Exact Randić characteristic polynomial")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_randic_charpoly)

    p = sub.add_parser("energy", parents=[common], help="Energy and Randić energy")
    p.add_argument("--graph", required=True)
    p.add_argument("--no-shortcut", action="store_true", help="Always diagonalize the Randić matrix")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("perm", parents=[common], help="Permanent of the adjacency matrix")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph")
    source.add_argument("--catalog", help="Catalog entry name, e.g. G_7")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("census", parents=[common], help="Cubic graphs up to cospectrality")
    p.add_argument("--n", type=int, required=True, help="Even order, 4..10")
    p.add_argument("--output", help="Write representatives to this graph6 file")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classes", parents=[common], help="Energy classes of the order-10 catalog")
    p.add_argument("--key", choices=["energy", "randic"], default="energy")
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("families", parents=[common], help="Closed forms and the density probe")
    p.add_argument("--probe", nargs=2, type=float, metavar=("LO", "HI"))
    p.add_argument("--closed-form", metavar="FAMILY:PARAMS", help="e.g. windmill4:3 or kmn-e:3,3")
    p.add_argument("--limit", type=int, default=None, help="Witnesses per family")
    p.add_argument("--cap", type=int, default=None, help="Largest family parameter")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", parents=[common], help="Reproduce the reference tables and identities")
    for name in VERIFY_CHECKS:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--all", action="store_true")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--failures-only", action="store_true", help="List failing lines only")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name. If None, uses sys.argv.

    Returns:
        Exit code: 0 success, 1 failed verification, 2 usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    configure_logging("INFO" if args.verbose else None)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RandicError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
