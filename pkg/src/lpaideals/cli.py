"""Command-line front end.

Exit codes: 0 success, 1 invalid graph input, 2 bad arguments,
3 resource cap exceeded.  With --json, output is canonical JSON that is
byte-identical across runs on identical input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra
from .cycles import DEFAULT_CYCLE_CAP, condition_K, condition_L
from .graph import DirectedGraph, GraphError, ResourceCapError, parse_graph, serialize_graph
from .ideals import GradedIdeal, descriptor_sort_key, enumerate_primes, existence_report
from .lattice import (
    MAX_EXACT_VERTICES,
    AdmissiblePair,
    enumerate_HE,
    maximal_proper_elements,
    quotient_graph,
)


class UsageError(Exception):
    """A bad argument discovered after argparse (exit code 2)."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpaideals",
        description="Ideal structure of the Leavitt path algebra of a directed graph.",
        epilog=(
            "Graph files are JSON: "
            '{"vertices": [...], "edges": [{"id","src","dst"}...], '
            '"omega_bundles": [{"src","dst"}...]} (omega_bundles optional).'
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("graph", help="path to a graph JSON file")
        p.add_argument("--json", action="store_true", help="emit canonical JSON")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_CYCLE_CAP,
            help="resource cap for cycle and lattice enumeration (default %(default)s)",
        )
        p.add_argument(
            "--max-vertices",
            type=int,
            default=MAX_EXACT_VERTICES,
            help="refuse exact lattice enumeration above this many vertices (default %(default)s)",
        )

    common(sub.add_parser("analyze", help="full report: conditions, lattice, primes, maximals"))
    common(sub.add_parser("hsets", help="the lattice of hereditary saturated sets"))
    common(sub.add_parser("primes", help="all prime-ideal descriptors"))
    common(sub.add_parser("maximals", help="maximal ideals, graded and non-graded families"))

    quot = sub.add_parser("quotient", help="quotient graph at an admissible pair (H, S)")
    common(quot)
    quot.add_argument("--H", default="", help="comma-separated vertices of H (empty for the zero ideal)")
    quot.add_argument("--S", default="", help="comma-separated breaking vertices kept in S")

    check = sub.add_parser("check", help="check Condition (L) or (K)")
    common(check)
    check.add_argument("--condition", choices=("L", "K"), required=True)

    mul = sub.add_parser(
        "mul",
        help="multiply two algebra elements",
        epilog=(
            "Element grammar (whitespace-tokenised): a term is an optional rational "
            "coefficient, then a real path as edge ids (or one vertex id), then a ghost "
            "path as edge ids each ending in '*'; an optional '|' separates the parts. "
            "Terms are joined by '+' or '-' tokens. Examples: 'u', 'a b', 'a b | c*', "
            "'c*', '2/3 a - b | b*'. Ids containing whitespace, '|', or a trailing '*', "
            "and ids that look like numbers at the start of a term, are not addressable."
        ),
    )
    common(mul)
    mul.add_argument("--lhs", required=True, help="left factor")
    mul.add_argument("--rhs", required=True, help="right factor")
    return parser


def _load_graph(path: str) -> DirectedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read graph file: {exc}") from None
    return parse_graph(text)


def _emit_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _fmt_set(vs) -> str:
    return "{" + ",".join(sorted(vs)) + "}"


def _fmt_pair(pair: AdmissiblePair) -> str:
    return f"I({_fmt_set(pair.H)}, {_fmt_set(pair.S)})"


def _fmt_descriptor(d) -> str:
    if isinstance(d, GradedIdeal):
        return _fmt_pair(d.pair)
    return f"I({_fmt_set(d.H)}, B_H) + <f({' '.join(d.cycle.edges)})>, {d.poly}"


def _fmt_condition(name: str, report) -> str:
    if report.holds:
        return f"condition ({name}): holds"
    return f"condition ({name}): fails, witness cycle [{' '.join(report.witness.edges)}]"


def _split_vertices(g: DirectedGraph, raw: str, flag: str) -> frozenset[str]:
    if not raw:
        return frozenset()
    parts = [p for p in raw.split(",") if p]
    for v in parts:
        if v not in g.vertices:
            raise UsageError(f"{flag}: unknown vertex {v!r}")
    return frozenset(parts)


def cmd_analyze(g: DirectedGraph, args) -> None:
    lat = enumerate_HE(g, args.cap, args.max_vertices)
    cond_l = condition_L(g, args.cap)
    cond_k = condition_K(g, args.cap)
    report = existence_report(g, args.cap, args.max_vertices, args.cap)
    primes = enumerate_primes(g, args.cap, args.max_vertices, args.cap)
    if args.json:
        _emit_json(
            {
                "condition_L": cond_l.to_json_dict(),
                "condition_K": cond_k.to_json_dict(),
                "hereditary_saturated": lat.to_json_dict(),
                "maximality": report.to_json_dict(),
                "primes": [d.to_json_dict() for d in sorted(primes, key=descriptor_sort_key)],
            }
        )
        return
    print(
        f"graph: {len(g.vertices)} vertices, {len(g.edges)} edges, "
        f"{len(g.omega_bundles)} omega-bundles"
    )
    print(_fmt_condition("L", cond_l))
    print(_fmt_condition("K", cond_k))
    sets = ", ".join(_fmt_set(s) for s in lat.sets)
    print(f"hereditary saturated sets ({len(lat.sets)}): {sets}")
    print(
        "maximal proper: "
        + (", ".join(_fmt_set(s) for s in maximal_proper_elements(lat)) or "none")
    )
    _print_maximality(report)
    print(f"primes ({len(primes)}):")
    for d in primes:
        print(f"  {_fmt_descriptor(d)}")


def _print_maximality(report) -> None:
    print(
        "graded maximal ideals: "
        + (", ".join(_fmt_pair(p) for p in report.graded_maximals) or "none")
    )
    families = ", ".join(
        f"({_fmt_set(f.H)}, cycle [{' '.join(f.cycle.edges)}])"
        for f in report.nongraded_maximal_families
    )
    print("non-graded maximal families: " + (families or "none"))
    print(f"exists maximal ideal: {_yn(report.exists_maximal)}")
    print(f"every ideal below a maximal ideal: {_yn(report.every_ideal_below_maximal)}")
    print(f"every maximal ideal graded: {_yn(report.every_maximal_graded)}")
    unique = "none" if report.unique_maximal is None else _fmt_descriptor(report.unique_maximal)
    print(f"unique maximal ideal: {unique}")


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_hsets(g: DirectedGraph, args) -> None:
    lat = enumerate_HE(g, args.cap, args.max_vertices)
    if args.json:
        _emit_json(lat.to_json_dict())
        return
    print(f"hereditary saturated sets ({len(lat.sets)}):")
    for s in lat.sets:
        print(f"  {_fmt_set(s)}")
    print(
        "maximal proper: "
        + (", ".join(_fmt_set(s) for s in maximal_proper_elements(lat)) or "none")
    )


def cmd_primes(g: DirectedGraph, args) -> None:
    primes = enumerate_primes(g, args.cap, args.max_vertices, args.cap)
    if args.json:
        _emit_json([d.to_json_dict() for d in primes])
        return
    print(f"primes ({len(primes)}):")
    for d in primes:
        print(f"  {_fmt_descriptor(d)}")


def cmd_maximals(g: DirectedGraph, args) -> None:
    report = existence_report(g, args.cap, args.max_vertices, args.cap)
    if args.json:
        _emit_json(report.to_json_dict())
        return
    _print_maximality(report)


def cmd_quotient(g: DirectedGraph, args) -> None:
    hset = _split_vertices(g, args.H, "--H")
    sset = _split_vertices(g, args.S, "--S")
    try:
        pair = AdmissiblePair(g, hset, sset)
    except GraphError as exc:
        raise UsageError(f"inadmissible pair: {exc}") from None
    sys.stdout.write(serialize_graph(quotient_graph(g, pair)))


def cmd_check(g: DirectedGraph, args) -> None:
    report = (condition_L if args.condition == "L" else condition_K)(g, args.cap)
    if args.json:
        _emit_json(report.to_json_dict())
        return
    print(_fmt_condition(args.condition, report))


def cmd_mul(g: DirectedGraph, args) -> None:
    try:
        lhs = algebra.parse_element(g, args.lhs)
        rhs = algebra.parse_element(g, args.rhs)
    except GraphError as exc:
        raise UsageError(f"bad element expression: {exc}") from None
    product = lhs * rhs
    if args.json:
        _emit_json(
            {
                "result": algebra.render_element(product),
                "terms": [
                    {
                        "coeff": str(m.coeff),
                        "alpha": {"source": m.alpha.source, "edges": list(m.alpha.edges)},
                        "beta": {"source": m.beta.source, "edges": list(m.beta.edges)},
                    }
                    for m in product.terms
                ],
            }
        )
        return
    print(algebra.render_element(product))


_COMMANDS = {
    "analyze": cmd_analyze,
    "hsets": cmd_hsets,
    "primes": cmd_primes,
    "maximals": cmd_maximals,
    "quotient": cmd_quotient,
    "check": cmd_check,
    "mul": cmd_mul,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap < 1 or args.max_vertices < 1:
        print("error: --cap and --max-vertices must be positive", file=sys.stderr)
        return 2
    try:
        g = _load_graph(args.graph)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        _COMMANDS[args.command](g, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
