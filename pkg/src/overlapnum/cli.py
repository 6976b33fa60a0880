"""Command-line front end.

Exit codes: 0 yes/valid/exact, 1 no/invalid, 2 search budget exhausted,
3 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import closed_forms as cf
from . import reductions as rd
from .graph import caterpillar_graph, complete_graph, complete_multipartite_graph, cycle_graph, path_graph
from .io import (FormatError, format_graph, format_representation, format_targets,
                 parse_dimacs, parse_graph, parse_representation, parse_targets)
from .representation import containment_count, verify
from .search import (SearchBudget, cf_overlap_number_exact, containment_extension_solve,
                     intersection_number_exact, overlap_number_exact, overlap_extension_solve)
from .solve import solve_auto

EXIT_OK, EXIT_NO, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _budget(args) -> SearchBudget:
    return SearchBudget(max_universe=args.max_universe, node_limit=args.node_limit)


def cmd_solve(args) -> int:
    g = parse_graph(_read(args.graph))
    budget = _budget(args)
    if args.exact:
        out = overlap_number_exact(g, budget)
        if not out.exact:
            print("budget exhausted", file=sys.stderr)
            return EXIT_BUDGET
        value, witness, method, exact = out.value, out.witness, "exact-search", True
    else:
        res = solve_auto(g, budget)
        value, witness, method, exact = res.value, res.witness, res.method, res.exact
    print(value if exact else f"<= {value}")
    print(f"method: {method}", file=sys.stderr)
    text = format_representation(witness)
    if args.witness:
        _write(args.witness, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if exact else EXIT_BUDGET


def cmd_construct(args) -> int:
    p = args.params
    kind = args.family
    if kind == "clique":
        (n,) = p
        sr, g = cf.clique_representation(n), complete_graph(n)
    elif kind == "kpartite":
        sr, g = cf.kpartite_representation(p), complete_multipartite_graph(p)
    elif kind == "path":
        (n,) = p
        sr, g = cf.path_representation(n), path_graph(n)
    elif kind == "cycle":
        (n,) = p
        sr, g = cf.cycle_representation(n), cycle_graph(n)
    else:
        # leaf count per spine vertex; spine ids first, then leaves
        g = caterpillar_graph(p)
        k = len(p)
        leaves, nxt = [], k
        for c in p:
            leaves.append(list(range(nxt, nxt + c)))
            nxt += c
        sr = cf.caterpillar_representation(list(range(k)), leaves, g)
    assert verify(g, sr.representation).valid
    _write(args.output, format_representation(sr.representation))
    if args.graph_out:
        _write(args.graph_out, format_graph(g))
    print(f"size {sr.claimed_size}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    r = parse_representation(_read(args.rep))
    report = verify(g, r)
    if report.valid:
        print(f"valid (size {r.size})")
        if args.count_containments:
            print(f"containments {containment_count(g, r)}")
        return EXIT_OK
    print(f"invalid ({len(report.violations)} violating pairs)")
    for bad in report.violations:
        want = "adjacent" if bad.adjacent else "nonadjacent"
        print(f"  {bad.u} {bad.v}: {want} but sets are {bad.relation.value}")
    return EXIT_NO


def cmd_extend(args) -> int:
    g = parse_graph(_read(args.graph))
    r = parse_representation(_read(args.rep))
    targets = parse_targets(args.targets)
    solver = containment_extension_solve if args.containment else overlap_extension_solve
    s = solver(g, r, targets)
    if s is None:
        print("NONE")
        return EXIT_NO
    print(" ".join(map(str, sorted(s))))
    return EXIT_OK


def cmd_reduce(args) -> int:
    src = Path(args.input)
    prefix = args.out or str(src.with_suffix("")) + ".reduced"
    if args.problem in ("nae3sat", "3sat"):
        f = parse_dimacs(_read(args.input))
        if args.problem == "nae3sat":
            if f.mode is not rd.SatMode.NAE:
                f = rd.CnfInstance(f.num_vars, f.clauses, rd.SatMode.NAE)
            inst = rd.nae3sat_to_overlap_extension(f)
        else:
            inst = rd.threesat_to_containment_extension(f)
        _write(prefix + ".graph", format_graph(inst.graph))
        _write(prefix + ".rep", format_representation(inst.representation))
        _write(prefix + ".targets", format_targets(inst.target))
        print(f"wrote {prefix}.graph {prefix}.rep {prefix}.targets ({inst.kind.value})")
        return EXIT_OK
    g = parse_graph(_read(args.input))
    if args.k is None:
        raise FormatError("--k is required")
    if args.problem == "intnum":
        h, k2 = rd.intersection_to_cf_overlap(g, args.k)
        _write(prefix + ".graph", format_graph(h))
        print(f"k {k2}")
        return EXIT_OK
    if args.l is None:
        raise FormatError("--l is required")
    inst = rd.cf_to_lcontainment(g, args.k, args.l)
    _write(prefix + ".graph", format_graph(inst.graph))
    print(f"k {inst.k}")
    print(f"l {inst.l}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = parse_graph(_read(args.graph))
    fn = {"overlap": overlap_number_exact, "cf": cf_overlap_number_exact,
          "intersection": intersection_number_exact}[args.kind]
    out = fn(g, _budget(args))
    if not out.exact:
        print("budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    print(out.value)
    return EXIT_OK


def _add_budget(p):
    p.add_argument("--max-universe", type=int, default=None)
    p.add_argument("--node-limit", type=int, default=SearchBudget().node_limit)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="overlapnum", description="Overlap representations of graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="overlap number with a verified witness")
    p.add_argument("graph")
    p.add_argument("--exact", action="store_true", help="always run the exact search")
    p.add_argument("--witness", "-o", help="write the witness here instead of stdout")
    _add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("construct", help="closed-form minimum representation")
    p.add_argument("family", choices=["clique", "kpartite", "path", "cycle", "caterpillar"])
    p.add_argument("params", type=int, nargs="+",
                   help="n, part sizes, or leaf counts along the spine")
    p.add_argument("--output", "-o")
    p.add_argument("--graph-out", help="also write the matching graph")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a representation against a graph")
    p.add_argument("graph")
    p.add_argument("rep")
    p.add_argument("--count-containments", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="find a set to add for a new vertex")
    p.add_argument("graph")
    p.add_argument("rep")
    p.add_argument("--targets", required=True, help="comma-separated vertex ids")
    p.add_argument("--containment", action="store_true",
                   help="treat the input as a containment representation")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("reduce", help="generate a reduction instance")
    p.add_argument("problem", choices=["nae3sat", "3sat", "intnum", "cfl"])
    p.add_argument("input")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--out", help="output file prefix")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force exact values")
    p.add_argument("kind", choices=["overlap", "cf", "intersection"])
    p.add_argument("graph")
    _add_budget(p)
    p.set_defaults(func=cmd_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
