"""Command line interface.

Exit codes: 0 success, 1 a verification answered "invalid" (monochromatic
witness found, or a certification mismatch), 2 bad input, 3 a brute-force
cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys

from . import colouring as colouring_mod
from . import oracle, powers, reduction
from .colouring import (
    ChromaticResult,
    biclique_colour_cycle,
    biclique_colour_path,
    read_colouring,
    star_colour_cycle,
    star_colour_path,
    write_colouring,
)
from .graphs import (
    CapacityError,
    Graph,
    InputError,
    read_graph,
    write_dot,
    write_graph,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

_POWER_LABEL = re.compile(r"^([PC])_(\d+)\^(\d+)$")


def _chromatic_result(kind: str, n: int, k: int, mode: str) -> ChromaticResult:
    table = {
        ("path", "biclique"): biclique_colour_path,
        ("cycle", "biclique"): biclique_colour_cycle,
        ("path", "star"): star_colour_path,
        ("cycle", "star"): star_colour_cycle,
    }
    return table[(kind, mode)](n, k)


def _closed_form_sets(kind: str, n: int, k: int, mode: str):
    if mode == "biclique":
        fam = powers.path_bicliques(n, k) if kind == "path" \
            else powers.cycle_bicliques(n, k)
        return [b.vertices for b in fam]
    return powers.path_stars(n, k) if kind == "path" \
        else powers.cycle_stars(n, k)


def _power_graph_params(g: Graph):
    """(kind, n, k) when the label marks g as a generated power graph and the
    adjacency matches the regenerated one, else None."""
    if not g.label:
        return None
    m = _POWER_LABEL.match(g.label)
    if not m:
        return None
    kind = "path" if m.group(1) == "P" else "cycle"
    n, k = int(m.group(2)), int(m.group(3))
    if n != g.n:
        return None
    regen = powers.power_path(n, k) if kind == "path" else powers.power_cycle(n, k)
    if regen.adj != g.adj:
        return None
    return kind, n, k


def _certificate_text(result: ChromaticResult) -> str:
    if result.ab is not None:
        return f"a={result.ab.a};b={result.ab.b}"
    if result.universal_witness is not None:
        return "universal=" + "-".join(str(v) for v in result.universal_witness)
    return ""


# ---------------------------------------------------------------------------
# subcommands

def cmd_gen(args) -> int:
    if args.kind == "circulant":
        if args.distances is None:
            raise InputError("circulant needs --distances")
        distances = [int(tok) for tok in args.distances.split(",") if tok]
        g = powers.circulant(args.n, distances)
    else:
        if args.k is None:
            raise InputError(f"{args.kind} needs --k")
        g = powers.power_path(args.n, args.k) if args.kind == "path" \
            else powers.power_cycle(args.n, args.k)
    if args.out:
        write_graph(g, args.out)
    else:
        json.dump({"n": g.n, "edges": [[i, j] for i, j in g.edges()],
                   "label": g.label}, sys.stdout, indent=1)
        print()
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(write_dot(g))
    return EXIT_OK


def cmd_chromatic(args) -> int:
    result = _chromatic_result(args.kind, args.n, args.k, args.mode)
    print(result.value)
    cert = _certificate_text(result)
    if cert:
        print(f"certificate: {cert}")
    if args.certify:
        g = powers.power_path(args.n, args.k) if args.kind == "path" \
            else powers.power_cycle(args.n, args.k)
        witness = oracle.verify_colouring(
            g, result.colouring, args.mode,
            hyperedges=_closed_form_sets(args.kind, args.n, args.k, args.mode))
        if witness is not None:
            print(f"certification failed, witness {list(witness)}")
            return EXIT_INVALID
        print("certified: colouring verified against the "
              f"{args.mode} family")
    if args.emit_colouring:
        write_colouring(result.colouring, args.emit_colouring,
                        ab=result.ab,
                        universal_witness=result.universal_witness)
    if args.dot:
        g = powers.power_path(args.n, args.k) if args.kind == "path" \
            else powers.power_cycle(args.n, args.k)
        with open(args.dot, "w") as fh:
            fh.write(write_dot(g, result.colouring.colours))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    col = read_colouring(args.colouring)
    params = _power_graph_params(g)
    hyperedges = None
    if params is not None:
        kind, n, k = params
        hyperedges = _closed_form_sets(kind, n, k, args.mode)
    witness = oracle.verify_colouring(g, col, args.mode, hyperedges=hyperedges)
    if witness is None:
        print("valid")
        return EXIT_OK
    print(json.dumps({"mode": args.mode, "witness": list(witness)}))
    return EXIT_INVALID


def cmd_bicliques(args) -> int:
    if args.graph:
        g = read_graph(args.graph)
        if args.closed_form:
            params = _power_graph_params(g)
            if params is None:
                raise InputError(
                    "--closed-form needs a generated power graph "
                    "(matching P_n^k / C_n^k label)")
            kind, n, k = params
        else:
            kind = None
    else:
        if args.kind is None or args.n is None or args.k is None:
            raise InputError("need --graph FILE, or --kind with --n and --k")
        kind, n, k = args.kind, args.n, args.k
        g = powers.power_path(n, k) if kind == "path" else powers.power_cycle(n, k)

    use_closed = args.closed_form or (args.graph is None)
    if use_closed and kind is not None:
        source = "closed-form"
        if args.mode == "biclique":
            fam = powers.path_bicliques(n, k) if kind == "path" \
                else powers.cycle_bicliques(n, k)
            body = [{"vertices": list(b.vertices), "shape": b.shape,
                     **({"reach": b.reach} if b.reach is not None else {})}
                    for b in fam]
        else:
            stars = powers.path_stars(n, k) if kind == "path" \
                else powers.cycle_stars(n, k)
            body = [list(s) for s in stars]
    else:
        source = "oracle"
        if args.mode == "biclique":
            body = [{"vertices": list(b.vertices), "shape": b.shape}
                    for b in oracle.maximal_bicliques(g)]
        else:
            body = [list(s) for s in oracle.maximal_stars(g)]

    key = "bicliques" if args.mode == "biclique" else "stars"
    doc = {"label": g.label, "mode": args.mode, "source": source,
           "count": len(body), key: body}
    text = json.dumps(doc, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    f = reduction.read_dimacs(args.cnf)
    nf = reduction.normalize(f)
    inst = reduction.build_instance(nf)
    instance_path = f"{args.out_prefix}.instance.json"
    reduction.write_instance(inst, instance_path)
    print(f"normalized: {f.num_vars} vars, {len(f.clauses)} clauses -> "
          f"{nf.num_vars} vars, {len(nf.clauses)} clauses")
    print(f"instance: {inst.graph.n} vertices, |V'| = {len(inst.v_prime)}, "
          f"wrote {instance_path}")
    if not args.certify:
        return EXIT_OK
    report = reduction.certify_reduction(nf)
    report_path = f"{args.out_prefix}.report.json"
    with open(report_path, "w") as fh:
        json.dump(report.to_dict(), fh, indent=1)
        fh.write("\n")
    print(f"satisfiable: {report.satisfiable}  "
          f"containment: {report.containment}  "
          f"equivalent: {report.equivalent}")
    print(f"k4_free: {report.k4_free}  c4_free: {report.c4_free}  "
          f"wrote {report_path}")
    if not (report.equivalent and report.k4_free and report.c4_free
            and report.correspondence_ok):
        return EXIT_INVALID
    return EXIT_OK


def cmd_sweep(args) -> int:
    rows = []
    for k in range(args.k_from, args.k_to + 1):
        for n in range(args.n_from, args.n_to + 1):
            result = _chromatic_result(args.kind, n, k, args.mode)
            rows.append({
                "n": n, "k": k, "kind": args.kind, "mode": args.mode,
                "value": result.value,
                "certificate": _certificate_text(result),
            })
    fieldnames = ["n", "k", "kind", "mode", "value", "certificate"]
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicliques",
        description="Biclique- and star-chromatic numbers of powers of "
                    "paths and cycles, with certified colourings and a 3SAT "
                    "biclique-containment gadget.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph as JSON")
    p.add_argument("kind", choices=["path", "cycle", "circulant"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--distances", help="comma-separated, circulant only")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--dot", help="also write Graphviz source here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chromatic",
                       help="exact biclique/star chromatic number")
    p.add_argument("kind", choices=["path", "cycle"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["biclique", "star"], default="biclique")
    p.add_argument("--emit-colouring", help="write the optimal colouring here")
    p.add_argument("--certify", action="store_true",
                   help="re-verify the colouring against the hyperedge family")
    p.add_argument("--dot", help="write a coloured Graphviz rendering here")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("verify", help="check a colouring file against a graph")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.add_argument("--mode", choices=["biclique", "star"], default="biclique")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bicliques", help="list maximal bicliques or stars")
    p.add_argument("--graph", help="graph JSON file")
    p.add_argument("--kind", choices=["path", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=["biclique", "star"], default="biclique")
    p.add_argument("--closed-form", action="store_true",
                   help="use the power-graph closed forms instead of the "
                        "subset-scan oracle")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=cmd_bicliques)

    p = sub.add_parser("reduce",
                       help="build the biclique-containment gadget for a CNF")
    p.add_argument("cnf", help="DIMACS CNF file")
    p.add_argument("--out-prefix", required=True)
    p.add_argument("--certify", action="store_true",
                   help="truth-table the formula and compare with containment")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("sweep", help="CSV of chromatic values over a grid")
    p.add_argument("--kind", choices=["path", "cycle"], required=True)
    p.add_argument("--mode", choices=["biclique", "star"], default="biclique")
    p.add_argument("--k-from", type=int, required=True)
    p.add_argument("--k-to", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--out", help="CSV file (default stdout)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
