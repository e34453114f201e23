"""Command-line interface.

Commands:
    gategroups build NAME [--export FILE] [--elements]
    gategroups analyze EXPR
    gategroups claims run [--suite core|long|extended] [--ledger FILE] [--report FILE]
    gategroups graph pauli -n N [--dot FILE]
    gategroups mub-chain -n N [--no-aut] [--extended]

Capacity limits honour GATEGROUPS_* environment variables (see config).
"""

from __future__ import annotations

import argparse
import sys

from gategroups import claims as claims_mod
from gategroups import pauligraph, structure
from gategroups.claims import Evaluator, run_claims
from gategroups.errors import BudgetExceededError, CapacityError, LedgerParseError
from gategroups.isomorphism import automorphism_group, is_perfect
from gategroups.matrix import write_group
from gategroups.perm import write_perm_group


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="gategroups",
        description="Exact structure engine for quantum gate groups and its claims ledger.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a named gate group or a group spec")
    b.add_argument("name", help="p1, p2, p3, c1, c2, b2, or a spec like wreath(cyclic(2), symmetric(5))")
    b.add_argument("--export", metavar="FILE", help="write the group to a file")
    b.add_argument("--elements", action="store_true", help="include the full element list in the export")

    a = sub.add_parser("analyze", help="print a structure report for a group expression")
    a.add_argument(
        "expr",
        help="group expression (c1, derived(central_quotient(c2)), ...) or a group file path",
    )

    c = sub.add_parser("claims", help="claims ledger operations")
    csub = c.add_subparsers(dest="claims_command", required=True)
    crun = csub.add_parser("run", help="execute the ledger")
    crun.add_argument("--suite", choices=list(claims_mod.TIERS), default="core")
    crun.add_argument("--ledger", metavar="FILE", help="ledger file (defaults to the built-in ledger)")
    crun.add_argument("--report", metavar="FILE", help="write a machine-readable JSONL report")

    g = sub.add_parser("graph", help="commutation graph exports")
    gsub = g.add_subparsers(dest="graph_kind", required=True)
    gp = gsub.add_parser("pauli", help="the n-qubit Pauli commutation graph")
    gp.add_argument("-n", type=int, required=True, choices=(1, 2, 3))
    gp.add_argument("--dot", metavar="FILE", help="write a DOT file")

    m = sub.add_parser("mub-chain", help="groups generated by the canonical independent set")
    m.add_argument("-n", type=int, required=True, choices=(2, 3))
    m.add_argument("--no-aut", action="store_true", help="skip automorphism orders")
    m.add_argument("--extended", action="store_true", help="allow the extended automorphism tier")

    return parser


def _cmd_build(args):
    ev = Evaluator()
    name = args.name.strip()
    if name in ev.GATE_NAMES:
        group = ev.matrix_group(name)
        print(f"{name}: matrix group of dimension {group.dim}, order {group.order()}")
        if args.export:
            write_group(group, args.export, include_elements=args.elements)
            print(f"written to {args.export}")
    else:
        group = ev.group(name)
        print(f"{name}: permutation group of degree {group.degree}, order {group.order()}")
        if args.export:
            write_perm_group(group, args.export)
            print(f"written to {args.export}")
    return 0


def _load_group_file(path):
    """Group file -> PermGroup; matrix files go through their regular action."""
    with open(path, encoding="ascii") as fh:
        first = fh.readline()
    if first.startswith("dim "):
        from gategroups.matrix import read_group

        return read_group(path).perm_group()
    from gategroups.perm import read_perm_group

    return read_perm_group(path)


def _cmd_analyze(args):
    import os

    if os.path.exists(args.expr):
        group = _load_group_file(args.expr)
    else:
        group = Evaluator().group(args.expr)
    print(f"group:              {args.expr}")
    print(f"order:              {group.order()}")

    def report(label, fn):
        try:
            print(f"{label:20}{fn()}")
        except (CapacityError, BudgetExceededError) as exc:
            print(f"{label:20}skipped ({exc})")

    report("center order:", lambda: structure.center(group).order())
    report("derived order:", lambda: structure.derived_subgroup(group).order())
    report("abelian invariants:", lambda: structure.abelian_invariants(group))
    report("perfect:", lambda: is_perfect(group))
    report("fingerprint:", lambda: _fingerprint_text(group))
    report("automorphisms:", lambda: automorphism_group(group, extended=True).order)
    return 0


def _fingerprint_text(group):
    fp = structure.fingerprint(group)
    return (
        f"order {fp.order}; center {fp.center_order}; "
        f"derived series {list(fp.derived_series)}; "
        f"abelianization {list(fp.abelian_invariants)}; "
        f"element orders {dict(fp.element_orders)}; "
        f"class sizes {list(fp.class_sizes)}"
    )


def _cmd_claims_run(args):
    ledger_text = None
    if args.ledger:
        with open(args.ledger, encoding="utf-8") as fh:
            ledger_text = fh.read()
    try:
        reports, exit_code = run_claims(
            suite=args.suite,
            ledger_text=ledger_text,
            report_path=args.report,
            echo=print,
        )
    except LedgerParseError as exc:
        print(f"ledger parse error: {exc}", file=sys.stderr)
        return 2
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
    print(f"-- {len(reports)} claims ({summary})")
    if args.report:
        print(f"report written to {args.report}")
    return exit_code


def _cmd_graph(args):
    graph = pauligraph.pauli_graph(args.n)
    degrees = sorted(set(graph.degree_sequence()))
    print(f"pauli graph n={args.n}: {graph.vertex_count} vertices, degrees {degrees}")
    mis = pauligraph.maximum_independent_set(graph.neighbors)
    print(f"maximum independent set ({len(mis)}): {[graph.labels[v] for v in mis]}")
    if args.n == 2:
        report = pauligraph.quadrangle_checks(graph)
        print(
            f"lines: {report.line_count} (size {sorted(set(report.line_sizes))}), "
            f"lines per point {sorted(set(report.lines_per_point))}, "
            f"complement is Petersen: {report.complement_is_petersen}, "
            f"graph automorphisms: {report.automorphism_count}"
        )
        for failure in report.failures:
            print(f"FAILED: {failure}")
    if args.dot:
        pauligraph.write_dot(graph, args.dot)
        print(f"DOT written to {args.dot}")
    return 0


def _cmd_mub_chain(args):
    links = pauligraph.mub_chain(args.n, with_aut=not args.no_aut, extended=args.extended)
    for link in links:
        aut = link.aut_order if link.aut_order is not None else f"({link.aut_status})"
        note = "  (= previous)" if link.same_as_previous else ""
        print(f"g{link.k}: order {link.order:6}  aut {aut}{note}")
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "build":
            return _cmd_build(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "claims":
            return _cmd_claims_run(args)
        if args.command == "graph":
            return _cmd_graph(args)
        if args.command == "mub-chain":
            return _cmd_mub_chain(args)
    except (ValueError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
