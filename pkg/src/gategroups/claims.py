"""The claims ledger: parse structural assertions, compute them, report.

A ledger is line-oriented and diff-friendly:

    id | tier | recipe | expected | provenance | citation

with ``#`` comments.  Tiers are core < long < extended.  Provenance is
``paper`` (asserted by the source text, citation required), ``derived``
(computed independently and frozen) or ``disputed`` (the source text and
the computation disagree; such rows report both values and never affect
the exit code).
"""

from __future__ import annotations

import json
import re
import time
from dataclasses import dataclass
from importlib import resources

from gategroups import groups as groupspec
from gategroups import structure
from gategroups.errors import BudgetExceededError, CapacityError, LedgerParseError
from gategroups.gates import (
    bell_group,
    catalog,
    clifford_group,
    clifford_order_formula,
    pauli2_pair_generators,
    pauli_group,
    yang_baxter_check,
)
from gategroups.isomorphism import (
    automorphism_group,
    commutator_set,
    find_complement,
    is_perfect,
    isomorphic,
)
from gategroups.matrix import closure
from gategroups import pauligraph

TIERS = ("core", "long", "extended")
PROVENANCES = ("paper", "derived", "disputed")

__all__ = ["Claim", "ClaimReport", "parse_ledger", "default_ledger_text", "run_claims", "Evaluator"]


@dataclass
class Claim:
    id: str
    tier: str
    recipe: str
    expected: object
    provenance: str
    citation: str


@dataclass
class ClaimReport:
    claim: Claim
    status: str  # pass, fail, inconclusive, disputed-match, disputed-mismatch
    computed: object
    seconds: float


def _parse_literal(text):
    text = text.strip()
    if text == "true":
        return True
    if text == "false":
        return False
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return []
        return [int(tok) for tok in inner.split(",")]
    return int(text)


def format_value(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def parse_ledger(text):
    claims = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 6:
            raise LedgerParseError(
                f"expected 6 |-separated fields, found {len(parts)}", lineno
            )
        cid, tier, recipe, expected, provenance, citation = parts
        if cid in seen:
            raise LedgerParseError(f"duplicate claim id {cid!r}", lineno)
        seen.add(cid)
        if tier not in TIERS:
            raise LedgerParseError(f"unknown tier {tier!r}", lineno)
        if provenance not in PROVENANCES:
            raise LedgerParseError(f"unknown provenance {provenance!r}", lineno)
        if provenance == "paper" and citation in ("", "-"):
            raise LedgerParseError(
                "claims with provenance 'paper' must carry a citation", lineno
            )
        try:
            expected_value = _parse_literal(expected)
        except ValueError as exc:
            raise LedgerParseError(f"bad expected value {expected!r}: {exc}", lineno)
        claims.append(Claim(cid, tier, recipe, expected_value, provenance, citation))
    return claims


def default_ledger_text():
    return resources.files("gategroups").joinpath("data/claims.ledger").read_text()


class _Inconclusive(Exception):
    pass


def _split_args(text):
    return groupspec._split_args(text)


def _normalize(expr):
    return re.sub(r"\s+", "", expr)


class Evaluator:
    """Executes claim recipes; group construction is cached across claims."""

    GATE_NAMES = ("p1", "p2", "p3", "c1", "c2", "b2", "p2pairs")

    def __init__(self):
        self._groups = {}
        self._matrix = {}
        self._values = {}
        self._normals = {}
        self._mub = {}
        self.allow_extended = False

    # -- gate-level groups -------------------------------------------------

    def matrix_group(self, name):
        if name not in self._matrix:
            if name == "p1":
                g = pauli_group(1)
            elif name == "p2":
                g = pauli_group(2)
            elif name == "p3":
                g = pauli_group(3)
            elif name == "c1":
                g = clifford_group(1)
            elif name == "c2":
                g = clifford_group(2)
            elif name == "b2":
                g = bell_group()
            elif name == "p2pairs":
                g = closure(pauli2_pair_generators())
            else:
                raise ValueError(f"unknown gate group {name!r}")
            self._matrix[name] = g
        return self._matrix[name]

    def _mub_group(self, n, k):
        key = (n, k)
        if key not in self._mub:
            graph = pauligraph.pauli_graph(n)
            mis = pauligraph.maximum_independent_set(graph.neighbors)
            if k > len(mis):
                raise ValueError(f"the {n}-qubit independent set has only {len(mis)} operators")
            mats = [graph.representatives[v] for v in mis[:k]]
            self._mub[key] = closure(mats)
        return self._mub[key]

    # -- group expressions ---------------------------------------------------

    def group(self, expr):
        expr = _normalize(expr)
        if expr in self._groups:
            return self._groups[expr]
        g = self._eval_group(expr)
        self._groups[expr] = g
        return g

    def _gate_subgroup(self, parent_name, child_name):
        """Child gate group embedded in the parent's element table."""
        pm = self.matrix_group(parent_name)
        cm = self.matrix_group(child_name)
        try:
            members = {pm.index_of(m) for m in cm.elements}
            gens = [pm.index_of(g) for g in cm.generators]
        except KeyError:
            raise ValueError(f"{child_name} is not a subgroup of {parent_name}")
        return pm.perm_group().subgroup_from_indices(gens, members)

    def _subgroup_of(self, parent_expr, child_expr):
        parent_expr = _normalize(parent_expr)
        child_expr = _normalize(child_expr)
        parent = self.group(parent_expr)
        if parent_expr in self.GATE_NAMES and child_expr in self.GATE_NAMES:
            return parent, self._gate_subgroup(parent_expr, child_expr)
        child = self.group(child_expr)
        if child._table is not parent.ambient_table():
            raise ValueError(
                f"cannot interpret {child_expr!r} as a subgroup of {parent_expr!r}"
            )
        return parent, child

    def _eval_group(self, expr):
        if expr in self.GATE_NAMES:
            return self.matrix_group(expr).perm_group()
        name, args = expr, ""
        if "(" in expr:
            name, args = expr.split("(", 1)
            args = args[:-1]
        parts = _split_args(args) if args else []
        if name == "mub":
            return self._mub_group(int(parts[0]), int(parts[1])).perm_group()
        if name == "derived":
            return structure.derived_subgroup(self.group(parts[0]))
        if name == "center":
            return structure.center(self.group(parts[0]))
        if name == "central_quotient":
            g = self.group(parts[0])
            return structure.coset_action(g, structure.center(g))
        if name == "quotient":
            parent, child = self._subgroup_of(parts[0], parts[1])
            return structure.coset_action(parent, child)
        if name == "normal_subgroup":
            return self._normal_subgroup(parts[0], int(parts[1]))
        if name == "aut":
            aut = automorphism_group(self.group(parts[0]), extended=self.allow_extended)
            if aut.group is None:
                raise _Inconclusive("automorphism group was not fully collected")
            return aut.group
        # reference constructors
        return groupspec.parse_spec(expr).realized

    def _normal_subgroup(self, parent_expr, order):
        key = _normalize(parent_expr)
        if key not in self._normals:
            self._normals[key] = structure.normal_subgroups(self.group(key))
        matches = [
            s for s in self._normals[key].proper_nontrivial if s.order() == order
        ]
        if len(matches) != 1:
            raise ValueError(
                f"expected one proper normal subgroup of order {order}, found {len(matches)}"
            )
        return matches[0]

    # -- value recipes ----------------------------------------------------------

    def value(self, recipe, tier="core"):
        self.allow_extended = tier in ("long", "extended")
        key = (_normalize(recipe), self.allow_extended)
        if key not in self._values:
            self._values[key] = self._eval_value(_normalize(recipe))
        return self._values[key]

    def _eval_value(self, expr):
        name, args = expr, ""
        if "(" in expr:
            name, args = expr.split("(", 1)
            args = args[:-1]
        parts = _split_args(args) if args else []

        if name == "order":
            if parts[0] in self.GATE_NAMES:
                return self.matrix_group(parts[0]).order()
            return self.group(parts[0]).order()
        if name == "center_order":
            return structure.center(self.group(parts[0])).order()
        if name == "derived_order":
            return structure.derived_subgroup(self.group(parts[0])).order()
        if name == "abelianization":
            return structure.abelian_invariants(self.group(parts[0]))
        if name == "is_perfect":
            return is_perfect(self.group(parts[0]))
        if name == "iso":
            return bool(isomorphic(self.group(parts[0]), self.group(parts[1])))
        if name == "aut_order":
            return automorphism_group(
                self.group(parts[0]), extended=self.allow_extended
            ).order
        if name == "out_order":
            aut = automorphism_group(self.group(parts[0]), extended=self.allow_extended)
            return aut.outer_order()
        if name == "normal_subgroup_orders":
            key = _normalize(parts[0])
            if key not in self._normals:
                self._normals[key] = structure.normal_subgroups(self.group(key))
            return self._normals[key].proper_orders()
        if name == "splits":
            parent, child = self._subgroup_of(parts[0], parts[1])
            result = find_complement(parent, child)
            if result.status == "inconclusive":
                raise _Inconclusive("complement search budget exhausted")
            return result.status == "found"
        if name == "commutators_equal_derived":
            return self._commutators(parts[0]).equals_derived
        if name == "commutator_deficiency":
            return self._commutators(parts[0]).deficiency
        if name == "yang_baxter":
            return yang_baxter_check(self._matrix_atom(parts[0]))
        if name == "clifford_formula":
            return clifford_order_formula(int(parts[0]))
        if name == "subgroup_index":
            parent, child = self._subgroup_of(parts[0], parts[1])
            return parent.order() // child.order()
        if name == "is_subgroup":
            try:
                self._subgroup_of(parts[1], parts[0])
            except ValueError:
                return False
            return True
        if name == "is_normal":
            parent, child = self._subgroup_of(parts[0], parts[1])
            own = parent.own_table()
            members = set(child.member_indices())
            return own.is_normal_set(members, [i for i in members if i != 0])
        if name.startswith("pg_"):
            return self._pauli_graph_value(name, parts)
        if name == "mub_order":
            return self._mub_group(int(parts[0]), int(parts[1])).order()
        if name == "mub_aut_order":
            grp = self._mub_group(int(parts[0]), int(parts[1]))
            return automorphism_group(
                grp.perm_group(), extended=self.allow_extended
            ).order
        if name == "mub_same":
            n, k = int(parts[0]), int(parts[1])
            a = self._mub_group(n, k)
            b = self._mub_group(n, k - 1)
            return set(a.elements) == set(b.elements)
        raise ValueError(f"unknown recipe {expr!r}")

    def _commutators(self, group_expr):
        g = self.group(group_expr)
        method = "all-pairs" if g.order() <= 4096 else "class-reps"
        return commutator_set(g, extended=self.allow_extended, method=method)

    def _matrix_atom(self, name):
        c = catalog()
        if name == "bellR":
            return c.bell
        if name == "cz":
            return c.cz
        raise ValueError(f"unknown matrix atom {name!r}")

    def _pauli_graph_value(self, name, parts):
        n = int(parts[0])
        graph = pauligraph.pauli_graph(n)
        if name == "pg_vertices":
            return graph.vertex_count
        if name == "pg_uniform_degree":
            degrees = set(graph.degree_sequence())
            if len(degrees) != 1:
                raise ValueError(f"graph is not regular: degrees {sorted(degrees)}")
            return degrees.pop()
        if name == "pg_max_independent":
            return len(pauligraph.maximum_independent_set(graph.neighbors))
        if name == "pg_aut_count":
            return pauligraph.graph_automorphism_count(graph.neighbors)
        report = pauligraph.quadrangle_checks(graph)
        if name == "pg_lines":
            return report.line_count
        if name == "pg_line_size":
            sizes = set(report.line_sizes)
            if len(sizes) != 1:
                raise ValueError(f"lines are not uniform: sizes {sorted(sizes)}")
            return sizes.pop()
        if name == "pg_lines_per_point":
            counts = set(report.lines_per_point)
            if len(counts) != 1:
                raise ValueError(f"incidence is not uniform: {sorted(counts)}")
            return counts.pop()
        if name == "pg_complement_petersen":
            return report.complement_is_petersen
        raise ValueError(f"unknown graph recipe {name!r}")


def _status_for(claim, computed, failed):
    if claim.provenance == "disputed":
        if failed:
            return "inconclusive"
        return "disputed-match" if computed == claim.expected else "disputed-mismatch"
    if failed:
        return "inconclusive"
    return "pass" if computed == claim.expected else "fail"


def run_claims(suite="core", ledger_text=None, report_path=None, echo=None, evaluator=None):
    """Execute every ledger claim in the suite; returns (reports, exit_code).

    The exit code is nonzero iff a non-disputed claim fails.  The machine
    report is JSON-lines: one volatile header line (timestamps, wall
    times), then one deterministic line per claim.
    """
    if suite not in TIERS:
        raise ValueError(f"unknown suite {suite!r}")
    allowed = TIERS[: TIERS.index(suite) + 1]
    if ledger_text is None:
        ledger_text = default_ledger_text()
    claims = [c for c in parse_ledger(ledger_text) if c.tier in allowed]
    ev = evaluator if evaluator is not None else Evaluator()
    reports = []
    started = time.time()
    for claim in claims:
        t0 = time.time()
        computed = None
        failed = False
        try:
            computed = ev.value(claim.recipe, claim.tier)
        except (CapacityError, BudgetExceededError, _Inconclusive):
            failed = True
        status = _status_for(claim, computed, failed)
        report = ClaimReport(claim, status, computed, time.time() - t0)
        reports.append(report)
        if echo:
            echo(_human_line(report))
    exit_code = 1 if any(r.status == "fail" for r in reports) else 0
    if report_path:
        _write_report(reports, report_path, suite, time.time() - started)
    return reports, exit_code


def _human_line(report):
    c = report.claim
    return (
        f"{c.id:32} {c.tier:8} {report.status:18} "
        f"expected {format_value(c.expected):>14}  computed {format_value(report.computed):>14}  "
        f"{report.seconds:7.2f}s"
    )


def _write_report(reports, path, suite, elapsed):
    with open(path, "w", encoding="ascii") as fh:
        header = {
            "suite": suite,
            "generated": time.strftime("%Y-%m-%dT%H:%M:%S"),
            "elapsed_seconds": round(elapsed, 3),
            "claim_seconds": {r.claim.id: round(r.seconds, 3) for r in reports},
        }
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for r in reports:
            body = {
                "id": r.claim.id,
                "tier": r.claim.tier,
                "recipe": r.claim.recipe,
                "expected": format_value(r.claim.expected),
                "computed": format_value(r.computed),
                "status": r.status,
                "provenance": r.claim.provenance,
                "citation": r.claim.citation,
            }
            fh.write(json.dumps(body, sort_keys=True) + "\n")
