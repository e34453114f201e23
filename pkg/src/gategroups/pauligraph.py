"""Pauli commutation graphs, the two-qubit quadrangle geometry, MUB chains.

Vertices are the 4^n - 1 nonidentity Pauli tensor operators modulo phase,
ordered by their symplectic label (X-part then Z-part, leftmost wire most
significant); two vertices are joined iff representatives commute, which
is independent of the chosen phases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gategroups.gates import catalog
from gategroups.matrix import closure, kron, matmul

__all__ = [
    "PauliGraph",
    "pauli_graph",
    "maximum_independent_set",
    "max_independent_set",
    "QuadrangleReport",
    "quadrangle_checks",
    "graph_automorphism_count",
    "graphs_isomorphic",
    "petersen_graph",
    "mub_chain",
    "ChainLink",
    "write_dot",
]


@dataclass
class PauliGraph:
    n: int
    labels: list  # operator names over {I, X, Y, Z}^n
    representatives: list  # canonical phase-class representative matrices
    neighbors: list = field(repr=False)  # adjacency as sets of vertex ids

    @property
    def vertex_count(self):
        return len(self.labels)

    def degree_sequence(self):
        return [len(nb) for nb in self.neighbors]

    def edges(self):
        return [
            (a, b)
            for a in range(len(self.neighbors))
            for b in self.neighbors[a]
            if a < b
        ]


_CHARS = "IXYZ"


def _label_bits(label):
    """Symplectic label of an operator name: (x bits, z bits) as integers."""
    x = z = 0
    for ch in label:
        x = (x << 1) | (ch in "XY")
        z = (z << 1) | (ch in "ZY")
    return x, z


def _label_matrix(label):
    c = catalog()
    ops = {"I": c.sigma0, "X": c.sigma_x, "Y": c.sigma_y, "Z": c.sigma_z}
    m = None
    for ch in label:
        m = ops[ch] if m is None else kron(m, ops[ch])
    return m


def _canonical_representative(m):
    """Canonical phase-class representative: the Hermitian lift with +1 phase.

    The plain tensor product of sigma matrices squares to the identity;
    among {g, -g, ig, -ig} the two Hermitian choices generate the same
    subgroups (a product of two anticommuting involutions already has
    square -1), so this pins the chain groups of the independent set.
    The +-i variants would flip the squares to -1 and generate the other
    extraspecial type, whose automorphism group is smaller.
    """
    return m


_GRAPHS = {}


def pauli_graph(n):
    if not 1 <= n <= 3:
        raise ValueError("pauli_graph supports 1..3 qubits")
    if n in _GRAPHS:
        return _GRAPHS[n]
    labels = []
    for code in range(4**n):
        label = "".join(_CHARS[(code >> (2 * (n - 1 - w))) & 3] for w in range(n))
        if set(label) != {"I"}:
            labels.append(label)
    labels.sort(key=_label_bits)
    reps = [_canonical_representative(_label_matrix(lb)) for lb in labels]
    neighbors = [set() for _ in labels]
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            if matmul(reps[a], reps[b]) == matmul(reps[b], reps[a]):
                neighbors[a].add(b)
                neighbors[b].add(a)
    graph = PauliGraph(n, labels, reps, neighbors)
    _GRAPHS[n] = graph
    return graph


# -- exact maximum independent set ----------------------------------------


def _clique_cover_bound(cands, neighbors):
    """Greedy clique partition of the candidates; each clique holds <= 1 pick."""
    remaining = list(cands)
    bound = 0
    taken = set()
    for v in remaining:
        if v in taken:
            continue
        bound += 1
        clique = [v]
        taken.add(v)
        for u in remaining:
            if u in taken:
                continue
            if all(u in neighbors[c] for c in clique):
                clique.append(u)
                taken.add(u)
    return bound


def _best_size(cands, neighbors, current, best):
    if not cands:
        return max(best, current)
    if current + _clique_cover_bound(cands, neighbors) <= best:
        return best
    v = cands[0]
    # include v
    rest = [u for u in cands[1:] if u not in neighbors[v]]
    best = _best_size(rest, neighbors, current + 1, best)
    # exclude v
    best = _best_size(cands[1:], neighbors, current, best)
    return best


def _has_independent(cands, neighbors, need):
    if need <= 0:
        return True
    if len(cands) < need:
        return False
    if _clique_cover_bound(cands, neighbors) < need:
        return False
    v = cands[0]
    rest = [u for u in cands[1:] if u not in neighbors[v]]
    if _has_independent(rest, neighbors, need - 1):
        return True
    return _has_independent(cands[1:], neighbors, need)


def maximum_independent_set(neighbors):
    """The lexicographically least maximum independent set of a graph.

    ``neighbors`` is a list of adjacency sets; vertices are 0..n-1 in
    their canonical order, which pins the returned set deterministically.
    """
    n = len(neighbors)
    cands = list(range(n))
    size = _best_size(cands, neighbors, 0, 0)
    chosen = []
    for v in range(n):
        if v not in cands:
            continue
        rest = [u for u in cands if u != v and u not in neighbors[v]]
        if _has_independent(rest, neighbors, size - len(chosen) - 1):
            chosen.append(v)
            cands = rest
            if len(chosen) == size:
                break
    return chosen


def max_independent_set(graph_or_neighbors):
    """Maximum independent set of a PauliGraph (or raw adjacency sets)."""
    if isinstance(graph_or_neighbors, PauliGraph):
        return maximum_independent_set(graph_or_neighbors.neighbors)
    return maximum_independent_set(list(graph_or_neighbors))


# -- graph isomorphism / automorphisms -------------------------------------


def _graph_maps(nb1, nb2, count_all):
    """Backtracking embeddings of graph 1 onto graph 2 (same size, bijective)."""
    n = len(nb1)
    if len(nb2) != n:
        return 0
    deg1 = [len(s) for s in nb1]
    deg2 = [len(s) for s in nb2]
    if sorted(deg1) != sorted(deg2):
        return 0
    img = [-1] * n
    used = [False] * n
    found = 0

    def backtrack(v):
        nonlocal found
        if v == n:
            found += 1
            return not count_all
        for w in range(n):
            if used[w] or deg1[v] != deg2[w]:
                continue
            ok = True
            for u in range(v):
                if (u in nb1[v]) != (img[u] in nb2[w]):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                if backtrack(v + 1):
                    return True
                used[w] = False
                img[v] = -1
        return False

    backtrack(0)
    return found


def graphs_isomorphic(nb1, nb2):
    return _graph_maps([set(s) for s in nb1], [set(s) for s in nb2], False) > 0


def graph_automorphism_count(neighbors):
    nb = [set(s) for s in neighbors]
    return _graph_maps(nb, nb, True)


def petersen_graph():
    """Petersen graph as the Kneser graph K(5,2): disjoint pairs are adjacent."""
    from itertools import combinations

    pairs = list(combinations(range(5), 2))
    return [
        {j for j, q in enumerate(pairs) if not set(p) & set(q)} for p in pairs
    ]


# -- the quadrangle report ---------------------------------------------------


@dataclass
class QuadrangleReport:
    vertex_count: int
    degrees: list
    line_count: int
    line_sizes: list
    lines_per_point: list
    independent_set: list  # vertex ids
    independent_labels: list
    complement_is_petersen: bool
    automorphism_count: int
    failures: list

    @property
    def ok(self):
        return not self.failures


def _maximal_cliques(neighbors):
    """Bron-Kerbosch, deterministic order."""
    n = len(neighbors)
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(sorted(r))
            return
        for v in sorted(p):
            expand(r | {v}, p & neighbors[v], x & neighbors[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(n)), set())
    return out


def quadrangle_checks(graph):
    """Structural report on the two-qubit commutation geometry.

    Failed assertions are collected, never raised, so the report always
    covers every check.
    """
    if graph.n != 2:
        raise ValueError("the quadrangle report is defined for the two-qubit graph")
    failures = []
    degrees = graph.degree_sequence()
    if graph.vertex_count != 15:
        failures.append(f"expected 15 vertices, found {graph.vertex_count}")
    if any(d != 6 for d in degrees):
        failures.append(f"expected all degrees 6, found {sorted(set(degrees))}")

    lines = _maximal_cliques(graph.neighbors)
    line_sizes = sorted(len(l) for l in lines)
    if len(lines) != 15:
        failures.append(f"expected 15 lines, found {len(lines)}")
    if set(line_sizes) != {3}:
        failures.append(f"expected lines of size 3, found sizes {sorted(set(line_sizes))}")
    per_point = [sum(1 for l in lines if v in l) for v in range(graph.vertex_count)]
    if any(c != 3 for c in per_point):
        failures.append(f"expected 3 lines per point, found {sorted(set(per_point))}")

    ovoid = maximum_independent_set(graph.neighbors)
    if len(ovoid) != 5:
        failures.append(f"expected a maximum independent set of size 5, found {len(ovoid)}")

    rest = [v for v in range(graph.vertex_count) if v not in ovoid]
    pos = {v: i for i, v in enumerate(rest)}
    induced = [
        {pos[u] for u in graph.neighbors[v] if u in pos} for v in rest
    ]
    is_petersen = graphs_isomorphic(induced, petersen_graph())
    if not is_petersen:
        failures.append("complement of the independent set is not the Petersen graph")

    aut = graph_automorphism_count(graph.neighbors)
    if aut != 720:
        failures.append(f"expected 720 graph automorphisms, found {aut}")

    return QuadrangleReport(
        vertex_count=graph.vertex_count,
        degrees=degrees,
        line_count=len(lines),
        line_sizes=line_sizes,
        lines_per_point=per_point,
        independent_set=ovoid,
        independent_labels=[graph.labels[v] for v in ovoid],
        complement_is_petersen=is_petersen,
        automorphism_count=aut,
        failures=failures,
    )


# -- MUB chain ----------------------------------------------------------------


@dataclass
class ChainLink:
    k: int  # number of operators used
    group: object  # MatrixGroup
    order: int
    aut_order: int | None
    aut_status: str  # "ok", "skipped" or "inconclusive"
    same_as_previous: bool


def mub_chain(n, with_aut=True, extended=False):
    """Groups generated by growing prefixes of the canonical independent set.

    The operators are taken as matrices with their phases.  Automorphism
    orders are computed within the configured tier; links whose group is
    too large (or with with_aut off) carry aut_status "skipped".
    """
    from gategroups.errors import BudgetExceededError, CapacityError
    from gategroups.isomorphism import automorphism_group

    graph = pauli_graph(n)
    mis = maximum_independent_set(graph.neighbors)
    mats = [graph.representatives[v] for v in mis]
    links = []
    prev_elements = None
    for k in range(2, len(mats) + 1):
        grp = closure(mats[:k])
        same = prev_elements is not None and set(grp.elements) == prev_elements
        aut_order = None
        status = "skipped"
        if with_aut:
            try:
                aut = automorphism_group(grp.perm_group(), extended=extended)
                aut_order = aut.order
                status = "ok"
            except CapacityError:
                status = "skipped"
            except BudgetExceededError:
                status = "inconclusive"
        links.append(
            ChainLink(
                k=k,
                group=grp,
                order=grp.order(),
                aut_order=aut_order,
                aut_status=status,
                same_as_previous=same,
            )
        )
        prev_elements = set(grp.elements)
    return links


def write_dot(graph, path):
    """DOT export with operator labels."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"graph pauli{graph.n} {{\n")
        for label in graph.labels:
            fh.write(f'  "{label}";\n')
        for a, b in graph.edges():
            fh.write(f'  "{graph.labels[a]}" -- "{graph.labels[b]}";\n')
        fh.write("}\n")
