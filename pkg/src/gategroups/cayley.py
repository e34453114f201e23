"""Index-level multiplication engine for enumerated finite groups.

An ElementTable names the elements of a finite group 0..n-1 (0 is the
identity) and stores, for every generator, the permutation induced by
right multiplication.  Everything else (left multiplication, inverses,
words, general products) is derived from those columns, so structural
computations on groups of order up to ~2*10^5 stay cheap even when the
elements themselves are large objects such as 4x4 cyclotomic matrices or
permutations of 92160 points.
"""

from __future__ import annotations

from gategroups.config import limit
from gategroups.errors import CapacityError

__all__ = ["ElementTable"]


class ElementTable:
    def __init__(self, n, gen_indices, rmul):
        self.n = n
        self.gen_indices = list(gen_indices)
        self._rmul = [list(col) for col in rmul]
        self._rmul_inv = None
        self._lmul = None
        self._lmul_inv = None
        self._inv = None
        self._bfs = None  # (order, prev, genpos): spanning tree from the identity
        self._classes = None
        self._orders = None
        self._perm_elements = None  # optional: element index -> permutation tuple
        self.parent_indices = None  # set for subgroup tables

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_regular_perms(cls, perms):
        """Table for a regular action: the points are the elements, 0 is e."""
        return cls(len(perms[0]), [p[0] for p in perms], perms)

    @classmethod
    def from_permutations(cls, degree, perms, max_order=None):
        """Enumerate the group generated by permutation tuples on 0..degree-1."""
        if max_order is None:
            max_order = limit("MAX_ENUMERATION")
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        pos = 0
        while pos < len(elements):
            x = elements[pos]
            for p in perms:
                y = tuple(p[v] for v in x)
                if y not in index:
                    if len(elements) >= max_order:
                        raise CapacityError(
                            f"group enumeration exceeded {max_order} elements"
                        )
                    index[y] = len(elements)
                    elements.append(y)
            pos += 1
        rmul = [
            [index[tuple(p[v] for v in x)] for x in elements] for p in perms
        ]
        table = cls(len(elements), [index[tuple(p)] for p in perms], rmul)
        table._perm_elements = elements
        return table

    # -- element access ------------------------------------------------------

    def rmul_columns(self):
        """Right-multiplication permutations of the generators."""
        return [list(col) for col in self._rmul]

    def perm_of(self, i):
        """The element as a permutation of the table's natural domain."""
        if self._perm_elements is not None:
            return self._perm_elements[i]
        return tuple(self.column(i))

    def _ensure_tree(self):
        if self._bfs is None:
            n = self.n
            prev = [-1] * n
            genpos = [-1] * n
            order = [0]
            prev[0] = 0
            for i in order:
                for g, col in enumerate(self._rmul):
                    j = col[i]
                    if prev[j] < 0:
                        prev[j] = i
                        genpos[j] = g
                        order.append(j)
            if len(order) != n:
                raise ValueError("generator columns do not span the table")
            self._bfs = (order, prev, genpos)
        return self._bfs

    def word(self, i):
        """Generator positions whose left-to-right product is element i."""
        _, prev, genpos = self._ensure_tree()
        w = []
        while i != 0:
            w.append(genpos[i])
            i = prev[i]
        w.reverse()
        return w

    def _ensure_lmul(self):
        if self._lmul is None:
            order, prev, genpos = self._ensure_tree()
            lmul = []
            for g, col in enumerate(self._rmul):
                gi = self.gen_indices[g]
                lcol = [0] * self.n
                lcol[0] = gi
                for j in order[1:]:
                    # x_j = x_prev * s  =>  g*x_j = (g*x_prev) * s
                    lcol[j] = self._rmul[genpos[j]][lcol[prev[j]]]
                lmul.append(lcol)
            self._lmul = lmul
        return self._lmul

    def _ensure_lmul_inv(self):
        if self._lmul_inv is None:
            self._lmul_inv = [_invert(col) for col in self._ensure_lmul()]
        return self._lmul_inv

    def _ensure_rmul_inv(self):
        if self._rmul_inv is None:
            self._rmul_inv = [_invert(col) for col in self._rmul]
        return self._rmul_inv

    def inverses(self):
        if self._inv is None:
            order, prev, genpos = self._ensure_tree()
            lmul_inv = self._ensure_lmul_inv()
            inv = [0] * self.n
            for j in order[1:]:
                # (x * s)^-1 = s^-1 * x^-1
                inv[j] = lmul_inv[genpos[j]][inv[prev[j]]]
            self._inv = inv
        return self._inv

    def mult(self, i, j):
        for g in self.word(j):
            i = self._rmul[g][i]
        return i

    def conj_by_gen(self, i, g):
        """g^-1 * x_i * g for the g-th generator."""
        return self._rmul[g][self._ensure_lmul_inv()[g][i]]

    def conjugate(self, i, j):
        """x_j^-1 * x_i * x_j."""
        inv = self.inverses()
        return self.mult(self.mult(inv[j], i), j)

    def commutator(self, i, j):
        """[x_i, x_j] = x_i x_j x_i^-1 x_j^-1."""
        inv = self.inverses()
        return self.mult(self.mult(i, j), self.mult(inv[i], inv[j]))

    def column(self, j):
        """Right-multiplication column: i -> i * x_j."""
        w = self.word(j)
        if not w:
            return list(range(self.n))
        col = list(self._rmul[w[0]])
        for g in w[1:]:
            rm = self._rmul[g]
            col = [rm[x] for x in col]
        return col

    def lcolumn(self, j):
        """Left-multiplication column: i -> x_j * i."""
        w = self.word(j)
        lmul = self._ensure_lmul()
        if not w:
            return list(range(self.n))
        col = list(lmul[w[-1]])
        for g in reversed(w[:-1]):
            lm = lmul[g]
            col = [lm[x] for x in col]
        return col

    def order_of(self, i):
        if i == 0:
            return 1
        col = None
        k = i
        m = 1
        while k != 0:
            if col is None and m >= 4:
                col = self.column(i)
            k = col[k] if col is not None else self.mult(k, i)
            m += 1
        return m

    def element_orders(self):
        """Orders for all elements (computed per conjugacy class)."""
        if self._orders is None:
            class_of, reps, _ = self.class_partition()
            rep_orders = [self.order_of(r) for r in reps]
            self._orders = [rep_orders[c] for c in class_of]
        return self._orders

    # -- structure -----------------------------------------------------------

    def center_set(self):
        lmul = self._ensure_lmul()
        ngen = range(len(self._rmul))
        return [
            i
            for i in range(self.n)
            if all(self._rmul[g][i] == lmul[g][i] for g in ngen)
        ]

    def class_partition(self):
        """Conjugacy classes: (class_of array, representative list, sizes)."""
        if self._classes is None:
            n = self.n
            class_of = [-1] * n
            reps = []
            sizes = []
            ngens = len(self._rmul)
            lmul_inv = self._ensure_lmul_inv()
            for i in range(n):
                if class_of[i] >= 0:
                    continue
                c = len(reps)
                reps.append(i)
                class_of[i] = c
                queue = [i]
                count = 1
                while queue:
                    x = queue.pop()
                    for g in range(ngens):
                        y = self._rmul[g][lmul_inv[g][x]]
                        if class_of[y] < 0:
                            class_of[y] = c
                            count += 1
                            queue.append(y)
                sizes.append(count)
            self._classes = (class_of, reps, sizes)
        return self._classes

    def subgroup_closure(self, gens, cap=None):
        """Member set of the subgroup generated by the given element indices."""
        gens = [g for g in dict.fromkeys(gens) if g != 0]
        cols = [self.column(g) for g in gens]
        members = {0}
        queue = [0]
        while queue:
            x = queue.pop()
            for col in cols:
                y = col[x]
                if y not in members:
                    if cap is not None and len(members) >= cap:
                        return None
                    members.add(y)
                    queue.append(y)
        return members

    def normal_closure_set(self, seeds):
        """Smallest normal subgroup containing the seed elements.

        Returns (member set, subgroup generator indices).
        """
        gens = [s for s in dict.fromkeys(seeds) if s != 0]
        cols = [self.column(g) for g in gens]
        members = {0}
        queue = [0]

        def close():
            while queue:
                x = queue.pop()
                for col in cols:
                    y = col[x]
                    if y not in members:
                        members.add(y)
                        queue.append(y)

        close()
        lmul_inv = self._ensure_lmul_inv()
        pending = list(gens)
        while pending:
            s = pending.pop()
            for g in range(len(self._rmul)):
                y = self._rmul[g][lmul_inv[g][s]]
                if y not in members:
                    gens.append(y)
                    pending.append(y)
                    col = self.column(y)
                    cols.append(col)
                    fresh = [m for m in members if col[m] not in members]
                    for m in fresh:
                        z = col[m]
                        if z not in members:
                            members.add(z)
                            queue.append(z)
                    close()
        return members, gens

    def derived_data(self):
        """Derived subgroup: (member set, generator indices)."""
        seeds = []
        gens = self.gen_indices
        for a in gens:
            for b in gens:
                c = self.commutator(a, b)
                if c:
                    seeds.append(c)
        if not seeds:
            return {0}, []
        return self.normal_closure_set(seeds)

    def is_normal_set(self, members, sub_gens):
        lmul_inv = self._ensure_lmul_inv()
        for s in sub_gens:
            for g in range(len(self._rmul)):
                if self._rmul[g][lmul_inv[g][s]] not in members:
                    return False
        return True

    def coset_action(self, members):
        """Quotient by a normal subgroup given as a member set.

        Returns (quotient ElementTable, coset_of array, coset representative
        list); cosets are numbered in discovery order, coset 0 is the
        subgroup itself, representatives are the minimal member indices.
        """
        n = self.n
        coset_of = [-1] * n
        first = sorted(members)
        for m in first:
            coset_of[m] = 0
        coset_members = [first]
        reps = [0]
        pos = 0
        while pos < len(coset_members):
            block = coset_members[pos]
            for col in self._rmul:
                if coset_of[col[block[0]]] < 0:
                    image = [col[m] for m in block]
                    c = len(coset_members)
                    for m in image:
                        coset_of[m] = c
                    coset_members.append(image)
                    reps.append(min(image))
            pos += 1
        qperms = [
            [coset_of[col[block[0]]] for block in coset_members]
            for col in self._rmul
        ]
        quotient = ElementTable.from_regular_perms(qperms)
        return quotient, coset_of, reps

    def abelian_invariants(self):
        """Invariant factors d1 | d2 | ... of the abelianisation."""
        members, _ = self.derived_data()
        if len(members) == self.n:
            return []
        table, _, _ = self.coset_action(members)
        invs = []
        while table.n > 1:
            orders = [table.order_of(i) for i in range(table.n)]
            m = max(orders)
            x = orders.index(m)
            invs.append(m)
            cyc = table.subgroup_closure([x])
            table, _, _ = table.coset_action(cyc)
        invs.reverse()
        return invs

    def normal_subgroup_sets(self):
        """All normal subgroups as member sets (join closure of class closures)."""
        _, reps, _ = self.class_partition()
        pool = {}
        gens_of = {}

        def add(members, gens):
            key = frozenset(members)
            if key not in pool:
                pool[key] = members
                gens_of[key] = gens
                return key
            return None

        add({0}, [])
        for r in reps:
            if r == 0:
                continue
            members, gens = self.normal_closure_set([r])
            add(members, gens)
        new_keys = list(pool)
        while new_keys:
            fresh = []
            keys = list(pool)
            for ka in new_keys:
                for kb in keys:
                    if ka == kb or ka <= kb or kb <= ka:
                        continue
                    gens = gens_of[ka] + [g for g in gens_of[kb] if g not in ka]
                    members = self.subgroup_closure(gens)
                    key = add(members, gens)
                    if key is not None:
                        fresh.append(key)
            new_keys = fresh
        return [(pool[k], gens_of[k]) for k in sorted(pool, key=len)]

    def subgroup_table(self, gen_indices, members=None):
        """Standalone table for a subgroup; parent_indices maps back."""
        if members is None:
            members = self.subgroup_closure(gen_indices)
        elems = sorted(members)
        pos = {e: p for p, e in enumerate(elems)}
        cols = []
        for g in gen_indices:
            col = self.column(g)
            cols.append([pos[col[e]] for e in elems])
        table = ElementTable(len(elems), [pos[g] for g in gen_indices], cols)
        table.parent_indices = elems
        return table

    # -- commutator sets -------------------------------------------------------

    def commutator_set_all_pairs(self):
        """K(G) by brute force over all ordered pairs."""
        inv = self.inverses()
        out = set()
        for a in range(self.n):
            # x -> a * x * a^-1
            lcol_a = self.lcolumn(a)
            col_ainv = self.column(inv[a])
            for b in range(self.n):
                y = lcol_a[col_ainv[b]]  # a b a^-1
                out.add(self.mult(y, inv[b]))
        return out

    def commutator_set_by_classes(self):
        """K(G) via class representatives: K is a union of conjugacy classes."""
        class_of, reps, _ = self.class_partition()
        inv = self.inverses()
        hit_classes = set()
        for r in reps:
            lcol_r = self.lcolumn(r)
            col_rinv = self.column(inv[r])
            for b in range(self.n):
                y = lcol_r[col_rinv[b]]  # r b r^-1
                hit_classes.add(class_of[self.mult(y, inv[b])])
        return {i for i in range(self.n) if class_of[i] in hit_classes}


def _invert(col):
    out = [0] * len(col)
    for i, j in enumerate(col):
        out[j] = i
    return out
