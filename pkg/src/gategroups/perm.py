"""Permutations on 1..n and permutation groups with a deterministic BSGS.

Internally points are 0-based; the textual cycle notation ``(1,2)(3,4,5)``
is 1-based.  Products compose left-to-right: ``(p * q)`` applies p first.
The stabilizer chain uses the deterministic Schreier-Sims procedure with
the smallest-moved-point base rule, and stops early when the group order
is already known (regular representations of enumerated matrix groups).
"""

from __future__ import annotations

import re

from gategroups.config import limit
from gategroups.errors import CapacityError

__all__ = ["Permutation", "PermGroup", "StabilizerChain", "write_perm_group", "read_perm_group"]


class Permutation:
    __slots__ = ("imgs",)

    def __init__(self, images):
        imgs = tuple(images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError("images must be a bijection on 0..n-1")
        object.__setattr__(self, "imgs", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from 1-based cycles, e.g. [(1, 2), (3, 4, 5)]."""
        imgs = list(range(degree))
        for cycle in cycles:
            pts = [c - 1 for c in cycle]
            if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
                raise ValueError(f"bad cycle {cycle!r} for degree {degree}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                imgs[a] = b
        return cls(imgs)

    @classmethod
    def parse(cls, text, degree=None):
        """Parse cycle notation like ``(1,2)(3,4,5)``; ``()`` is the identity."""
        cycles = []
        highest = 0
        for chunk in re.findall(r"\(([^()]*)\)", text):
            pts = [int(tok) for tok in re.split(r"[,\s]+", chunk.strip()) if tok]
            if pts:
                cycles.append(tuple(pts))
                highest = max(highest, max(pts))
        leftover = re.sub(r"\([^()]*\)|\s", "", text)
        if leftover:
            raise ValueError(f"cannot parse permutation {text!r}")
        if degree is None:
            degree = highest
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.imgs)

    def image(self, point):
        return self.imgs[point]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        o = other.imgs
        return Permutation(o[x] for x in self.imgs)

    def inverse(self):
        out = [0] * len(self.imgs)
        for i, j in enumerate(self.imgs):
            out[j] = i
        return Permutation(out)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.imgs))

    def order(self):
        n = 1
        p = self
        while not p.is_identity:
            p = p * self
            n += 1
        return n

    def cycles(self):
        """Nontrivial cycles as 1-based tuples, lexicographically ordered."""
        seen = set()
        out = []
        for start in range(len(self.imgs)):
            if start in seen or self.imgs[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            x = self.imgs[start]
            while x != start:
                cycle.append(x)
                seen.add(x)
                x = self.imgs[x]
            out.append(tuple(c + 1 for c in cycle))
        return out

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, {self.degree})"

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.imgs == other.imgs

    def __hash__(self):
        return hash(self.imgs)


def _compose(p, q):
    return tuple(q[x] for x in p)


def _invert(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def _is_ident(p):
    return all(i == j for i, j in enumerate(p))


class _Done(Exception):
    pass


class _Level:
    __slots__ = ("base", "gens", "orbit")

    def __init__(self, base):
        self.base = base
        self.gens = []  # (perm, inverse) pairs first placed at this level
        self.orbit = {base: None}  # point -> (perm, inverse, previous point)


class StabilizerChain:
    """Deterministic Schreier-Sims with Schreier-vector transversals.

    The group at level i is generated by the strong generators of levels
    i and deeper (those all fix the base points above i).
    """

    def __init__(self, degree, generators, known_order=None):
        self.degree = degree
        self.levels = []
        try:
            for g in generators:
                self._insert(tuple(g.imgs if isinstance(g, Permutation) else g), 0, known_order)
            changed = True
            while changed:
                changed = False
                for i in range(len(self.levels)):
                    if self._process_level(i, known_order):
                        changed = True
        except _Done:
            pass

    def order(self):
        total = 1
        for level in self.levels:
            total *= len(level.orbit)
        return total

    def base(self):
        return [level.base for level in self.levels]

    def contains(self, perm):
        if isinstance(perm, Permutation):
            perm = perm.imgs
        if len(perm) != self.degree:
            return False
        residue, _ = self._sift(tuple(perm), 0)
        return residue is None

    def _gens_at(self, i):
        out = []
        for level in self.levels[i:]:
            out.extend(level.gens)
        return out

    def _transversal(self, level, point):
        """An element u with u(base) = point, from the Schreier vector."""
        steps = []
        while point != level.base:
            g, _, prev = level.orbit[point]
            steps.append(g)
            point = prev
        u = tuple(range(self.degree))
        for g in reversed(steps):
            u = _compose(u, g)
        return u

    def _rebuild_orbit(self, i):
        level = self.levels[i]
        gens = self._gens_at(i)
        level.orbit = {level.base: None}
        queue = [level.base]
        for a in queue:
            for g, ginv in gens:
                b = g[a]
                if b not in level.orbit:
                    level.orbit[b] = (g, ginv, a)
                    queue.append(b)
                b = ginv[a]
                if b not in level.orbit:
                    level.orbit[b] = (ginv, g, a)
                    queue.append(b)

    def _sift(self, p, lvl):
        for i in range(lvl, len(self.levels)):
            level = self.levels[i]
            beta = p[level.base]
            if beta == level.base:
                continue
            if beta not in level.orbit:
                return p, i
            u = self._transversal(level, beta)
            p = _compose(p, _invert(u))
        return (None, len(self.levels)) if _is_ident(p) else (p, len(self.levels))

    def _insert(self, p, lvl, known_order):
        residue, where = self._sift(p, lvl)
        if residue is None:
            return False
        if where == len(self.levels):
            base = min(i for i, j in enumerate(residue) if i != j)
            self.levels.append(_Level(base))
        self.levels[where].gens.append((residue, _invert(residue)))
        for i in range(where + 1):
            self._rebuild_orbit(i)
        if known_order is not None and self.order() == known_order:
            raise _Done
        return True

    def _process_level(self, i, known_order):
        """Sift all Schreier generators of level i; returns True on growth."""
        level = self.levels[i]
        changed = False
        for beta in sorted(level.orbit):
            u = self._transversal(level, beta)
            for g, _ in self._gens_at(i):
                gamma = g[beta]
                u2 = self._transversal(level, gamma)
                schreier = _compose(_compose(u, g), _invert(u2))
                if not _is_ident(schreier):
                    if self._insert(schreier, i + 1, known_order):
                        changed = True
        return changed


class PermGroup:
    """A permutation group given by generators.

    ``order`` may be passed when already known (regular representations);
    ``table`` attaches an ElementTable so structural computations reuse it.
    """

    def __init__(self, degree, generators, order=None, table=None, members=None):
        self.degree = degree
        self.generators = [
            g if isinstance(g, Permutation) else Permutation(g) for g in generators
        ]
        for g in self.generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self._order = order
        self._chain = None
        self._table = table  # ElementTable of the ambient enumeration
        self._members = members  # element indices inside _table, None = whole
        self._own = None  # standalone ElementTable of this very group

    @property
    def is_trivial(self):
        return all(g.is_identity for g in self.generators)

    def stabilizer_chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.generators, self._order)
        return self._chain

    def order(self):
        if self._order is None:
            self._order = self.stabilizer_chain().order()
        return self._order

    def __len__(self):
        return self.order()

    def contains(self, perm):
        return self.stabilizer_chain().contains(perm)

    def __contains__(self, perm):
        return self.contains(perm)

    # -- element table plumbing -------------------------------------------

    def attach(self, table, members=None):
        self._table = table
        self._members = members
        return self

    def ambient_table(self):
        """ElementTable of the enumeration this group lives in (cached)."""
        if self._table is None:
            if not self.generators:
                raise ValueError("cannot enumerate an empty generator list")
            from gategroups.cayley import ElementTable

            cap = limit("MAX_ENUMERATION")
            if self._order is not None and self._order > cap:
                raise CapacityError(
                    f"group of order {self._order} exceeds the enumeration cap {cap}"
                )
            self._table = ElementTable.from_permutations(
                self.degree, [g.imgs for g in self.generators], cap
            )
            self._members = None
        return self._table

    def member_indices(self):
        table = self.ambient_table()
        if self._members is None:
            return range(table.n)
        return self._members

    def own_table(self):
        """Standalone ElementTable of this group; identity mapping if whole."""
        if self._own is None:
            table = self.ambient_table()
            if self._members is None:
                self._own = table
            else:
                gen_idx = self._gen_indices_in(table)
                self._own = table.subgroup_table(gen_idx, set(self._members))
        return self._own

    def _gen_indices_in(self, table):
        if table._perm_elements is not None:
            index = {p: i for i, p in enumerate(table._perm_elements)}
            return [index[g.imgs] for g in self.generators]
        # regular table: an element is determined by the image of point 0
        out = []
        for g in self.generators:
            i = g.imgs[0]
            out.append(i)
        return out

    def subgroup_from_indices(self, gen_indices, members):
        """Wrap a subgroup (indices of the ambient table) as a PermGroup."""
        table = self.ambient_table()
        gens = [Permutation(table.perm_of(i)) for i in gen_indices]
        if not gens:
            gens = [Permutation.identity(self.degree)]
        sub = PermGroup(self.degree, gens, order=len(members))
        sub.attach(table, tuple(sorted(members)))
        return sub

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"


def write_perm_group(group, path):
    """Group file: a degree line, then one generator per line in cycle notation."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"degree {group.degree}\n")
        for g in group.generators:
            fh.write(str(g) + "\n")


def read_perm_group(path):
    with open(path, encoding="ascii") as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines or not lines[0].startswith("degree "):
        raise ValueError("group file must start with a 'degree' line")
    degree = int(lines[0].split()[1])
    gens = [Permutation.parse(ln, degree) for ln in lines[1:]]
    if not gens:
        gens = [Permutation.identity(degree)]
    return PermGroup(degree, gens)
