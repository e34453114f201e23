"""Public structural computations on permutation groups.

These are the element-enumeration based operations: centers, derived
subgroups, normal closures, conjugacy classes, quotient actions, normal
subgroup enumeration, abelian invariants and isomorphism-invariant
fingerprints.  Groups above the enumeration cap raise CapacityError.
"""

from __future__ import annotations

from dataclasses import dataclass

from gategroups.perm import Permutation, PermGroup

__all__ = [
    "GroupFingerprint",
    "NormalSubgroups",
    "center",
    "derived_subgroup",
    "normal_closure",
    "conjugacy_classes",
    "coset_action",
    "normal_subgroups",
    "abelian_invariants",
    "fingerprint",
    "element_index",
    "subgroup_indices",
]


def element_index(group, perm):
    """Index of a permutation inside the group's ambient element table."""
    table = group.ambient_table()
    imgs = perm.imgs if isinstance(perm, Permutation) else tuple(perm)
    if table._perm_elements is not None:
        index = getattr(table, "_index_cache", None)
        if index is None:
            index = {p: i for i, p in enumerate(table._perm_elements)}
            table._index_cache = index
        if imgs not in index:
            raise ValueError("permutation is not an element of the group")
        return index[imgs]
    # regular table: the element is determined by the image of point 0
    i = imgs[0]
    if tuple(table.perm_of(i)) != tuple(imgs):
        raise ValueError("permutation is not an element of the group")
    return i


def subgroup_indices(group, sub):
    """Element indices of ``sub`` inside ``group``'s ambient table."""
    if sub._table is group.ambient_table() and sub._table is not None:
        return set(sub.member_indices())
    own = sub.own_table()
    members = set()
    for i in range(own.n):
        members.add(element_index(group, Permutation(own.perm_of(i))))
    return members


def _own_with_map(group):
    own = group.own_table()
    return own, own.parent_indices


def _wrap(group, own, gen_indices, members, to_parent):
    if to_parent is not None:
        gen_indices = [to_parent[i] for i in gen_indices]
        members = {to_parent[i] for i in members}
    return group.subgroup_from_indices(gen_indices, members)


def center(group):
    """Subgroup of elements commuting with everything; normal in the group."""
    own, to_parent = _own_with_map(group)
    members = own.center_set()
    return _wrap(group, own, [i for i in members if i != 0], set(members), to_parent)


def derived_subgroup(group):
    """Normal closure of the commutators of the generators."""
    own, to_parent = _own_with_map(group)
    members, gens = own.derived_data()
    return _wrap(group, own, gens, members, to_parent)


def normal_closure(group, seeds):
    """Smallest normal subgroup containing the seed permutations."""
    own, to_parent = _own_with_map(group)
    seed_idx = []
    for seed in seeds:
        i = element_index(group, seed)
        if to_parent is not None:
            back = {p: o for o, p in enumerate(to_parent)}
            if i not in back:
                raise ValueError("seed lies outside the group")
            i = back[i]
        seed_idx.append(i)
    members, gens = own.normal_closure_set(seed_idx)
    return _wrap(group, own, gens, members, to_parent)


def conjugacy_classes(group):
    """Class representatives with their sizes, in deterministic order."""
    own, to_parent = _own_with_map(group)
    _, reps, sizes = own.class_partition()
    ambient = group.ambient_table()
    out = []
    for rep, size in zip(reps, sizes):
        i = to_parent[rep] if to_parent is not None else rep
        out.append((Permutation(ambient.perm_of(i)), size))
    return out


def coset_action(group, normal):
    """Permutation image of the action on right cosets of a normal subgroup.

    For normal subgroups this is the regular representation of the
    quotient; its order equals the index.
    """
    own, to_parent = _own_with_map(group)
    members = subgroup_indices(group, normal)
    if to_parent is not None:
        back = {p: o for o, p in enumerate(to_parent)}
        members = {back[i] for i in members}
    sub_gens = [i for i in members if i != 0]
    if not own.is_normal_set(members, sub_gens):
        raise ValueError("subgroup is not normal; the quotient is undefined")
    quotient, _, _ = own.coset_action(members)
    gens = [Permutation(col) for col in quotient._rmul]
    return PermGroup(quotient.n, gens, order=quotient.n, table=quotient)


@dataclass
class NormalSubgroups:
    all: list
    trivial: PermGroup
    full: PermGroup
    proper_nontrivial: list

    def orders(self):
        return sorted(sub.order() for sub in self.all)

    def proper_orders(self):
        return sorted(sub.order() for sub in self.proper_nontrivial)


def normal_subgroups(group):
    """All normal subgroups (join closure of class normal-closures)."""
    own, to_parent = _own_with_map(group)
    sets = own.normal_subgroup_sets()
    wrapped = []
    trivial = full = None
    proper = []
    for members, gens in sets:
        sub = _wrap(group, own, gens, members, to_parent)
        wrapped.append(sub)
        if len(members) == 1:
            trivial = sub
        elif len(members) == own.n:
            full = sub
        else:
            proper.append(sub)
    return NormalSubgroups(wrapped, trivial, full, proper)


def abelian_invariants(group):
    """Invariant factors d1 | d2 | ... of the abelianization."""
    own, _ = _own_with_map(group)
    return own.abelian_invariants()


@dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-invariant summary; unequal fingerprints mean non-isomorphic."""

    order: int
    element_orders: tuple  # sorted (element order, multiplicity) pairs
    class_sizes: tuple
    center_order: int
    derived_series: tuple  # orders of G, G', G'', ... until stable
    abelian_invariants: tuple


def fingerprint(group):
    own, _ = _own_with_map(group)
    return _fingerprint_of(own)


def _fingerprint_of(table):
    orders = table.element_orders()
    hist = {}
    for o in orders:
        hist[o] = hist.get(o, 0) + 1
    _, _, sizes = table.class_partition()
    series = [table.n]
    t = table
    while True:
        members, gens = t.derived_data()
        if len(members) == series[-1]:
            break
        series.append(len(members))
        if len(members) == 1:
            break
        t = t.subgroup_table(gens, members)
    return GroupFingerprint(
        order=table.n,
        element_orders=tuple(sorted(hist.items())),
        class_sizes=tuple(sorted(sizes)),
        center_order=len(table.center_set()),
        derived_series=tuple(series),
        abelian_invariants=tuple(table.abelian_invariants()),
    )
