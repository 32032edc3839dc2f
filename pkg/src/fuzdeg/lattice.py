"""Subgroup lattice of a finite group with its permutability relations.

Subgroups are element bitmasks (bit ``x`` set iff element ``x`` is a member).
All relation matrices are filled eagerly when the lattice is built, so every
later pair query is a table lookup.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .groups import Group


@dataclass(frozen=True)
class Subgroup:
    id: int
    members: int
    size: int
    generators: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def elements(self) -> list[int]:
        return [x for x in range(self.members.bit_length()) if self.members >> x & 1]


def mask_of(elements) -> int:
    m = 0
    for x in elements:
        m |= 1 << int(x)
    return m


def elements_of(mask: int) -> list[int]:
    return [x for x in range(mask.bit_length()) if mask >> x & 1]


def closure(g: Group, generators, start: int = 1) -> int:
    """Bitmask of the subgroup generated by ``generators``.

    ``start`` may seed the search with a subgroup already known to lie inside
    the result; its generators must then be among ``generators``.
    """
    gens = [int(x) for x in generators]
    members = start | 1
    queue = elements_of(members)
    table = g.table
    while queue:
        x = queue.pop()
        row = table[x]
        for s in gens:
            y = row[s]
            if not members >> y & 1:
                members |= 1 << y
                queue.append(y)
    return members


def _subgroup_masks(g: Group) -> dict[int, tuple[int, ...]]:
    # Cyclic extension: extend each known subgroup by one outside element and
    # close, until no new subgroup appears.
    found: dict[int, tuple[int, ...]] = {1: ()}
    frontier = [1]
    while frontier:
        fresh = []
        for mask in frontier:
            gens = found[mask]
            for x in range(1, g.order):
                if mask >> x & 1:
                    continue
                new_gens = gens + (x,)
                new = closure(g, new_gens, mask)
                if new not in found:
                    found[new] = new_gens
                    fresh.append(new)
        frontier = fresh
    return found


class SubgroupLattice:
    """All subgroups of ``group`` sorted by (size, bitmask), with relation matrices.

    Attributes ``leq``, ``permutes`` and ``mutually_permutes`` are read-only
    boolean matrices indexed by subgroup id; ``normal`` and ``quasinormal`` are
    boolean vectors.
    """

    def __init__(self, group: Group, jobs: int = 1):
        self.group = group
        masks = _subgroup_masks(group)
        ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
        self.subgroups: tuple[Subgroup, ...] = tuple(
            Subgroup(i, m, m.bit_count(), masks[m]) for i, m in enumerate(ordered)
        )
        for h in self.subgroups:
            assert group.order % h.size == 0, "subgroup size must divide the group order"
        self._index = {h.members: h.id for h in self.subgroups}
        n = group.order
        k = len(self.subgroups)

        self._member_rows = np.zeros((k, n), dtype=bool)
        for h in self.subgroups:
            self._member_rows[h.id, h.elements()] = True
        self._member_lists = [np.flatnonzero(row) for row in self._member_rows]

        rows = self._member_rows.astype(np.int64)
        # leq[i, j]: every member of i lies in j
        self.leq = (rows @ (1 - rows).T) == 0

        self._products = self._fill_products(jobs)
        prod = self._products
        self.permutes = np.array(
            [[prod[i][j] == prod[j][i] for j in range(k)] for i in range(k)], dtype=bool
        )
        not_perm = (~self.permutes).astype(np.int64)
        # bad[i, j] counts subgroups L <= j that fail to permute with i
        bad = not_perm @ self.leq.astype(np.int64)
        self.mutually_permutes = (bad == 0) & (bad.T == 0)
        self.normal = np.array([self._conjugation_invariant(h) for h in self.subgroups], dtype=bool)
        self.quasinormal = self.permutes.all(axis=1)
        for arr in (self.leq, self.permutes, self.mutually_permutes, self.normal, self.quasinormal):
            arr.setflags(write=False)

    def _fill_products(self, jobs: int) -> list[list[int]]:
        k = len(self.subgroups)
        arr = self.group.array

        def row(i: int) -> list[int]:
            hi = self._member_lists[i]
            out = []
            for j in range(k):
                hit = np.zeros(self.group.order, dtype=bool)
                hit[arr[np.ix_(hi, self._member_lists[j])].ravel()] = True
                out.append(mask_of(np.flatnonzero(hit)))
            return out

        if jobs > 1 and k > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(row, range(k)))
        return [row(i) for i in range(k)]

    def _conjugation_invariant(self, h: Subgroup) -> bool:
        arr, inv = self.group.array, self.group.inverse_array
        members = self._member_lists[h.id]
        for x in range(self.group.order):
            conj = arr[arr[x, members], inv[x]]
            if not self._member_rows[h.id, conj].all():
                return False
        return True

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]

    def find(self, members: int) -> Subgroup | None:
        """Look up a subgroup by its member bitmask."""
        i = self._index.get(members)
        return None if i is None else self.subgroups[i]

    def generated(self, *elements: int) -> Subgroup:
        """The lattice member generated by the given elements."""
        found = self.find(closure(self.group, elements))
        assert found is not None
        return found

    def set_product(self, h: Subgroup, k: Subgroup) -> int:
        """Bitmask of ``{x*y : x in h, y in k}``; not necessarily a subgroup."""
        return self._products[h.id][k.id]

    def is_permutable(self, h: Subgroup, k: Subgroup) -> bool:
        return bool(self.permutes[h.id, k.id])

    def is_mutually_permutable(self, h: Subgroup, k: Subgroup) -> bool:
        return bool(self.mutually_permutes[h.id, k.id])

    def is_normal(self, h: Subgroup) -> bool:
        return bool(self.normal[h.id])

    def is_quasinormal(self, h: Subgroup) -> bool:
        return bool(self.quasinormal[h.id])

    def subgroups_of(self, k: Subgroup) -> list[Subgroup]:
        return [self.subgroups[i] for i in np.flatnonzero(self.leq[:, k.id])]

    @cached_property
    def longest_chain(self) -> int:
        """Number of subgroups in a longest strictly increasing chain."""
        depth = [1] * len(self)
        for j in range(len(self)):
            for i in range(j):
                if self.leq[i, j]:
                    depth[j] = max(depth[j], depth[i] + 1)
        return max(depth)

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs ``(child, parent)`` of the inclusion order, sorted."""
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        s = strict.astype(np.int64)
        cover = strict & ((s @ s) == 0)
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(cover))]

    def name(self, h: Subgroup) -> str:
        """Generator-style name such as ``<a^2,b>``; ``1`` and the group label at the ends."""
        if h.size == 1:
            return "1"
        if h.id == self.whole.id:
            return self.group.label
        gens: list[int] = []
        current = 1
        for x in h.elements():
            if not current >> x & 1:
                gens.append(x)
                current = closure(self.group, gens)
                if current == h.members:
                    break
        return "<" + ",".join(self.group.names[x] for x in gens) + ">"


def enumerate_subgroups(g: Group, jobs: int = 1) -> SubgroupLattice:
    return SubgroupLattice(g, jobs=jobs)


def set_product(lat: SubgroupLattice, h: Subgroup, k: Subgroup) -> int:
    return lat.set_product(h, k)


def permutes(lat: SubgroupLattice, h: Subgroup, k: Subgroup) -> bool:
    return lat.is_permutable(h, k)


def mutually_permutable(lat: SubgroupLattice, h: Subgroup, k: Subgroup) -> bool:
    return lat.is_mutually_permutable(h, k)


def is_normal(lat: SubgroupLattice, h: Subgroup) -> bool:
    return lat.is_normal(h)


def is_quasinormal(lat: SubgroupLattice, h: Subgroup) -> bool:
    return lat.is_quasinormal(h)


def hasse_edges(lat: SubgroupLattice) -> list[tuple[int, int]]:
    return lat.hasse_edges()
