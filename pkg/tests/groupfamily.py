"""Shared test groups and independent brute-force helpers."""

from __future__ import annotations

import itertools
from functools import lru_cache
from pathlib import Path

from fuzdeg.groups import Group, parse_group_spec
from fuzdeg.lattice import SubgroupLattice, enumerate_subgroups

DATA = Path(__file__).parent / "data"
Q8 = f"file:{DATA / 'q8.txt'}"

SMALL = [
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
    "klein", "symmetric:3",
]
ORDER8 = ["cyclic:8", "product:cyclic:2,cyclic:4", "dihedral:8",
          "product:(product:cyclic:2,cyclic:2),cyclic:2", Q8]
UP_TO_16 = SMALL + ORDER8 + [
    "cyclic:7", "cyclic:9", "cyclic:12", "cyclic:16", "dihedral:10", "dihedral:12",
    "dihedral:14", "dihedral:16", "product:cyclic:3,cyclic:3", "product:cyclic:2,cyclic:6",
    "product:cyclic:4,cyclic:4", "product:cyclic:2,cyclic:8", "product:cyclic:2,dihedral:8",
]
NONABELIAN = ["symmetric:3", "dihedral:8", "dihedral:10", "dihedral:12", Q8]


@lru_cache(maxsize=None)
def group(spec: str) -> Group:
    return parse_group_spec(spec)


@lru_cache(maxsize=None)
def lattice(spec: str) -> SubgroupLattice:
    return enumerate_subgroups(group(spec))


def gen_closure(g: Group, elems) -> frozenset[int]:
    """Subgroup generated by ``elems``, by repeated multiplication of Python sets."""
    members = {0, *elems}
    while True:
        new = {g.table[x][y] for x in members for y in members} | members
        if new == members:
            return frozenset(members)
        members = new


def brute_subgroups(g: Group) -> set[frozenset[int]]:
    """Every subgroup as an element set, found without the library's enumeration.

    Up to order 8 every subset containing the identity is tested for closure.
    Above that, subgroups generated by at most two elements are closed under
    joins until nothing new appears.
    """
    n = g.order
    if n <= 8:
        out = set()
        for r in range(n):
            for rest in itertools.combinations(range(1, n), r):
                s = frozenset((0, *rest))
                if all(g.table[x][y] in s for x in s for y in s):
                    out.add(s)
        return out
    found = {gen_closure(g, pair) for pair in itertools.combinations_with_replacement(range(n), 2)}
    while True:
        joins = {gen_closure(g, a | b) for a in found for b in found} | found
        if joins == found:
            return found
        found = joins


def is_subgroup_set(g: Group, s) -> bool:
    s = set(s)
    return 0 in s and all(g.table[x][y] in s for x in s for y in s)


def sub_id(lat: SubgroupLattice, names: list[str]):
    """Lattice subgroup generated by the named elements."""
    g = lat.group
    return lat.generated(*(g.names.index(n) for n in names))


# one line per acceptance criterion, filled by test_acceptance and echoed by conftest
ACCEPTANCE: list[str] = []
