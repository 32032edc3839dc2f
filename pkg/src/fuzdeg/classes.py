"""Equivalence classes of fuzzy subgroups, encoded as subgroup chains.

Two fuzzy subgroups with value 1 at the identity are equivalent when they
order the elements the same way and vanish on the same set. That information
is exactly the strictly increasing chain of their positive level subgroups,
so a class is stored as that chain of lattice ids. The top of the chain is
the support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import DEFAULT_CLASS_CAP
from .errors import CapacityError, InternalConsistencyError, InvalidFuzzySubgroupError
from .lattice import Subgroup, SubgroupLattice


@dataclass(frozen=True, order=True)
class FuzzyClass:
    chain: tuple[int, ...]
    full_support: bool

    def __post_init__(self) -> None:
        if not self.chain:
            raise ValueError("a class chain must be nonempty")

    @property
    def support_id(self) -> int:
        return self.chain[-1]

    def level_ids(self, lat: SubgroupLattice) -> tuple[int, ...]:
        """Chain ids plus the whole group when the class takes the value 0."""
        if self.full_support:
            return self.chain
        return self.chain + (lat.whole.id,)

    def validate(self, lat: SubgroupLattice) -> None:
        for a, b in zip(self.chain, self.chain[1:]):
            if a == b or not lat.leq[a, b]:
                raise ValueError(f"chain {self.chain} is not strictly increasing")
        if self.full_support != (self.support_id == lat.whole.id):
            raise ValueError("full_support flag disagrees with the chain top")


def make_class(lat: SubgroupLattice, chain: Sequence[int]) -> FuzzyClass:
    c = FuzzyClass(tuple(int(i) for i in chain), int(chain[-1]) == lat.whole.id)
    c.validate(lat)
    return c


@dataclass(frozen=True)
class ClassCensus:
    per_top: dict[int, int]
    total: int
    longest_chain: int


def _covers_above(lat: SubgroupLattice) -> list[list[int]]:
    k = len(lat)
    return [[j for j in range(i + 1, k) if lat.leq[i, j]] for i in range(k)]


def enumerate_classes(lat: SubgroupLattice, class_cap: int = DEFAULT_CLASS_CAP) -> list[FuzzyClass]:
    """Every nonempty chain of the lattice once, in lexicographic order of id sequences."""
    above = _covers_above(lat)
    whole = lat.whole.id
    out: list[FuzzyClass] = []
    stack: list[tuple[int, ...]] = [(i,) for i in reversed(range(len(lat)))]
    while stack:
        chain = stack.pop()
        out.append(FuzzyClass(chain, chain[-1] == whole))
        if len(out) > class_cap:
            raise CapacityError(f"more than {class_cap} fuzzy subgroup classes")
        stack.extend(chain + (j,) for j in reversed(above[chain[-1]]))
    return out


def count_classes(lat: SubgroupLattice) -> ClassCensus:
    """Count chains by top without materializing them: c(H) = 1 + sum of c(K) over K < H."""
    k = len(lat)
    per_top: dict[int, int] = {}
    for j in range(k):
        per_top[j] = 1 + sum(per_top[i] for i in range(j) if lat.leq[i, j])
    return ClassCensus(per_top, sum(per_top.values()), lat.longest_chain)


def classes_with_support(lat: SubgroupLattice, h: Subgroup, census: ClassCensus | None = None) -> int:
    """Number of classes whose support is exactly ``h``."""
    census = census or count_classes(lat)
    return census.per_top[h.id]


def _values_of(mu) -> tuple:
    return tuple(getattr(mu, "values", mu))


def classify(lat: SubgroupLattice, mu) -> FuzzyClass:
    """Canonical class of a concrete fuzzy subgroup (a FuzzySubgroup or a value sequence)."""
    g = lat.group
    values = _values_of(mu)
    if len(values) != g.order:
        raise InvalidFuzzySubgroupError(f"expected {g.order} values, got {len(values)}")
    values = tuple(Fraction(v) for v in values)
    if values[0] != 1:
        raise InvalidFuzzySubgroupError("membership at the identity must be 1")
    for x in range(g.order):
        if not 0 <= values[x] <= 1:
            raise InvalidFuzzySubgroupError(f"value {values[x]} at element {x} is outside [0, 1]")
        if values[g.inverse[x]] < values[x]:
            raise InvalidFuzzySubgroupError(f"inverse law fails at element {x}")
        row = g.table[x]
        for y in range(g.order):
            if values[row[y]] < min(values[x], values[y]):
                raise InvalidFuzzySubgroupError(f"product law fails at ({x}, {y})")
    chain = []
    for t in sorted({v for v in values if v > 0}, reverse=True):
        mask = 0
        for x, v in enumerate(values):
            if v >= t:
                mask |= 1 << x
        h = lat.find(mask)
        if h is None:
            raise InternalConsistencyError(f"level set {mask:#x} of a fuzzy subgroup is not in the lattice")
        chain.append(h.id)
    return FuzzyClass(tuple(chain), chain[-1] == lat.whole.id)
