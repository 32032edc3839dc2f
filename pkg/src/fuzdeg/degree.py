"""Permutability of fuzzy subgroup classes and the commutativity degree.

Two classes permute when every pair of their level subgroups permutes. The
degree is the fraction of ordered class pairs (diagonal included) that
permute, kept as an exact Fraction.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .classes import FuzzyClass
from .config import DEFAULT_PAIR_CAP
from .errors import CapacityError
from .lattice import SubgroupLattice


def class_permutes(lat: SubgroupLattice, c1: FuzzyClass, c2: FuzzyClass) -> bool:
    # The zero level, when present, is the whole group and permutes with
    # everything, so positive levels decide.
    return bool(lat.permutes[np.ix_(c1.chain, c2.chain)].all())


def class_mutually_permutes(
    lat: SubgroupLattice, c1: FuzzyClass, c2: FuzzyClass, *, zero_level: bool = False
) -> bool:
    """Every pair of positive level subgroups is mutually permutable.

    With ``zero_level`` the whole group also counts as a level of any class
    without full support. Unlike plain permutability this can change the
    answer, since being mutually permutable with G means being quasinormal.
    """
    if zero_level:
        a, b = c1.level_ids(lat), c2.level_ids(lat)
    else:
        a, b = c1.chain, c2.chain
    return bool(lat.mutually_permutes[np.ix_(a, b)].all())


@dataclass(frozen=True)
class DegreeReport:
    label: str
    s: int
    permutable_pairs: int
    sd: Fraction
    n_count: int
    qn_count: int
    per_class_commuting: dict[FuzzyClass, int]


def _compatible_mask(lat: SubgroupLattice, c: FuzzyClass) -> int:
    row = lat.permutes[list(c.chain)].all(axis=0)
    mask = 0
    for j in np.flatnonzero(row):
        mask |= 1 << int(j)
    return mask


class _ChainCounter:
    """Counts nonempty chains inside a subset of the lattice, memoized per subset."""

    def __init__(self, lat: SubgroupLattice):
        k = len(lat)
        self._below = [[i for i in range(j) if lat.leq[i, j]] for j in range(k)]
        self._cache: dict[int, int] = {}

    def __call__(self, subset: int) -> int:
        hit = self._cache.get(subset)
        if hit is not None:
            return hit
        tops: dict[int, int] = {}
        for j in range(subset.bit_length()):
            if subset >> j & 1:
                tops[j] = 1 + sum(tops[i] for i in self._below[j] if i in tops)
        total = sum(tops.values())
        self._cache[subset] = total
        return total


def commuting_set(lat: SubgroupLattice, classes: Sequence[FuzzyClass], c: FuzzyClass) -> int:
    """Number of classes in ``classes`` that permute with ``c``."""
    return sum(1 for other in classes if class_permutes(lat, c, other))


def normal_and_quasinormal_counts(
    lat: SubgroupLattice, classes: Sequence[FuzzyClass]
) -> tuple[int, int]:
    n_count = sum(1 for c in classes if lat.normal[list(c.chain)].all())
    qn_count = sum(1 for c in classes if lat.quasinormal[list(c.chain)].all())
    return n_count, qn_count


def commutativity_degree(
    lat: SubgroupLattice,
    classes: Sequence[FuzzyClass],
    *,
    pair_cap: int = DEFAULT_PAIR_CAP,
    jobs: int = 1,
) -> DegreeReport:
    """Exact degree over all ordered pairs of ``classes``.

    ``classes`` must be the complete enumeration for ``lat``: the number of
    classes permuting with ``c`` is then the number of chains made only of
    subgroups that permute with every member of ``c``.
    """
    s = len(classes)
    if s * s > pair_cap:
        raise CapacityError(f"{s}^2 class pairs exceed the configured cap {pair_cap}")
    masks = [_compatible_mask(lat, c) for c in classes]
    distinct = sorted(set(masks))

    if jobs > 1 and len(distinct) > 1:
        # Each worker gets its own counter; results are merged by subset key.
        chunks = [distinct[i::jobs] for i in range(jobs)]

        def work(chunk: list[int]) -> dict[int, int]:
            local = _ChainCounter(lat)
            return {m: local(m) for m in chunk}

        counts: dict[int, int] = {}
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(work, chunks):
                counts.update(part)
    else:
        counter = _ChainCounter(lat)
        counts = {m: counter(m) for m in distinct}

    per_class = {c: counts[m] for c, m in zip(classes, masks)}
    pairs = sum(per_class.values())
    n_count, qn_count = normal_and_quasinormal_counts(lat, classes)
    return DegreeReport(
        label=lat.group.label,
        s=s,
        permutable_pairs=pairs,
        sd=Fraction(pairs, s * s),
        n_count=n_count,
        qn_count=qn_count,
        per_class_commuting=per_class,
    )
