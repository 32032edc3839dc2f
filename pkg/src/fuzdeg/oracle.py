"""Brute-force ground truth over explicit fuzzy subgroups.

Membership values are exact Fractions. Every predicate here evaluates its
defining quantifiers literally over the group elements; none of them goes
through level-subgroup shortcuts, except where a function is documented to
compare both characterizations.

Internally, values are replaced by integer ranks before vectorized checks.
All definitions only compare values (``>=``, ``min``, ``max``), so an
order-preserving relabeling is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .config import DEFAULT_ORACLE_CAP
from .errors import CapacityError, InsufficientDepthError, InternalConsistencyError
from .groups import Group
from .lattice import SubgroupLattice


@dataclass(frozen=True, eq=False)
class FuzzySubgroup:
    group: Group
    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, group: Group, values: Sequence) -> FuzzySubgroup:
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != group.order:
            raise ValueError(f"expected {group.order} values, got {len(vals)}")
        return cls(group, vals)

    @classmethod
    def indicator(cls, group: Group, members: int) -> FuzzySubgroup:
        return cls(group, tuple(Fraction(members >> x & 1) for x in range(group.order)))

    @classmethod
    def constant_one(cls, group: Group) -> FuzzySubgroup:
        return cls(group, (Fraction(1),) * group.order)

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzySubgroup):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    def __hash__(self) -> int:
        return hash((id(self.group), self.values))

    @cached_property
    def ranks(self) -> np.ndarray:
        return _ranks(self.values)

    @cached_property
    def ascending(self) -> tuple[Fraction, ...]:
        return tuple(sorted(set(self.values)))

    @cached_property
    def image(self) -> tuple[Fraction, ...]:
        """Distinct values, largest first."""
        return tuple(sorted(set(self.values), reverse=True))

    def level(self, t) -> int:
        """Bitmask of ``{x : mu(x) >= t}``."""
        mask = 0
        for x, v in enumerate(self.values):
            if v >= t:
                mask |= 1 << x
        return mask

    def __repr__(self) -> str:
        vals = ", ".join(f"{n}:{v}" for n, v in zip(self.group.names, self.values))
        return f"FuzzySubgroup({self.group.label}; {vals})"


@dataclass(frozen=True)
class MembershipGrid:
    """Positive membership values ``1 = l0 > l1 > ... > l(m-1) > 0``; 0 is always available."""

    levels: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.levels or self.levels[0] != 1:
            raise ValueError("a grid must start at 1")
        for a, b in zip(self.levels, self.levels[1:]):
            if not a > b:
                raise ValueError("grid values must be strictly decreasing")
        if self.levels[-1] <= 0:
            raise ValueError("grid values must be positive")

    @property
    def depth(self) -> int:
        return len(self.levels)

    @classmethod
    def harmonic(cls, depth: int) -> MembershipGrid:
        return cls(tuple(Fraction(1, k + 1) for k in range(depth)))


def _ranks(values: Sequence[Fraction]) -> np.ndarray:
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return np.array([order[v] for v in values], dtype=np.int64)


def _values(mu) -> tuple[Fraction, ...]:
    if isinstance(mu, FuzzySubgroup):
        return mu.values
    return tuple(Fraction(v) for v in mu)


@lru_cache(maxsize=32)
def _conjugate_products(g: Group) -> np.ndarray:
    # W[a, b, x] = x^-1 (a b)
    arr, inv = g.array, g.inverse_array
    ab = arr  # ab[a, b]
    return arr[inv[None, None, :], ab[:, :, None]]


def _is_subgroup_mask(g: Group, members: np.ndarray) -> bool:
    # members: boolean vector over elements
    if not members[0]:
        return False
    idx = np.flatnonzero(members)
    if not members[g.array[np.ix_(idx, idx)]].all():
        return False
    return bool(members[g.inverse_array[idx]].all())


def _product_law(g: Group, r: np.ndarray) -> bool:
    arr = g.array
    return bool((r[arr] >= np.minimum(r[:, None], r[None, :])).all()) and bool(
        (r[g.inverse_array] >= r).all()
    )


def _level_law(g: Group, r: np.ndarray) -> bool:
    return all(_is_subgroup_mask(g, r >= t) for t in np.unique(r))


def is_fuzzy_subgroup(g: Group, values) -> bool:
    """Check the product/inverse laws and the level-set criterion; they must agree."""
    vals = _values(values)
    if len(vals) != g.order:
        raise ValueError(f"expected {g.order} values, got {len(vals)}")
    if any(not 0 <= v <= 1 for v in vals):
        return False
    r = _ranks(vals)
    direct = _product_law(g, r)
    levels = _level_law(g, r)
    if direct != levels:
        raise InternalConsistencyError(
            f"product laws say {direct} but level sets say {levels} for {vals}"
        )
    return direct


def _batch_laws(g: Group, codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # codes: (M, n) integer ranks; returns (direct, levels) boolean vectors.
    arr, inv = g.array, g.inverse_array
    prod_ok = (codes[:, arr] >= np.minimum(codes[:, :, None], codes[:, None, :])).all(axis=(1, 2))
    inv_ok = (codes[:, inv] >= codes).all(axis=1)
    direct = prod_ok & inv_ok

    levels = np.ones(len(codes), dtype=bool)
    top = int(codes.max()) if codes.size else 0
    for t in range(1, top + 1):
        member = codes >= t
        nonempty = member.any(axis=1)
        has_e = member[:, 0]
        closed = (member[:, arr] | ~(member[:, :, None] & member[:, None, :])).all(axis=(1, 2))
        inv_closed = (member[:, inv] | ~member).all(axis=1)
        # an empty level (threshold above the image) imposes nothing
        levels &= ~nonempty | (has_e & closed & inv_closed)
    return direct, levels


def enumerate_fuzzy_subgroups(
    g: Group,
    grid: MembershipGrid | None = None,
    *,
    lat: SubgroupLattice | None = None,
    cap: int = DEFAULT_ORACLE_CAP,
) -> list[FuzzySubgroup]:
    """Every map into ``grid`` plus 0, with value 1 at the identity, that is a fuzzy subgroup.

    The grid must be at least as deep as the longest subgroup chain; the
    default is the harmonic grid of exactly that depth.
    """
    if lat is None:
        from .lattice import enumerate_subgroups

        lat = enumerate_subgroups(g)
    need = lat.longest_chain
    if grid is None:
        grid = MembershipGrid.harmonic(need)
    if grid.depth < need:
        raise InsufficientDepthError(
            f"grid depth {grid.depth} is below the longest subgroup chain {need}"
        )
    m = grid.depth
    n = g.order
    total = (m + 1) ** (n - 1)
    if total > cap:
        raise CapacityError(f"{total} candidate maps exceed the oracle cap {cap}")
    # code 0 is value 0; code k >= 1 is grid.levels[m - k], so code m is 1
    value_of = (Fraction(0),) + tuple(reversed(grid.levels))
    out: list[FuzzySubgroup] = []
    chunk = 1 << 15
    it = itertools.product(range(m + 1), repeat=n - 1)
    while True:
        block = list(itertools.islice(it, chunk))
        if not block:
            break
        codes = np.empty((len(block), n), dtype=np.int64)
        codes[:, 0] = m
        if n > 1:
            codes[:, 1:] = np.array(block, dtype=np.int64)
        direct, levels = _batch_laws(g, codes)
        if (direct != levels).any():
            bad = codes[np.flatnonzero(direct != levels)[0]]
            raise InternalConsistencyError(f"laws and level criterion disagree on codes {bad}")
        for row in codes[direct]:
            out.append(FuzzySubgroup(g, tuple(value_of[c] for c in row)))
    return out


def equivalent(mu: FuzzySubgroup, nu: FuzzySubgroup) -> bool:
    """Same strict order on elements and same zero set."""
    if mu.group is not nu.group:
        raise ValueError("fuzzy subgroups live on different groups")
    a, b = mu.ranks, nu.ranks
    order_same = ((a[:, None] > a[None, :]) == (b[:, None] > b[None, :])).all()
    zeros_same = all((u == 0) == (v == 0) for u, v in zip(mu.values, nu.values))
    return bool(order_same and zeros_same)


def _ranked(mu) -> tuple[tuple[Fraction, ...], np.ndarray]:
    # ascending distinct values and each element's index into them
    if isinstance(mu, FuzzySubgroup):
        return mu.ascending, mu.ranks
    vals = _values(mu)
    return tuple(sorted(set(vals))), _ranks(vals)


def fuzzy_product(mu, nu, g: Group | None = None) -> tuple[Fraction, ...]:
    """Max-min convolution: value at x is the max over y*z = x of min(mu(y), nu(z))."""
    g = g or getattr(mu, "group", None) or getattr(nu, "group", None)
    if g is None:
        raise ValueError("a group is needed when both arguments are plain value sequences")
    su, rm = _ranked(mu)
    sv, rn = _ranked(nu)
    universe = sorted(set(su) | set(sv))
    pos = {v: i for i, v in enumerate(universe)}
    rm = np.array([pos[v] for v in su], dtype=np.int64)[rm]
    rn = np.array([pos[v] for v in sv], dtype=np.int64)[rn]
    pair = np.minimum(rm[:, None], rn[None, :])
    out = np.full(g.order, -1, dtype=np.int64)
    np.maximum.at(out, g.array.ravel(), pair.ravel())
    return tuple(universe[k] for k in out)


def is_permuted_by(mu: FuzzySubgroup, nu: FuzzySubgroup) -> bool:
    """For all a, b some x has mu(x^-1 a b) >= mu(a) and nu(x) >= nu(b)."""
    g = mu.group
    w = _conjugate_products(g)
    rm, rn = mu.ranks, nu.ranks
    first = rm[w] >= rm[:, None, None]
    second = (rn[None, :] >= rn[:, None])[None, :, :]  # [_, b, x]
    return bool((first & second).any(axis=2).all())


def _mutual_condition(g: Group, rm: np.ndarray, members: np.ndarray) -> bool:
    # For every a in G and l in L: some l1 in L with mu(l1^-1 a l) >= mu(a),
    # and some l2 in L with mu(l a l2^-1) >= mu(a).
    arr, inv = g.array, g.inverse_array
    a = np.arange(g.order)
    al = arr[np.ix_(a, members)]  # [a, l]
    left = arr[inv[members][:, None, None], al[None, :, :]]  # [l1, a, l]
    ok1 = (rm[left] >= rm[a][None, :, None]).any(axis=0).all()
    la = arr[np.ix_(members, a)].T  # [a, l] = l a
    right = arr[la[None, :, :], inv[members][:, None, None]]  # [l2, a, l]
    ok2 = (rm[right] >= rm[a][None, :, None]).any(axis=0).all()
    return bool(ok1 and ok2)


def is_mutually_permuted_by(
    mu: FuzzySubgroup, nu: FuzzySubgroup, lat: SubgroupLattice, *, zero_level: bool = False
) -> bool:
    """For each positive b in the image of nu and each subgroup L of the level set
    nu_b, the mutual condition holds for mu against L.

    ``zero_level`` also admits b = 0 when nu vanishes somewhere, whose level
    set is all of G.
    """
    g = mu.group
    seen: set[int] = set()
    for b in nu.image:
        if b == 0 and not zero_level:
            continue
        level = nu.level(b)
        for sub in lat:
            if sub.members & ~level or sub.id in seen:
                continue
            seen.add(sub.id)
            if not _mutual_condition(g, mu.ranks, np.array(sub.elements())):
                return False
    return True


def is_fuzzy_quasinormal(mu: FuzzySubgroup, lat: SubgroupLattice) -> bool:
    """Literal condition against every subgroup L, compared with quasinormality of the levels."""
    g = mu.group
    q1 = all(_mutual_condition(g, mu.ranks, np.array(sub.elements())) for sub in lat)
    q2 = True
    for t in mu.image:
        if t <= 0:
            continue
        h = lat.find(mu.level(t))
        if h is None:
            raise InternalConsistencyError(f"level {t} of {mu} is not a subgroup")
        q2 = q2 and bool(lat.quasinormal[h.id])
    if q1 != q2:
        raise InternalConsistencyError(f"quasinormality characterizations disagree for {mu}")
    return q1


def is_fuzzy_normal(mu: FuzzySubgroup) -> bool:
    r = mu.ranks
    arr = mu.group.array
    return bool((r[arr] == r[arr.T]).all())


def bucket_by_equivalence(fuzzy: Sequence[FuzzySubgroup]) -> list[list[FuzzySubgroup]]:
    """Group fuzzy subgroups into equivalence classes, in order of first appearance."""
    buckets: list[list[FuzzySubgroup]] = []
    for mu in fuzzy:
        for bucket in buckets:
            if equivalent(bucket[0], mu):
                bucket.append(mu)
                break
        else:
            buckets.append([mu])
    return buckets


def definitional_degree(representatives: Sequence[FuzzySubgroup]) -> tuple[int, int]:
    """(permutable ordered pairs, total ordered pairs) over one representative per class."""
    s = len(representatives)
    hits = 0
    for mu in representatives:
        for nu in representatives:
            if is_permuted_by(mu, nu) and is_permuted_by(nu, mu):
                hits += 1
    return hits, s * s


def iter_pairs(items: Sequence, samples: int | None, rng) -> Iterator[tuple]:
    """All ordered pairs, or ``samples`` uniformly random ones when ``samples`` is given."""
    if samples is None:
        yield from itertools.product(items, repeat=2)
        return
    n = len(items)
    for _ in range(samples):
        yield items[rng.randrange(n)], items[rng.randrange(n)]
