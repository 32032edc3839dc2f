"""Cross-check the chain-level results against the brute-force oracle.

Each check names the property it tests, how many cases it examined, and the
first counterexample if one turned up. Groups of order at most
``EXHAUSTIVE_MAX_ORDER`` get every ordered pair of enumerated fuzzy subgroups;
larger groups get ``samples`` seeded random pairs drawn from a grid one level
deeper than the longest chain.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .classes import classify, count_classes, enumerate_classes
from .config import RunConfig
from .degree import class_mutually_permutes, class_permutes, commutativity_degree
from .errors import InternalConsistencyError
from .groups import Group, induced_subgroup
from .lattice import SubgroupLattice, enumerate_subgroups
from .oracle import (
    FuzzySubgroup,
    MembershipGrid,
    bucket_by_equivalence,
    definitional_degree,
    enumerate_fuzzy_subgroups,
    equivalent,
    fuzzy_product,
    is_fuzzy_quasinormal,
    is_fuzzy_subgroup,
    is_mutually_permuted_by,
    is_permuted_by,
    iter_pairs,
)

EXHAUSTIVE_MAX_ORDER = 6


@dataclass
class CheckResult:
    name: str
    statement: str
    passed: bool = True
    checked: int = 0
    counterexample: str | None = None

    def record(self, ok: bool, witness=None) -> None:
        self.checked += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = witness() if callable(witness) else str(witness)


@dataclass
class VerificationReport:
    group: str
    order: int
    s: int
    oracle_maps: int
    oracle_classes: int
    pair_mode: str
    pairs_checked: int
    sd: Fraction
    oracle_sd: Fraction
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "s": self.s,
            "oracle_maps": self.oracle_maps,
            "oracle_classes": self.oracle_classes,
            "pair_mode": self.pair_mode,
            "pairs_checked": self.pairs_checked,
            "sd": {"num": self.sd.numerator, "den": self.sd.denominator},
            "oracle_sd": {"num": self.oracle_sd.numerator, "den": self.oracle_sd.denominator},
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }


def _pair_witness(mu: FuzzySubgroup, nu: FuzzySubgroup):
    return lambda: f"mu={mu!r}; nu={nu!r}"


def _class_checks(lat: SubgroupLattice, fuzzy: list[FuzzySubgroup]) -> tuple[list[CheckResult], list[list[FuzzySubgroup]]]:
    census = count_classes(lat)
    classes = enumerate_classes(lat)
    buckets = bucket_by_equivalence(fuzzy)

    count = CheckResult(
        "class-count",
        "equivalence buckets of the oracle enumeration = chain count = chain DFS length",
    )
    count.record(
        len(buckets) == census.total == len(classes),
        f"buckets={len(buckets)} chain-count={census.total} dfs={len(classes)}",
    )

    bij = CheckResult(
        "classify-bijection",
        "classify is constant on buckets and maps buckets one-to-one onto all chains",
    )
    images = []
    for bucket in buckets:
        cls = {classify(lat, mu) for mu in bucket}
        bij.record(len(cls) == 1, lambda b=bucket: f"bucket of {b[0]!r} maps to several chains")
        images.extend(cls)
    bij.record(
        len(set(images)) == len(images) and set(images) == set(classes),
        "bucket images are not exactly the enumerated chains",
    )

    sound = CheckResult(
        "classify-matches-equivalence",
        "two fuzzy subgroups share a chain iff they are equivalent",
    )
    tags = [classify(lat, mu) for mu in fuzzy]
    for i, mu in enumerate(fuzzy):
        for j in range(i, len(fuzzy)):
            nu = fuzzy[j]
            sound.record((tags[i] == tags[j]) == equivalent(mu, nu), _pair_witness(mu, nu))

    support = CheckResult(
        "full-support-count",
        "s is odd; classes with support G number (s+1)/2, the rest (s-1)/2",
    )
    s = census.total
    whole = lat.whole.id
    proper = sum(v for k, v in census.per_top.items() if k != whole)
    support.record(s % 2 == 1, f"s={s} is even")
    support.record(2 * census.per_top[whole] == s + 1, f"per_top[G]={census.per_top[whole]}, s={s}")
    support.record(2 * proper == s - 1, f"proper-support total {proper}, s={s}")
    full_buckets = sum(1 for b in buckets if all(v > 0 for v in b[0].values))
    support.record(full_buckets == census.per_top[whole], f"oracle full-support buckets {full_buckets}")

    by_sub = CheckResult(
        "support-count-by-subgroup",
        "classes with support exactly H number (s(H)+1)/2, with s(H) computed on H alone",
    )
    for h in lat:
        sub = enumerate_subgroups(induced_subgroup(lat.group, h.members))
        s_h = count_classes(sub).total
        by_sub.record(
            2 * census.per_top[h.id] == s_h + 1,
            f"{lat.name(h)}: per_top={census.per_top[h.id]} s(H)={s_h}",
        )
    return [count, bij, sound, support, by_sub], buckets


def _pair_checks(lat: SubgroupLattice, fuzzy: list[FuzzySubgroup], pairs) -> tuple[list[CheckResult], int]:
    g = lat.group
    product = CheckResult(
        "product-subgroup-iff-commute",
        "mu o nu is a fuzzy subgroup iff mu o nu = nu o mu",
    )
    perm = CheckResult(
        "permutable-iff-levels-permute",
        "mu, nu permute each other iff every pair of their level subgroups permutes",
    )
    mutual = CheckResult(
        "mutual-iff-levels-mutual",
        "mu, nu are mutually permutable iff every pair of positive level subgroups is",
    )
    mutual_zero = CheckResult(
        "mutual-iff-levels-mutual-zero-level",
        "same, with the zero level (all of G) counted on both sides",
    )
    mutual_implies = CheckResult(
        "mutual-implies-permutable",
        "mutually permutable fuzzy subgroups are permutable",
    )
    closed = CheckResult(
        "permutable-product-is-subgroup",
        "for permutable mu, nu the product mu o nu is a fuzzy subgroup",
    )
    reach = CheckResult(
        "permutable-level-reach",
        "for permutable mu, nu and levels t <= s, nu reaches t (and symmetrically)",
    )
    tags = {id(mu): classify(lat, mu) for mu in fuzzy}
    n = 0
    for mu, nu in pairs:
        n += 1
        cm, cn = tags[id(mu)], tags[id(nu)]
        witness = _pair_witness(mu, nu)

        mn = fuzzy_product(mu, nu, g)
        nm = fuzzy_product(nu, mu, g)
        product.record(is_fuzzy_subgroup(g, mn) == (mn == nm), witness)

        both = is_permuted_by(mu, nu) and is_permuted_by(nu, mu)
        perm.record(both == class_permutes(lat, cm, cn), witness)

        mboth = is_mutually_permuted_by(mu, nu, lat) and is_mutually_permuted_by(nu, mu, lat)
        mutual.record(mboth == class_mutually_permutes(lat, cm, cn), witness)
        mutual_implies.record(not mboth or both, witness)
        zboth = is_mutually_permuted_by(mu, nu, lat, zero_level=True) and is_mutually_permuted_by(
            nu, mu, lat, zero_level=True
        )
        mutual_zero.record(zboth == class_mutually_permutes(lat, cm, cn, zero_level=True), witness)
        mutual_implies.record(not zboth or both, witness)

        if both:
            closed.record(is_fuzzy_subgroup(g, mn), witness)
            ok = True
            for t in mu.image:
                for s in nu.image:
                    if t <= s and not any(v >= t for v in nu.values):
                        ok = False
                    if s <= t and not any(v >= s for v in mu.values):
                        ok = False
            reach.record(ok, witness)
    return [product, perm, mutual, mutual_zero, mutual_implies, closed, reach], n


def _quasinormal_checks(lat: SubgroupLattice, fuzzy: list[FuzzySubgroup]) -> list[CheckResult]:
    g = lat.group
    levels = CheckResult(
        "quasinormal-iff-levels-quasinormal",
        "the literal quasinormality condition holds iff every level subgroup is quasinormal",
    )
    commutes = CheckResult(
        "quasinormal-iff-commutes-with-all",
        "mu is quasinormal iff mu o nu = nu o mu for every enumerated nu",
    )
    for mu in fuzzy:
        try:
            q = is_fuzzy_quasinormal(mu, lat)
            levels.record(True)
        except InternalConsistencyError as exc:
            levels.record(False, str(exc))
            continue
        all_commute = all(fuzzy_product(mu, nu, g) == fuzzy_product(nu, mu, g) for nu in fuzzy)
        commutes.record(q == all_commute, lambda m=mu: f"mu={m!r}")
    return [levels, commutes]


def run_verification(g: Group, config: RunConfig | None = None) -> VerificationReport:
    config = config or RunConfig()
    lat = enumerate_subgroups(g, jobs=config.jobs)
    depth = config.oracle_depth
    exhaustive = g.order <= EXHAUSTIVE_MAX_ORDER
    if depth is None:
        depth = lat.longest_chain if exhaustive else lat.longest_chain + 1
    fuzzy = enumerate_fuzzy_subgroups(
        g, MembershipGrid.harmonic(depth), lat=lat, cap=config.oracle_cap
    )

    checks, buckets = _class_checks(lat, fuzzy)
    rng = random.Random(config.seed)
    pairs = iter_pairs(fuzzy, None if exhaustive else config.samples, rng)
    pair_checks, n_pairs = _pair_checks(lat, fuzzy, pairs)
    checks += pair_checks
    checks += _quasinormal_checks(lat, fuzzy)

    classes = enumerate_classes(lat, config.class_cap)
    report = commutativity_degree(lat, classes, pair_cap=config.pair_cap, jobs=config.jobs)
    hits, total = definitional_degree([b[0] for b in buckets])
    oracle_sd = Fraction(hits, total)
    degree = CheckResult(
        "degree-matches-oracle",
        "chain-level degree equals the literal pair count over one fuzzy subgroup per class",
    )
    degree.record(report.sd == oracle_sd, f"chains give {report.sd}, oracle gives {oracle_sd}")
    checks.append(degree)

    return VerificationReport(
        group=g.label,
        order=g.order,
        s=report.s,
        oracle_maps=len(fuzzy),
        oracle_classes=len(buckets),
        pair_mode="exhaustive" if exhaustive else f"sampled (seed {config.seed})",
        pairs_checked=n_pairs,
        sd=report.sd,
        oracle_sd=oracle_sd,
        checks=checks,
    )
