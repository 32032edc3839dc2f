"""Published numeric claims, recomputed and compared.

Every claim carries the value as printed in the source and a locator string
describing where it appears, so a mismatch can be traced by a reader. A
claim is never treated as correct because it was published: ``match`` is
decided by recomputation only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classes import count_classes, enumerate_classes
from .degree import commutativity_degree
from .groups import Group, make_dihedral, parse_group_spec
from .lattice import enumerate_subgroups
from .oracle import FuzzySubgroup, fuzzy_product


@dataclass(frozen=True)
class Claim:
    quantity: str
    spec: str
    paper_value: object
    location: str
    kind: str  # "s", "sd" or "product"
    printed: str | None = None  # the value exactly as printed, when reduction would alter it


@dataclass(frozen=True)
class ClaimRow:
    claim: Claim
    computed_value: object

    @property
    def match(self) -> bool:
        return self.claim.paper_value == self.computed_value

    def to_dict(self) -> dict:
        return {
            "quantity": self.claim.quantity,
            "paper_value": self.claim.printed or render_value(self.claim.paper_value),
            "computed_value": render_value(self.computed_value),
            "paper_location": self.claim.location,
            "match": self.match,
        }


def render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def prime_power(n: int) -> tuple[int, int] | None:
    """``(p, k)`` with ``n = p**k`` and ``k >= 1``, or None."""
    if n < 2:
        return None
    p = next(d for d in range(2, n + 1) if n % d == 0)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


CYCLIC_CASES = ((2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1))
DIHEDRAL_PRIMES_S = (3, 5, 7, 11)
DIHEDRAL_PRIMES_SD = (3, 5, 7)

LOC_CYCLIC = "class count of fuzzy subgroups of Z_(p^n): 2^(n+1)-1"
LOC_D4 = "worked example: dihedral group of order 4, s(G)=15"
LOC_D8 = "worked example: dihedral group of order 8, s(G)=63"
LOC_S3 = "worked example: S3 via its Hasse diagram, s(S3)=19"
LOC_D2P = "counting theorem for dihedral groups of order 2p, s(G)=4p+7"
LOC_SD_S3 = "commutativity degree example for S3, sd(S3)=50/361"
LOC_SD_D8 = "commutativity degree example for D8, sd(D8)=3897/3969"
LOC_SD_D2P = "closing proposition for dihedral groups of order 2p, sd(G)=1"
LOC_PRODUCT = "S3 example pair with levels at b and ab: product claimed equal to the first factor"
LOC_ABELIAN = "abelian groups: every subgroup normal, so every pair permutes"


def _s_claims_for(family: str, n: int) -> list[Claim]:
    out = []
    if family == "cyclic" and (pk := prime_power(n)):
        p, k = pk
        out.append(Claim(f"s(Z_{n})", f"cyclic:{n}", 2 ** (k + 1) - 1, LOC_CYCLIC, "s"))
    if (family == "dihedral" and n == 4) or family == "klein":
        out.append(Claim("s(D_4)", "dihedral:4", 15, LOC_D4, "s"))
    if family == "dihedral" and n == 8:
        out.append(Claim("s(D_8)", "dihedral:8", 63, LOC_D8, "s"))
        out.append(Claim("sd(D_8)", "dihedral:8", Fraction(3897, 3969), LOC_SD_D8, "sd", "3897/3969"))
    if family == "dihedral" and n % 2 == 0 and n // 2 >= 3 and is_prime(n // 2):
        p = n // 2
        out.append(Claim(f"s(D_{n})", f"dihedral:{n}", 4 * p + 7, LOC_D2P, "s"))
        out.append(Claim(f"sd(D_{n})", f"dihedral:{n}", Fraction(1), LOC_SD_D2P, "sd"))
    if (family == "dihedral" and n == 6) or (family == "symmetric" and n == 3):
        out.append(Claim("s(S_3)", "symmetric:3", 19, LOC_S3, "s"))
        out.append(Claim("sd(S_3)", "symmetric:3", Fraction(50, 361), LOC_SD_S3, "sd"))
    return out


def claims_for_spec(spec: str) -> list[Claim]:
    """Published claims that apply to a group spec string (by family, not by isomorphism)."""
    family, _, arg = spec.strip().partition(":")
    family = family.lower()
    if family == "klein":
        return _s_claims_for("klein", 4)
    try:
        n = int(arg)
    except ValueError:
        return []
    return _s_claims_for(family, n)


def all_claims() -> list[Claim]:
    claims: list[Claim] = []
    claims.append(Claim("s(D_4)", "dihedral:4", 15, LOC_D4, "s"))
    claims.append(Claim("s(D_8)", "dihedral:8", 63, LOC_D8, "s"))
    claims.append(Claim("s(S_3)", "symmetric:3", 19, LOC_S3, "s"))
    for p in DIHEDRAL_PRIMES_S:
        claims.append(Claim(f"s(D_{2 * p})", f"dihedral:{2 * p}", 4 * p + 7, LOC_D2P, "s"))
    for p, k in CYCLIC_CASES:
        claims.append(Claim(f"s(Z_{p ** k})", f"cyclic:{p ** k}", 2 ** (k + 1) - 1, LOC_CYCLIC, "s"))
    claims.append(Claim("sd(D_4)", "dihedral:4", Fraction(1), LOC_ABELIAN, "sd"))
    claims.append(Claim("sd(S_3)", "symmetric:3", Fraction(50, 361), LOC_SD_S3, "sd"))
    claims.append(Claim("sd(D_8)", "dihedral:8", Fraction(3897, 3969), LOC_SD_D8, "sd", "3897/3969"))
    for p in DIHEDRAL_PRIMES_SD:
        claims.append(Claim(f"sd(D_{2 * p})", f"dihedral:{2 * p}", Fraction(1), LOC_SD_D2P, "sd"))
    claims.append(Claim("mu o nu = mu on S_3", "dihedral:6", True, LOC_PRODUCT, "product"))
    return claims


def product_example(g: Group | None = None) -> tuple[FuzzySubgroup, FuzzySubgroup, tuple[Fraction, ...]]:
    """The S3 pair with a level at ``b`` and at ``ab``, and their max-min product."""
    g = g or make_dihedral(6)
    b, ab = g.names.index("b"), g.names.index("ab")
    third, half = Fraction(1, 3), Fraction(1, 2)

    def spike(x: int) -> FuzzySubgroup:
        vals = [third] * g.order
        vals[0], vals[x] = Fraction(1), half
        return FuzzySubgroup.of(g, vals)

    mu, nu = spike(b), spike(ab)
    return mu, nu, fuzzy_product(mu, nu, g)


def compute_claim(claim: Claim, max_order: int | None = None) -> object:
    if claim.kind == "product":
        mu, _, prod = product_example()
        return prod == mu.values
    g = parse_group_spec(claim.spec, max_order)
    lat = enumerate_subgroups(g)
    if claim.kind == "s":
        return count_classes(lat).total
    return commutativity_degree(lat, enumerate_classes(lat)).sd


def evaluate(claims: list[Claim], max_order: int | None = None) -> list[ClaimRow]:
    return [ClaimRow(c, compute_claim(c, max_order)) for c in claims]
