from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzdeg import CapacityError, InsufficientDepthError, classify, enumerate_classes
from fuzdeg.claims import product_example
from fuzdeg.oracle import (
    FuzzySubgroup,
    MembershipGrid,
    bucket_by_equivalence,
    definitional_degree,
    enumerate_fuzzy_subgroups,
    equivalent,
    fuzzy_product,
    is_fuzzy_normal,
    is_fuzzy_quasinormal,
    is_fuzzy_subgroup,
    is_mutually_permuted_by,
    is_permuted_by,
)

from groupfamily import group, lattice, sub_id

F = Fraction
HALF, THIRD = F(1, 2), F(1, 3)


def s3_map(**by_name):
    g = group("dihedral:6")
    default = by_name.pop("rest")
    vals = [by_name.get(n.replace("^", ""), default) for n in g.names]
    vals[0] = F(1)
    return FuzzySubgroup.of(g, vals)


@pytest.fixture(scope="module")
def s3_fuzzy():
    return enumerate_fuzzy_subgroups(group("dihedral:6"))


def test_is_fuzzy_subgroup_examples():
    g = group("dihedral:6")
    assert is_fuzzy_subgroup(g, [1] * 6)
    assert is_fuzzy_subgroup(g, s3_map(b=HALF, rest=THIRD))
    assert not is_fuzzy_subgroup(g, s3_map(a=HALF, rest=F(0)))
    assert not is_fuzzy_subgroup(g, [1, 1, 1, 1, 1, F(3, 2)])
    with pytest.raises(ValueError):
        is_fuzzy_subgroup(g, [1, 1])


def test_enumeration_trivial_group():
    g = group("cyclic:1")
    assert len(enumerate_fuzzy_subgroups(g, MembershipGrid.harmonic(3))) == 1


def test_enumeration_z2():
    g = group("cyclic:2")
    maps = enumerate_fuzzy_subgroups(g, MembershipGrid((F(1), HALF)))
    assert sorted(m.values for m in maps) == [(1, 0), (1, HALF), (1, 1)]
    assert len(bucket_by_equivalence(maps)) == 3


def test_enumeration_s3(s3_fuzzy):
    assert len(s3_fuzzy) == 28
    buckets = bucket_by_equivalence(s3_fuzzy)
    assert len(buckets) == 19
    lat = lattice("dihedral:6")
    assert {classify(lat, b[0]) for b in buckets} == set(enumerate_classes(lat))


def test_enumeration_depth_and_cap():
    g = group("dihedral:6")
    with pytest.raises(InsufficientDepthError):
        enumerate_fuzzy_subgroups(g, MembershipGrid.harmonic(2))
    with pytest.raises(CapacityError):
        enumerate_fuzzy_subgroups(g, cap=100)


def test_grid_validation():
    with pytest.raises(ValueError):
        MembershipGrid((HALF,))
    with pytest.raises(ValueError):
        MembershipGrid((F(1), HALF, HALF))
    with pytest.raises(ValueError):
        MembershipGrid((F(1), F(0)))
    assert MembershipGrid.harmonic(3).levels == (1, HALF, THIRD)


def test_equivalence_examples():
    g = group("dihedral:6")
    mu = s3_map(b=HALF, rest=THIRD)
    assert equivalent(mu, mu)
    assert equivalent(mu, s3_map(b=F(3, 4), rest=F(1, 4)))
    a = sub_id(lattice("dihedral:6"), ["a"])
    plateau = FuzzySubgroup.indicator(g, a.members)
    split = FuzzySubgroup.of(g, [1, HALF, HALF, 0, 0, 0])
    assert not equivalent(plateau, split)
    # same order, different zero set
    assert not equivalent(s3_map(b=HALF, rest=F(0)), s3_map(b=HALF, rest=THIRD))


def test_fuzzy_product_examples():
    g = group("dihedral:6")
    mu = s3_map(b=HALF, rest=THIRD)
    unit = FuzzySubgroup.indicator(g, 1)
    assert fuzzy_product(mu, unit) == mu.values
    assert fuzzy_product(mu, FuzzySubgroup.constant_one(g)) == (F(1),) * 6
    assert fuzzy_product(mu.values, unit.values, g) == mu.values
    with pytest.raises(ValueError):
        fuzzy_product(mu.values, unit.values)


def test_product_example_differs_from_first_factor():
    mu, nu, prod = product_example()
    assert prod == (1, THIRD, HALF, HALF, HALF, THIRD)
    assert prod != mu.values
    g = mu.group
    assert not is_fuzzy_subgroup(g, prod)


def test_is_permuted_by_examples(s3_fuzzy):
    g = group("dihedral:6")
    top = FuzzySubgroup.constant_one(g)
    for mu in s3_fuzzy:
        assert is_permuted_by(mu, top)
    mu, nu, _ = product_example()
    assert not is_permuted_by(mu, nu)
    normal = [m for m in s3_fuzzy if is_fuzzy_normal(m)]
    assert normal
    for mu in normal:
        assert all(is_permuted_by(mu, nu) for nu in s3_fuzzy)


def test_is_mutually_permuted_by_examples(s3_fuzzy):
    g = group("dihedral:6")
    lat = lattice("dihedral:6")
    unit = FuzzySubgroup.indicator(g, 1)
    for mu in s3_fuzzy:
        assert is_mutually_permuted_by(mu, unit, lat)
    b, ab = sub_id(lat, ["b"]), sub_id(lat, ["ab"])
    ib, iab = FuzzySubgroup.indicator(g, b.members), FuzzySubgroup.indicator(g, ab.members)
    assert not is_mutually_permuted_by(ib, iab, lat)
    # counting the zero level of the unit indicator brings in every subgroup of G
    assert not is_mutually_permuted_by(ib, unit, lat, zero_level=True)
    for mu in (m for m in s3_fuzzy if is_fuzzy_normal(m)):
        assert all(is_mutually_permuted_by(mu, nu, lat, zero_level=True) for nu in s3_fuzzy)


def test_mutual_implies_plain(s3_fuzzy):
    lat = lattice("dihedral:6")
    for mu in s3_fuzzy:
        for nu in s3_fuzzy:
            if is_mutually_permuted_by(mu, nu, lat) and is_mutually_permuted_by(nu, mu, lat):
                assert is_permuted_by(mu, nu) and is_permuted_by(nu, mu)


def test_quasinormal_examples(s3_fuzzy):
    g = group("dihedral:6")
    lat = lattice("dihedral:6")
    assert is_fuzzy_quasinormal(FuzzySubgroup.constant_one(g), lat)
    for mu in s3_fuzzy:
        if is_fuzzy_normal(mu):
            assert is_fuzzy_quasinormal(mu, lat)
    b = sub_id(lat, ["b"])
    assert not is_fuzzy_quasinormal(FuzzySubgroup.indicator(g, b.members), lat)


def test_definitional_degree_s3(s3_fuzzy):
    reps = [b[0] for b in bucket_by_equivalence(s3_fuzzy)]
    hits, total = definitional_degree(reps)
    assert (hits, total) == (265, 361)


def test_fuzzy_subgroup_equality_and_levels():
    g = group("dihedral:6")
    mu = s3_map(b=HALF, rest=THIRD)
    assert mu == s3_map(b=HALF, rest=THIRD)
    assert len({mu, s3_map(b=HALF, rest=THIRD)}) == 1
    assert mu.image == (1, HALF, THIRD)
    b = sub_id(lattice("dihedral:6"), ["b"])
    assert mu.level(HALF) == b.members
    assert mu.level(THIRD) == g.full_mask
    with pytest.raises(ValueError):
        FuzzySubgroup.of(g, [1, 1])


values = st.sampled_from([F(0), F(1, 4), THIRD, HALF, F(3, 4), F(1)])


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(["dihedral:6", "dihedral:8", "product:cyclic:2,cyclic:4", "cyclic:6"]), st.data())
def test_law_and_level_checks_agree_on_random_maps(spec, data):
    # is_fuzzy_subgroup raises if the two characterizations ever disagree
    g = group(spec)
    vals = [F(1)] + data.draw(st.lists(values, min_size=g.order - 1, max_size=g.order - 1))
    result = is_fuzzy_subgroup(g, vals)
    if result:
        classify(lattice(spec), vals)


@lru_cache(maxsize=None)
def d8_fuzzy():
    return enumerate_fuzzy_subgroups(group("dihedral:8"), MembershipGrid.harmonic(4))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_classify_and_equivalence_agree(data):
    fuzzy = d8_fuzzy()
    mu = data.draw(st.sampled_from(fuzzy))
    nu = data.draw(st.sampled_from(fuzzy))
    lat = lattice("dihedral:8")
    assert (classify(lat, mu) == classify(lat, nu)) == equivalent(mu, nu)
