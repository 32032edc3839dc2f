import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzdeg import (
    CapacityError,
    GroupValidationError,
    SpecError,
    commutativity_degree,
    count_classes,
    direct_product,
    enumerate_classes,
    enumerate_subgroups,
    from_cayley_table,
    make_cyclic,
    make_dihedral,
    make_klein,
    make_symmetric,
    parse_group_spec,
)
from fuzdeg.groups import read_cayley_file, validate_table, write_cayley_file

from groupfamily import Q8, UP_TO_16, group


def axioms_hold(g) -> bool:
    n = g.order
    t = g.table
    closed = all(0 <= t[x][y] < n for x in range(n) for y in range(n))
    ident = all(t[0][x] == x == t[x][0] for x in range(n))
    inv = all(t[x][g.inverse[x]] == 0 == t[g.inverse[x]][x] for x in range(n))
    assoc = all(
        t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)
    )
    return closed and ident and inv and assoc


@pytest.mark.parametrize("spec", UP_TO_16 + ["symmetric:4", "dihedral:18"])
def test_constructed_groups_satisfy_axioms(spec):
    assert axioms_hold(group(spec))


def test_cyclic_examples():
    assert make_cyclic(1).order == 1
    assert make_cyclic(4).table[1][3] == 0
    assert len(enumerate_subgroups(make_cyclic(8))) == 4


def test_dihedral_examples():
    d4 = make_dihedral(4)
    assert d4.order == 4 and d4.is_abelian
    assert all(d4.mul(x, x) == 0 for x in range(4))
    d6 = make_dihedral(6)
    assert d6.order == 6 and not d6.is_abelian
    d8 = make_dihedral(8)
    a, b = d8.names.index("a"), d8.names.index("b")
    a3 = d8.mul(a, d8.mul(a, a))
    assert d8.mul(b, a) == d8.mul(a3, b)


def test_dihedral_rejects_odd_and_small():
    with pytest.raises(SpecError):
        make_dihedral(7)
    with pytest.raises(SpecError):
        make_dihedral(2)


def test_symmetric_examples():
    assert make_symmetric(1).order == 1
    s3 = make_symmetric(3)
    assert s3.order == 6 and not s3.is_abelian
    with pytest.raises(CapacityError):
        make_symmetric(6)


def test_symmetric_three_is_isomorphic_to_dihedral_six():
    s3, d6 = make_symmetric(3), make_dihedral(6)
    found = None
    for perm in itertools.permutations(range(6)):
        if all(perm[s3.mul(x, y)] == d6.mul(perm[x], perm[y]) for x in range(6) for y in range(6)):
            found = perm
            break
    assert found is not None and found[0] == 0


def test_direct_product_examples():
    z1, z2 = make_cyclic(1), make_cyclic(2)
    assert len(enumerate_subgroups(direct_product(z2, z2))) == len(enumerate_subgroups(make_dihedral(4))) == 5
    d8 = make_dihedral(8)
    p = direct_product(z1, d8)
    assert p.table == d8.table
    z2z4 = direct_product(z2, make_cyclic(4))
    assert z2z4.order == 8 and z2z4.is_abelian
    assert len(enumerate_subgroups(z2z4)) == 8


def test_direct_product_capacity():
    with pytest.raises(CapacityError):
        direct_product(make_cyclic(16), make_cyclic(16), max_order=128)


def test_from_cayley_table_examples():
    assert from_cayley_table([[0]]).order == 1
    s3 = make_symmetric(3)
    g = from_cayley_table([list(r) for r in s3.table])
    transpositions = [x for x in range(1, 6) if g.element_order(x) == 2]
    assert len(transpositions) == 3
    assert all(g.inverse[x] == x for x in transpositions)
    with pytest.raises(GroupValidationError):
        from_cayley_table([[0, 1], [1, 1]])


@pytest.mark.parametrize(
    "raw",
    [
        [[0, 1], [1]],
        [[0, 2], [2, 0]],
        [[1, 0], [0, 0]],
        # a Latin square that is not associative
        [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]],
    ],
)
def test_from_cayley_table_rejects(raw):
    with pytest.raises(GroupValidationError):
        from_cayley_table(raw)


def test_identity_is_moved_to_index_zero():
    # Z3 with the identity stored at index 2
    raw = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    g = from_cayley_table(raw, names=["x", "y", "e"])
    assert g.names[0] == "e"
    assert axioms_hold(g)
    assert g.order == 3 and g.is_abelian


def test_validate_table_names_failing_triple():
    raw = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupValidationError, match="associativity"):
        validate_table(raw)


def test_cayley_file_round_trip(tmp_path):
    d8 = make_dihedral(8)
    path = tmp_path / "d8.txt"
    write_cayley_file(d8, path)
    back = read_cayley_file(path)
    assert back.table == d8.table and back.label == "D8"
    assert parse_group_spec(f"file:{path}").table == d8.table


def test_quaternion_file():
    q8 = parse_group_spec(Q8)
    assert q8.label == "Q8" and q8.order == 8 and not q8.is_abelian
    assert sum(1 for x in range(8) if q8.element_order(x) == 2) == 1


@pytest.mark.parametrize("text", ["order 2\n0 1\n", "order x\n", "", "order 2\n0 1\n1 z\n"])
def test_cayley_file_errors(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(SpecError):
        read_cayley_file(path)


@pytest.mark.parametrize(
    "spec,order,label",
    [
        ("cyclic:9", 9, "Z9"),
        ("dihedral:8", 8, "D8"),
        ("symmetric:3", 6, "S3"),
        ("klein", 4, "V4"),
        ("product:cyclic:2,cyclic:4", 8, None),
        ("product:(product:cyclic:2,cyclic:2),cyclic:2", 8, None),
        ("product:cyclic:2,(product:cyclic:2,cyclic:3)", 12, None),
    ],
)
def test_parse_group_spec(spec, order, label):
    g = parse_group_spec(spec)
    assert g.order == order
    if label:
        assert g.label == label


@pytest.mark.parametrize("spec", ["bogus:3", "cyclic:x", "cyclic", "klein:2", "product:cyclic:2", "dihedral:9"])
def test_parse_group_spec_errors(spec):
    with pytest.raises(SpecError):
        parse_group_spec(spec)


def test_capacity_limits(monkeypatch):
    with pytest.raises(CapacityError):
        parse_group_spec("cyclic:200")
    with pytest.raises(CapacityError):
        parse_group_spec("cyclic:8", max_order=4)
    monkeypatch.setenv("FUZDEG_MAX_ORDER", "6")
    with pytest.raises(CapacityError):
        make_cyclic(7)
    assert make_cyclic(6).order == 6


def test_klein_is_product():
    assert make_klein().table == direct_product(make_cyclic(2), make_cyclic(2)).table


def invariants(g):
    lat = enumerate_subgroups(g)
    deg = commutativity_degree(lat, enumerate_classes(lat))
    return len(lat), count_classes(lat).total, deg.sd


S3_INV = invariants(make_symmetric(3))
D8_INV = invariants(make_dihedral(8))


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(1, 6)))
def test_relabeling_symmetric_three_keeps_invariants(rest):
    g = make_symmetric(3).relabel((0, *rest))
    assert axioms_hold(g)
    assert invariants(g) == S3_INV


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(1, 8)))
def test_relabeling_dihedral_eight_keeps_invariants(rest):
    g = make_dihedral(8).relabel((0, *rest))
    assert invariants(g) == D8_INV
