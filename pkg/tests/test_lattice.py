import pytest
from hypothesis import given, strategies as st

from vramsey.errors import InvalidArguments, MalformedInput
from vramsey.lattice import (Domain, ElementSet, GroundPermutation, apply_permutation, complement,
                             format_set, from_members, interval_family, is_antichain, is_chain,
                             lattice_tables, parse_set, size)


def S(*items):
    return from_members(items)


@pytest.mark.parametrize("n, x, want", [(4, S(), S(1, 2, 3, 4)), (4, S(1, 3), S(2, 4)), (3, S(1, 2, 3), S())])
def test_complement_examples(n, x, want):
    assert complement(x, n) == want
    assert ElementSet(x, n).complement() == ElementSet(want, n)


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << n) - 1))))
def test_complement_involution(nx):
    n, x = nx
    assert complement(complement(x, n), n) == x


def test_interval_family():
    assert interval_family(3, 1, 2) == [S(1), S(1, 3)]
    assert interval_family(2, 1, 2) == [S(1)]
    fam = interval_family(4, 2, 4)
    assert len(fam) == 4 and all(x & S(2) and not x & S(4) for x in fam)
    with pytest.raises(InvalidArguments):
        interval_family(3, 2, 2)


def test_apply_permutation_examples():
    assert apply_permutation(S(1), GroundPermutation.identity(3)) == S(1)
    g = GroundPermutation.from_mapping({1: 3, 2: 2, 3: 1})
    assert apply_permutation(S(1, 2), g) == S(2, 3)
    assert g(0) == 0


@given(st.permutations(range(5)), st.integers(0, 31), st.integers(0, 31))
def test_permutation_preserves_size_and_inclusion(perm, x, y):
    g = GroundPermutation(tuple(perm))
    assert size(g(x)) == size(x)
    assert (x & y == x) == (g(x) & g(y) == g(x))
    assert g.inverse()(g(x)) == x


def test_chain_antichain_examples():
    assert is_chain([S(), S(1), S(1, 2)]) and not is_antichain([S(), S(1), S(1, 2)])
    assert not is_chain([S(1), S(2)]) and is_antichain([S(1), S(2)])
    assert is_chain([]) and is_antichain([])


def test_set_literals_round_trip():
    for x in range(16):
        assert parse_set(format_set(x)) == x
    assert parse_set("{ 1, 3 }") == S(1, 3)
    for bad in ("1,2", "{a}", "{1,,2}", None):
        with pytest.raises(MalformedInput):
            parse_set(bad)


def test_domain_basics():
    D = Domain.full(3)
    assert len(D) == 8 and D.removed_count == 0
    assert D.elements()[:4] == [0, S(1), S(2), S(3)]
    E = D.without(S(1, 2, 3))
    assert S(1, 2, 3) not in E and all(E.present(x) for x in range(7))
    assert not E.present(8)
    assert Domain.from_json(E.to_json()) == E
    assert str(E) == "B_3 - {{1,2,3}}"


def test_domain_canonical_and_stabilizer():
    a = Domain(3, frozenset({S(1)}))
    b = Domain(3, frozenset({S(3)}))
    assert a.canonical() == b.canonical()
    assert len(a.stabilizer()) == 2
    assert len(Domain.full(3).stabilizer()) == 6


def test_tables_match_definition():
    t = lattice_tables(4)
    for x in range(16):
        for y in range(16):
            assert bool(t.up[x] >> y & 1) == (x != y and x & y == x)
            assert bool(t.down[x] >> y & 1) == (x != y and x & y == y)


def test_elementset_validation():
    with pytest.raises(InvalidArguments):
        ElementSet(8, 3)
    assert ElementSet.of([1], 2) <= ElementSet.of([1, 2], 2)
    assert len(ElementSet.parse("{1,2}", 3)) == 2
