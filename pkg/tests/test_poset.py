import pytest

from vramsey.errors import InvalidArguments, NotFoundWithinBound, UnknownPattern
from vramsey.lattice import Domain, from_members
from vramsey.poset import (STRONG, WEAK, Poset, antichain, antichain_dim2, chain, cube, dim2, dual, embed,
                           extremal_count, find_isomorphism, induced, is_embedding, is_isomorphic,
                           make_v, parse_pattern, parse_pattern_list)


def S(*items):
    return from_members(items)


def test_make_v_shapes():
    v11 = make_v(1, 1)
    assert v11.size == 3 and v11.minimal_elements() == [0] and len(v11.maximal_elements()) == 2
    assert make_v(1, 2).size == 4 and make_v(1, 2).height() == 3
    v22 = make_v(2, 2)
    assert v22.size == 5 and v22.height() == 3
    assert not v22.leq(1, 3) and not v22.leq(3, 2)
    with pytest.raises(InvalidArguments):
        make_v(0, 1)


def test_dual():
    assert is_isomorphic(dual(chain(3)), chain(3))
    lam = dual(make_v(1, 1))
    assert len(lam.minimal_elements()) == 2 and len(lam.maximal_elements()) == 1
    assert is_isomorphic(dual(antichain(4)), antichain(4))
    assert not is_isomorphic(lam, make_v(1, 1))


def test_embed_examples():
    assert embed(make_v(1, 1), Domain.full(2)).images == (S(), S(1), S(2))
    assert embed(cube(2), Domain.full(1)) is None
    w = embed(make_v(1, 2), Domain.full(2), WEAK)
    assert w is not None and is_embedding(make_v(1, 2), w.images, WEAK)
    assert embed(make_v(1, 2), Domain.full(2), STRONG) is None


def test_dim2_examples():
    assert dim2(make_v(1, 2)) == 3
    assert dim2(chain(1)) == 0
    assert dim2(antichain(3)) == 3
    with pytest.raises(NotFoundWithinBound):
        dim2(antichain(30), n_max=4)


@pytest.mark.parametrize("k", range(1, 7))
def test_antichain_dim2_matches_search(k):
    assert antichain_dim2(k) == dim2(antichain(k))


def test_extremal_count():
    assert extremal_count(make_v(1, 2)) == 1
    assert extremal_count(cube(2)) == 2
    assert extremal_count(antichain(2)) == 0


def test_dim2_of_v_family():
    # dim2(V(m,n)) = n + 1 for m <= n
    for m, n in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)]:
        assert dim2(make_v(m, n)) == n + 1


def test_parse_patterns():
    assert parse_pattern("V(1,2)") == make_v(1, 2)
    assert parse_pattern(" B(2) ") == cube(2)
    assert [p.label for p in parse_pattern_list("V(1,1), V(2,2)")] == ["V(1,1)", "V(2,2)"]
    for bad in ("X(1)", "V(1)", "V(0,1)", "C()", ""):
        with pytest.raises(UnknownPattern):
            parse_pattern_list(bad) if bad == "" else parse_pattern(bad)


def test_poset_validation_and_json():
    with pytest.raises(InvalidArguments):
        Poset(2, (0b10, 0b01))
    P = Poset.from_relations(4, [(0, 1), (1, 2), (0, 3)], "Custom")
    assert P.lt(0, 2)
    assert Poset.from_json(P.to_json()) == P


def test_induced_and_isomorphism():
    D = Domain.from_members(2, [S(), S(1), S(2)])
    assert is_isomorphic(induced(D), make_v(1, 1))
    iso = find_isomorphism(cube(2), induced(Domain.full(2)))
    assert iso is not None
    assert find_isomorphism(make_v(1, 2), dual(make_v(1, 2))) is None


def test_is_embedding_rejects():
    v = make_v(1, 1)
    assert not is_embedding(v, (S(), S(1), S(1, 2)))  # comparable branches
    assert is_embedding(v, (S(), S(1), S(1, 2)), WEAK)  # weak copies may add comparabilities
    assert not is_embedding(v, (S(), S(1), S(1)), WEAK)
    assert not is_embedding(v, (S(), S(1), S(2)), STRONG, Domain.full(2).without(S(2)))
