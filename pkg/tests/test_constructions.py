import random

import pytest

from oracles import height, random_antichain, random_chain, strong_cube_embedding

from vramsey.checker import find_rainbow, is_good, is_good_rainbow
from vramsey.constructions import (Coloring, antichain_removal_embedding, chain_removal_embedding,
                                   coloring_layered_identical, coloring_minimal_theorem3, coloring_mixed,
                                   coloring_prop8_lower, coloring_rainbow_lower,
                                   iterated_removal_embedding, longest_chain_length, mirsky_antichain_partition)
from vramsey.errors import InvalidArguments, MalformedInput
from vramsey.lattice import Domain, from_members, full_set, is_antichain, size
from vramsey.poset import antichain, cube, make_v


def S(*items):
    return from_members(items)


# --- removal embeddings -----------------------------------------------------------

def test_chain_removal_examples():
    assert chain_removal_embedding(2, [S(1), S(1, 2)]).images == (S(), S(2))
    assert chain_removal_embedding(3, [S(), S(1), S(1, 2)]).images == (S(3), S(1, 3), S(2, 3), S(1, 2, 3))
    with pytest.raises(InvalidArguments):
        chain_removal_embedding(2, [S(), S(1, 2)])
    with pytest.raises(InvalidArguments):
        chain_removal_embedding(2, [S(1), S(2)])


def test_antichain_removal_examples():
    assert antichain_removal_embedding(2, [S()]).images == (S(2), S(1, 2))
    assert antichain_removal_embedding(3, [S(3)], w=3).images == (S(), S(1), S(2), S(1, 2))
    with pytest.raises(InvalidArguments):
        antichain_removal_embedding(3, [S(1), S(1, 2)])


def test_iterated_examples():
    e = iterated_removal_embedding(3, [S(1), S(2), S(3)])
    assert len(e.images) == 4 and strong_cube_embedding(e.images, 3)
    assert not {S(1), S(2), S(3)} & set(e.images)
    assert iterated_removal_embedding(2, []).images == (0, 1, 2, 3)
    e = iterated_removal_embedding(4, [S(), S(1), S(1, 2), S(1, 2, 3)])
    assert len(e.images) == 1 and e.images[0] not in {S(), S(1), S(1, 2), S(1, 2, 3)}
    with pytest.raises(InvalidArguments):
        iterated_removal_embedding(2, [S(), S(1), S(1, 2)])


def test_chain_removal_property():
    rng = random.Random(101)
    for _ in range(1000):
        n = rng.randint(1, 10)
        C = random_chain(rng, n)
        images = chain_removal_embedding(n, C).images
        assert strong_cube_embedding(images, n) and not set(C) & set(images)


def test_chain_removal_maximal_chains():
    rng = random.Random(7)
    for _ in range(100):
        perm = rng.sample(range(1, 5), 4)
        C = [from_members(perm[:i]) for i in range(1, 5)]
        images = chain_removal_embedding(4, C).images
        assert strong_cube_embedding(images, 4) and not set(C) & set(images)


def test_antichain_removal_property():
    rng = random.Random(202)
    for _ in range(1000):
        n = rng.randint(1, 10)
        A = random_antichain(rng, n)
        assert is_antichain(A)
        w = rng.randint(1, n)
        images = antichain_removal_embedding(n, A, w).images
        assert strong_cube_embedding(images, n) and not set(A) & set(images)


def test_iterated_removal_property():
    rng = random.Random(303)
    for _ in range(1000):
        n = rng.randint(1, 10)
        F = {rng.randrange(1 << n) for _ in range(rng.randint(0, 10))}
        top = rng.random() < 0.3
        forbidden = F | ({full_set(n)} if top else set())
        h = height(forbidden)
        if h > n:
            continue
        images = iterated_removal_embedding(n, F, forbid_top=top).images
        assert len(images) == 1 << (n - h)
        assert strong_cube_embedding(images, n) and not forbidden & set(images)


def test_mirsky_examples():
    nested = [S(), S(1), S(1, 2), S(1, 2, 3), S(1, 2, 3, 4)]
    assert mirsky_antichain_partition(nested) == [[x] for x in nested]
    assert len(mirsky_antichain_partition([S(1), S(2), S(3)])) == 1
    parts = mirsky_antichain_partition(range(8))
    assert [len(p) for p in parts] == [1, 3, 3, 1]


def test_mirsky_property():
    rng = random.Random(404)
    for _ in range(1000):
        n = rng.randint(1, 10)
        F = {rng.randrange(1 << n) for _ in range(rng.randint(0, 15))}
        parts = mirsky_antichain_partition(F)
        assert len(parts) == height(F) == longest_chain_length(F)
        assert all(is_antichain(p) for p in parts)
        assert sorted(x for p in parts for x in p) == sorted(F)


# --- witness colorings --------------------------------------------------------------

def test_layered_examples():
    c = coloring_layered_identical(1, 1, 2)
    assert c.n == 2 and c[0] == 1 and c[S(1)] == 2 and c[S(1, 2)] == 1
    assert is_good(c, [make_v(1, 1)] * 2)
    c = coloring_layered_identical(1, 2, 2)
    assert c.n == 4
    assert {size(x) for x in range(15) if c[x] == 1} == {0, 1}
    assert {size(x) for x in range(15) if c[x] == 2} == {2, 3}
    c = coloring_layered_identical(1, 1, 1)
    assert c.n == 1 and set(c.palette()) == {1}


@pytest.mark.parametrize("m, n, k", [(1, 1, 2), (1, 1, 3), (1, 2, 2), (2, 2, 2), (1, 3, 2), (1, 2, 3)])
def test_layered_is_good(m, n, k):
    assert is_good(coloring_layered_identical(m, n, k), [make_v(m, n)] * k)


def test_mixed_examples():
    c = coloring_mixed(1, 2)
    assert [x for x in range(8) if c[x] == 1] == [0]
    c = coloring_mixed(2, 2)
    assert all((c[x] == 1) == (size(x) <= 1) for x in range(16))
    c = coloring_mixed(1, 1)
    assert c.colors == (1, 2, 2, 2)


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (2, 1), (1, 3)])
def test_mixed_is_good(m, n):
    assert is_good(coloring_mixed(m, n), [make_v(m, m), make_v(n, n)])


def test_minimal_domain_colorings():
    c = coloring_minimal_theorem3(2, S())
    assert not c.domain.present(0) and c[S(1)] == 1 and c[S(1, 2)] == 2
    for k in (2, 3):
        for s in range(full_set(k + 1)):
            c = coloring_minimal_theorem3(k, s)
            assert c.domain == Domain(k + 1, frozenset({s}))
            assert is_good(c, [make_v(1, 1)] * k), (k, s)
    with pytest.raises(InvalidArguments):
        coloring_minimal_theorem3(2, S(1, 2, 3))


def test_rainbow_lower():
    c = coloring_rainbow_lower(2, 2)
    assert c[0] == c[7] == 2 and all(c[x] == 1 for x in range(1, 7))
    assert is_good_rainbow(c, make_v(1, 2), antichain(2))
    c = coloring_rainbow_lower(2, 3)
    assert c.n == 5 and c[0] == c[31] == 3 and c[S(1, 2, 3)] == 2
    assert find_rainbow(c, antichain(3)) is None


def test_prop8_lower():
    assert coloring_prop8_lower(make_v(1, 2)).n == 3
    c = coloring_prop8_lower(cube(2))
    assert c.n == 3 and is_good_rainbow(c, cube(2), antichain(2))
    assert coloring_prop8_lower(make_v(1, 1)).n == 2
    c = coloring_prop8_lower(antichain(2))  # dim2 2, no extremal element: B_1
    assert c.colors == (1, 2)


def test_coloring_json_round_trip():
    c = coloring_minimal_theorem3(2, S(1))
    assert Coloring.from_json(c.to_json()) == c
    with pytest.raises(MalformedInput):
        Coloring.from_json("{nope")
    with pytest.raises(InvalidArguments):
        Coloring(Domain.full(1), (1, 3), k=2)


def test_permuted_coloring_stays_good():
    c = coloring_minimal_theorem3(2, S(1))
    from vramsey.lattice import GroundPermutation
    g = GroundPermutation((2, 0, 1))
    assert is_good(c.permuted(g), [make_v(1, 1)] * 2)
