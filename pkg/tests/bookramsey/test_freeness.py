""" Unit tests on containment and freeness decisions """

import itertools
import pytest
from bookramsey.algebra import complement
from bookramsey.engine.enumeration import enumerate_graphs
from bookramsey.constructions import (
    make_book,
    make_er_polarity,
    make_multipartite,
    make_section2_witness
)
from bookramsey.entities import (
    BookPattern,
    MultipartitePattern,
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph
)
from bookramsey.exceptions import CapacityError, InputError
from bookramsey.freeness import (
    book_size,
    chromatic_info,
    chromatic_number,
    contains_book,
    contains_multipartite,
    find_book,
    find_multipartite,
    is_c4_free,
    iter_cliques
)
from ..conftest import random_graph


def naive_contains(g, parts):
    """ Brute force over every ordered placement of the parts """
    vertices = range(g.order)
    for chosen in itertools.permutations(vertices, sum(parts)):
        blocks = []
        start = 0
        for size in parts:
            blocks.append(chosen[start:start + size])
            start += size
        if all(g.has_edge(u, v)
               for first, second in itertools.combinations(blocks, 2)
               for u in first for v in second):
            return True
    return False


def test_find_triangle_in_k4():
    embedding = find_multipartite(complete_graph(4), MultipartitePattern([1, 1, 1]))
    assert embedding.images == ((0,), (1,), (2,))
    assert embedding.verify(complete_graph(4))


def test_c5_is_c4_free():
    assert find_multipartite(cycle_graph(5), MultipartitePattern([2, 2])) is None


def test_section2_witness_avoids_k3_122():
    g = make_section2_witness(3, 2, 2, 9)
    assert find_multipartite(g, MultipartitePattern([1, 2, 2])) is None
    embedding = find_multipartite(g, MultipartitePattern([1, 1, 2]))
    assert embedding is not None
    assert embedding.verify(g)


def test_section2_witness_avoids_k3_1_3_3():
    g = make_section2_witness(3, 3, 2, 9)
    assert not contains_multipartite(g, MultipartitePattern([1, 3, 3]))


@pytest.mark.parametrize('g, expected', [
    (make_er_polarity(2), True),
    (make_er_polarity(3), True),
    (make_multipartite(MultipartitePattern([2, 3])), False),
    (cycle_graph(4), False),
])
def test_is_c4_free(g, expected):
    assert is_c4_free(g) is expected


def test_k5_contains_k5():
    assert contains_multipartite(complete_graph(5), MultipartitePattern([1] * 5))
    assert not contains_multipartite(complete_graph(4), MultipartitePattern([1] * 5))


@pytest.mark.parametrize('seed', range(30))
@pytest.mark.parametrize('parts', [(1, 2), (2, 2), (1, 1, 2), (1, 3)])
def test_find_multipartite_agrees_with_brute_force(seed, parts):
    g = random_graph(6, 0.5, seed)
    embedding = find_multipartite(g, MultipartitePattern(parts))
    assert (embedding is not None) is naive_contains(g, parts)
    if embedding is not None:
        assert embedding.verify(g)


def test_find_multipartite_type():
    with pytest.raises(InputError):
        find_multipartite(complete_graph(3), (1, 1))


def test_iter_cliques_lexicographic():
    cliques = list(iter_cliques(complete_graph(4), 3))
    assert cliques == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
    assert list(iter_cliques(cycle_graph(5), 3)) == []


@pytest.mark.parametrize('g, book, present', [
    (complete_graph(5), BookPattern(2, 5), True),
    (cycle_graph(6), BookPattern(2, 4), False),
    (complement(make_section2_witness(3, 2, 2, 9)), BookPattern(2, 9), False),
    (complement(make_section2_witness(3, 2, 2, 9)), BookPattern(2, 8), True),
])
def test_find_book(g, book, present):
    embedding = find_book(g, book)
    assert (embedding is not None) is present
    if present:
        assert embedding.verify(g)


def test_find_book_least_spine():
    embedding = find_book(complete_graph(5), BookPattern(2, 5))
    assert embedding.images == ((0, 1), (2, 3, 4))
    assert not contains_book(complete_graph(3), BookPattern(2, 4))


@pytest.mark.parametrize('g, k, expected', [
    (complete_graph(6), 2, 6),
    (empty_graph(5), 1, 1),
    (make_book(BookPattern(3, 10)), 3, 10),
    (cycle_graph(5), 3, 0),
])
def test_book_size(g, k, expected):
    assert book_size(g, k) == expected


def test_book_size_invalid_spine():
    with pytest.raises(InputError):
        book_size(complete_graph(3), 0)


@pytest.mark.parametrize('h, chi, surplus', [
    (make_multipartite(MultipartitePattern([1, 2, 2])), 3, 1),
    (cycle_graph(5), 3, 1),
    (complete_graph(4), 4, 1),
    (make_multipartite(MultipartitePattern([2, 3])), 2, 2),
    (cycle_graph(6), 2, 3),
    (empty_graph(3), 1, 3),
    (empty_graph(0), 0, 0),
])
def test_chromatic_info(h, chi, surplus):
    info = chromatic_info(h)
    assert (info.chi, info.surplus) == (chi, surplus)


def test_chromatic_cap():
    with pytest.raises(CapacityError):
        chromatic_number(empty_graph(17))


def test_petersen_chromatic_number():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    assert chromatic_number(build_graph(10, outer + inner + spokes)) == 3


SMALL_PATTERNS = [
    (1, 1), (1, 2), (1, 1, 1),
    (1, 3), (2, 2), (1, 1, 2), (1, 1, 1, 1),
    (1, 4), (2, 3), (1, 1, 3), (1, 2, 2), (1, 1, 1, 2), (1, 1, 1, 1, 1),
]


@pytest.mark.parametrize('order', [
    2, 3, 4, 5, 6,
    pytest.param(7, marks=pytest.mark.slow),
])
def test_find_multipartite_agrees_with_brute_force_on_every_graph(order):
    for g in enumerate_graphs(order):
        for parts in SMALL_PATTERNS:
            embedding = find_multipartite(g, MultipartitePattern(parts))
            assert (embedding is not None) is naive_contains(g, parts), (g.edges(), parts)
            if embedding is not None:
                assert embedding.verify(g)


@pytest.mark.parametrize('seed', range(20))
@pytest.mark.parametrize('parts', [(1, 2), (2, 2), (1, 1, 2), (1, 2, 2)])
def test_containment_is_monotone_under_adding_edges(seed, parts):
    g = random_graph(8, 0.35, seed)
    extra = random_graph(8, 0.2, seed + 1000)
    supergraph = build_graph(8, g.edges() + extra.edges())
    pattern = MultipartitePattern(parts)
    if contains_multipartite(g, pattern):
        assert contains_multipartite(supergraph, pattern)
    if not contains_multipartite(supergraph, pattern):
        assert not contains_multipartite(g, pattern)


@pytest.mark.parametrize('seed', range(20))
@pytest.mark.parametrize('k', [1, 2, 3])
def test_find_book_agrees_with_book_size(seed, k):
    g = random_graph(9, 0.3 + (seed % 5) * 0.1, seed)
    size = book_size(g, k)
    for n in range(k + 1, g.order + 2):
        assert (find_book(g, BookPattern(k, n)) is not None) is (size >= n)


@pytest.mark.parametrize('k, n', [
    (k, n) for k in range(1, 5) for n in range(k + 1, 13)
])
def test_book_size_of_a_book(k, n):
    assert book_size(make_book(BookPattern(k, n)), k) == n


def shrunk_patterns(parts):
    """ Every pattern obtained by lowering one part size by one """
    for i, size in enumerate(parts):
        if size > 1:
            yield MultipartitePattern(parts[:i] + (size - 1,) + parts[i + 1:])


@pytest.mark.parametrize('seed', range(20))
@pytest.mark.parametrize('parts', [(2, 2), (1, 2, 2), (2, 3), (1, 1, 3)])
def test_containment_is_monotone_in_part_sizes(seed, parts):
    g = random_graph(9, 0.55, seed)
    if contains_multipartite(g, MultipartitePattern(parts)):
        for smaller in shrunk_patterns(parts):
            assert contains_multipartite(g, smaller), smaller
