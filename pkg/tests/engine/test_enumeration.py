""" Unit tests on isomorph-free generation """

import itertools
import networkx as nx
import pytest
from bookramsey.engine.canonical import canonical_code
from bookramsey.engine.enumeration import (
    ENUMERATION_CAP,
    GRAPH_COUNTS,
    ComplementBookFree,
    Conjunction,
    Hereditary,
    PatternFree,
    augment,
    count_graphs,
    enumerate_graphs,
    first_graph,
    generate_level,
    shards
)
from bookramsey.entities import (
    BookPattern,
    MultipartitePattern,
    build_graph,
    empty_graph
)
from bookramsey.exceptions import CapacityError
from bookramsey.freeness import is_c4_free


def naive_codes(order):
    """ Canonical codes of every labelled graph of ``order`` vertices """
    pairs = list(itertools.combinations(range(order), 2))
    codes = set()
    for chosen in range(1 << len(pairs)):
        edges = [pair for i, pair in enumerate(pairs) if chosen >> i & 1]
        codes.add(canonical_code(build_graph(order, edges)))
    return codes


def atlas_codes(order):
    return {
        canonical_code(build_graph(order, list(h.edges())))
        for h in nx.graph_atlas_g() if h.number_of_nodes() == order
    }


@pytest.mark.parametrize('order', range(8))
def test_counts(order):
    assert count_graphs(order) == GRAPH_COUNTS[order]


@pytest.mark.slow
def test_count_order_8():
    assert count_graphs(8) == 12346


@pytest.mark.parametrize('order', range(6))
def test_matches_naive_dedup(order):
    """ Every labelled graph, deduplicated; up to order 5 (2^15 edge sets) """
    codes = [canonical_code(g) for g in enumerate_graphs(order)]
    assert len(codes) == len(set(codes))
    assert set(codes) == naive_codes(order)


@pytest.mark.parametrize('order', [6, 7])
def test_matches_graph_atlas(order):
    """ Orders 6 and 7 are checked against the networkx atlas of all graphs up to 7 vertices """
    codes = [canonical_code(g) for g in enumerate_graphs(order)]
    assert len(codes) == len(set(codes))
    assert set(codes) == atlas_codes(order)


def test_order_is_deterministic():
    assert list(enumerate_graphs(6)) == list(enumerate_graphs(6))


@pytest.mark.parametrize('shard_order', [0, 2, 3, 6])
def test_shard_order_does_not_change_the_stream(shard_order):
    assert list(enumerate_graphs(6, shard_order=shard_order)) == list(enumerate_graphs(6))


def test_workers_do_not_change_the_stream():
    predicate = PatternFree(MultipartitePattern([1, 1, 1]))
    serial = list(enumerate_graphs(7, predicate, workers=1, shard_order=3))
    parallel = list(enumerate_graphs(7, predicate, workers=2, shard_order=3))
    assert parallel == serial


def test_capacity():
    with pytest.raises(CapacityError):
        list(enumerate_graphs(ENUMERATION_CAP + 1))
    with pytest.raises(CapacityError):
        first_graph(ENUMERATION_CAP + 1)


@pytest.mark.parametrize('order', [3, 4, 5, 6])
def test_pruned_generation_is_complete(order):
    predicate = PatternFree(MultipartitePattern([2, 2]))
    graphs = list(enumerate_graphs(order, predicate))
    assert len(graphs) == sum(1 for g in enumerate_graphs(order) if predicate(g))
    assert all(is_c4_free(g) for g in graphs)


@pytest.mark.parametrize('order, count', [(3, 2), (4, 3), (5, 1), (6, 0)])
def test_triangle_free_with_independence_below_three(order, count):
    predicate = Conjunction([
        PatternFree(MultipartitePattern([1, 1, 1])),
        ComplementBookFree(BookPattern(2, 3))
    ])
    assert count_graphs(order, predicate) == count


def test_augment_children_are_pairwise_non_isomorphic():
    parent = build_graph(4, [(0, 1), (1, 2)])
    children = augment(parent)
    codes = [canonical_code(child) for child in children]
    assert len(codes) == len(set(codes))
    assert all(child.order == 5 for child in children)


def test_first_graph():
    g = first_graph(5, PatternFree(MultipartitePattern([1, 1])))
    assert g == empty_graph(5)
    assert first_graph(3, PatternFree(MultipartitePattern([1]))) is None


def test_generate_level_and_shards():
    assert len(generate_level(4)) == 11
    assert shards(6, shard_order=3) == generate_level(3)
    assert shards(2, shard_order=4) == generate_level(2)


def test_hereditary_base_accepts_all():
    assert Hereditary()(empty_graph(3))
    assert repr(PatternFree(MultipartitePattern([2, 2]))) == 'PatternFree(K_2(2,2))'
