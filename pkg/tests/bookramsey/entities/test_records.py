""" Unit tests on query and certificate records """

import pytest
from contextlib import contextmanager
from bookramsey.entities import (
    BookPattern,
    BoundMethod,
    DkQuery,
    MultipartitePattern,
    Outcome,
    PartitionState,
    RamseyBound,
    RamseyQuery,
    complete_graph,
    cycle_graph
)
from bookramsey.exceptions import InputError


@contextmanager
def does_not_raise():
    yield


def test_ramsey_query_of():
    query = RamseyQuery.of([1, 2], 1, 6)
    assert query == RamseyQuery(MultipartitePattern([2, 1]), BookPattern(1, 6))
    assert hash(query) == hash(RamseyQuery.of([2, 1], 1, 6))
    assert str(query) == 'RamseyQuery(K_2(1,2) vs B_{1,6})'


@pytest.mark.parametrize('h1, h2, expectation', [
    (MultipartitePattern([1, 1]), BookPattern(1, 3), does_not_raise()),
    ([1, 1], BookPattern(1, 3), pytest.raises(InputError)),
    (MultipartitePattern([1, 1]), (1, 3), pytest.raises(InputError)),
])
def test_ramsey_query_types(h1, h2, expectation):
    with expectation:
        RamseyQuery(h1, h2)


@pytest.mark.parametrize('lower, upper, exact, expectation', [
    (7, 7, True, does_not_raise()),
    (7, None, False, does_not_raise()),
    (None, 9, False, does_not_raise()),
    (8, 7, None, pytest.raises(InputError)),
])
def test_ramsey_bound(lower, upper, exact, expectation):
    with expectation:
        bound = RamseyBound(RamseyQuery.of([1, 2], 1, 6), lower, upper,
                            methods=[BoundMethod.EXHAUSTIVE])
        assert bound.exact is exact
        assert bound.methods == ('exhaustive',)


def test_bound_method_tags():
    assert BoundMethod.THM15.value.startswith('thm15')
    assert 'section2-construction' in BoundMethod.values()
    assert str(Outcome.INCONCLUSIVE) == 'inconclusive'


@pytest.mark.parametrize('n, k, parts, star, expectation', [
    (6, 1, [2, 2], False, does_not_raise()),
    (5, 2, [1, 3], True, does_not_raise()),
    (0, 1, [1, 2], None, pytest.raises(InputError)),
    (5, 0, [1, 2], None, pytest.raises(InputError)),
    (5, 1, [3], None, pytest.raises(InputError)),
    (True, 1, [1, 2], None, pytest.raises(InputError)),
    (5, True, [1, 2], None, pytest.raises(InputError)),
])
def test_dk_query(n, k, parts, star, expectation):
    with expectation:
        query = DkQuery(n, k, MultipartitePattern(parts))
        assert query.is_star is star


def test_partition_state_caches_internal_edges():
    g = complete_graph(5)
    state = PartitionState.from_assignment(g, [0, 0, 0, 1, 1], 2)
    assert state.internal_edges == 4
    assert state.part_sizes == (3, 2)
    moved = state.move(g, 0, 1)
    assert moved.internal_edges == 4
    assert moved.part_sizes == (2, 3)
    assert moved.internal_edges == PartitionState.from_assignment(
        g, moved.assignment, 2).internal_edges


@pytest.mark.parametrize('assignment, classes, expectation', [
    ([0, 1, 0, 1, 0], 2, does_not_raise()),
    ([0, 1, 0, 1], 2, pytest.raises(InputError)),
    ([0, 2, 0, 1, 0], 2, pytest.raises(InputError)),
    ([0, 0, 0, 0, 0], 0, pytest.raises(InputError)),
])
def test_partition_state_validation(assignment, classes, expectation):
    with expectation:
        PartitionState.from_assignment(cycle_graph(5), assignment, classes)
