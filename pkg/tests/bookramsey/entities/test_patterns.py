""" Unit tests on pattern entities """

import pytest
from contextlib import contextmanager
from bookramsey.entities import (
    BookPattern,
    Embedding,
    MultipartitePattern,
    build_graph,
    complete_graph
)
from bookramsey.exceptions import InputError, ParseError


@contextmanager
def does_not_raise():
    yield


@pytest.mark.parametrize('parts, expectation', [
    ([1, 2, 2], does_not_raise()),
    ([3], does_not_raise()),
    ([], pytest.raises(InputError)),
    ([0, 1], pytest.raises(InputError)),
    (['a'], pytest.raises(InputError)),
    ([True, 2], pytest.raises(InputError)),
    ([2.0, 1], pytest.raises(InputError)),
    (5, pytest.raises(InputError)),
])
def test_multipartite_parts(parts, expectation):
    with expectation:
        MultipartitePattern(parts)


def test_multipartite_parts_sorted():
    m = MultipartitePattern([3, 1, 2])
    assert m.parts == (1, 2, 3)
    assert m.p == 3
    assert m.total == 6
    assert m.edge_count == 11
    assert str(m) == 'K_3(1,2,3)'
    assert m == MultipartitePattern([1, 2, 3])


@pytest.mark.parametrize('text, parts', [
    ('1,2,2', (1, 2, 2)),
    (' 2 , 1 ', (1, 2)),
    ('4', (4,)),
])
def test_multipartite_from_string(text, parts):
    assert MultipartitePattern.from_string(text).parts == parts


@pytest.mark.parametrize('text, offset', [
    ('1,x', 2),
    ('a', 0),
    ('1,2,', 4),
])
def test_pattern_parse_error_offset(text, offset):
    with pytest.raises(ParseError) as e:
        MultipartitePattern.from_string(text)
    assert e.value.offset == offset


@pytest.mark.parametrize('spine, total, expectation', [
    (1, 6, does_not_raise()),
    (2, 9, does_not_raise()),
    (0, 3, pytest.raises(InputError)),
    (2, 2, pytest.raises(InputError)),
    (True, 3, pytest.raises(InputError)),
    (1, False, pytest.raises(InputError)),
])
def test_book_pattern(spine, total, expectation):
    with expectation:
        b = BookPattern(spine, total)
        assert b.pages == total - spine


def test_book_from_string():
    b = BookPattern.from_string('2,9')
    assert (b.spine, b.total, b.pages) == (2, 9, 7)
    assert str(b) == 'B_{2,9}'
    with pytest.raises(ParseError):
        BookPattern.from_string('2,9,1')


def test_embedding_verify_multipartite():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    pattern = MultipartitePattern([2, 2])
    assert Embedding(pattern, [[0, 2], [1, 3]]).verify(c4)
    assert Embedding(pattern, [[0, 2], [1, 3]]).verify(c4, induced=True)
    assert not Embedding(pattern, [[0, 1], [2, 3]]).verify(c4)
    assert not Embedding(pattern, [[0, 2], [2, 3]]).verify(c4)


def test_embedding_induced_needs_independent_parts():
    pattern = MultipartitePattern([2, 2])
    embedding = Embedding(pattern, [[0, 1], [2, 3]])
    assert embedding.verify(complete_graph(4))
    assert not embedding.verify(complete_graph(4), induced=True)


def test_embedding_verify_book():
    book = BookPattern(2, 4)
    assert Embedding(book, [[0, 1], [2, 3]]).verify(complete_graph(4))
    g = build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert not Embedding(book, [[0, 1], [2, 3]]).verify(g)
    assert Embedding(book, [[1, 0], [3, 2]]).images == ((0, 1), (2, 3))
