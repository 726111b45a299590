""" Unit tests on the closed-form values """

import pytest
from bookramsey.constructions import make_multipartite
from bookramsey.engine.formulas import (
    burr_lower,
    chvatal_value,
    conjecture_upper,
    conjecture_violated,
    eq3_lower,
    eq3_relaxed_lower,
    evaluate,
    is_prime_power,
    parsons_value,
    thm_value
)
from bookramsey.entities import MultipartitePattern, cycle_graph
from bookramsey.exceptions import InputError, UnsupportedParameterError


@pytest.mark.parametrize('args, expected', [
    ((3, 2, 2, 9), 21),
    ((2, 2, 1, 6), 7),
    ((3, 1, 2, 6), 11),
])
def test_eq3_lower(args, expected):
    assert eq3_lower(*args) == expected


def test_eq3_with_unit_cliques_is_chvatal():
    assert eq3_lower(3, 1, 2, 6) == chvatal_value(3, 6)


@pytest.mark.parametrize('args, expected', [
    ((3, 2, 2, 9), (21, True)),
    ((2, 2, 1, 6), (7, True)),
    ((2, 1, 3, 7), (7, True)),
    ((3, 2, 1, 9), (19, False)),
])
def test_thm_value(args, expected):
    assert thm_value(*args) == expected


def test_thm_value_meets_eq3_when_divisible():
    checked = 0
    for p in range(2, 6):
        for a2 in range(1, 5):
            for k in range(1, 5):
                for n in range(k + 2, 61):
                    value, divisible = thm_value(p, a2, k, n)
                    assert divisible is ((n - 1 - k) % a2 == 0)
                    if divisible:
                        assert value == eq3_lower(p, a2, k, n)
                        checked += 1
                    else:
                        assert value > eq3_lower(p, a2, k, n)
    assert checked > 1000


def test_relaxed_bound_never_exceeds_eq3():
    for a2 in range(1, 5):
        for k in range(1, 5):
            for n in range(k + 2, 40):
                assert eq3_relaxed_lower(3, a2, k, n) <= eq3_lower(3, a2, k, n)


@pytest.mark.parametrize('args', [(1, 2, 2, 9), (3, 0, 2, 9), (3, 2, 0, 9), (3, 2, 2, 3)])
def test_eq3_invalid(args):
    with pytest.raises(InputError):
        eq3_lower(*args)


@pytest.mark.parametrize('p, n, expected', [(3, 4, 7), (2, 6, 6), (4, 1, 1)])
def test_chvatal_value(p, n, expected):
    assert chvatal_value(p, n) == expected


@pytest.mark.parametrize('q, expected', [(2, 8), (3, 14), (4, 22), (5, 32), (8, 74)])
def test_parsons_value(q, expected):
    assert parsons_value(q) == expected


@pytest.mark.parametrize('q', [1, 6, 10, 12, 'two'])
def test_parsons_value_unsupported(q):
    with pytest.raises(UnsupportedParameterError):
        parsons_value(q)


@pytest.mark.parametrize('q, expected', [(2, True), (9, True), (27, True), (1, False), (15, False)])
def test_is_prime_power(q, expected):
    assert is_prime_power(q) is expected


@pytest.mark.parametrize('h, n, expected', [
    (make_multipartite(MultipartitePattern([1, 2, 2])), 9, 17),
    (make_multipartite(MultipartitePattern([1, 1, 1])), 4, 7),
    (make_multipartite(MultipartitePattern([2, 2])), 6, 7),
    (cycle_graph(5), 3, 5),
])
def test_burr_lower(h, n, expected):
    assert burr_lower(h, n) == expected


def test_burr_lower_below_surplus():
    with pytest.raises(InputError):
        burr_lower(make_multipartite(MultipartitePattern([3, 3])), 2)


def test_conjecture():
    assert conjecture_upper(3, 2, 9) == 18
    assert conjecture_violated(3, 2, 2, 9)
    assert not conjecture_violated(3, 2, 1, 9)


@pytest.mark.parametrize('name, params, value, note', [
    ('thm14', {'p': 3, 'a2': 2, 'k': 2, 'n': 9}, 21, 'divisible=true'),
    ('thm14', {'p': 3, 'a2': 2, 'k': 1, 'n': 9}, 19, 'divisible=false'),
    ('eq3', {'p': 3, 'a2': 2, 'k': 2, 'n': 9}, 21, None),
    ('eq3-relaxed', {'p': 3, 'a2': 2, 'k': 2, 'n': 9}, 19, None),
    ('burr', {'h1': [1, 2, 2], 'n': 9}, 17, None),
    ('nr-books', {'p': 3, 'n': 9}, 17, None),
    ('corollary', {'p': 4, 'n': 5}, 13, None),
    ('parsons', {'q': 3}, 14, None),
    ('conjecture', {'p': 3, 'a2': 2, 'k': 2, 'n': 9}, 18, 'eq3=21 violated=true'),
])
def test_evaluate(name, params, value, note):
    result = evaluate(name, params)
    assert (result.value, result.note) == (value, note)


def test_evaluate_thm15_tags_the_method():
    result = evaluate('thm15', {'p': 3, 'a2': 2, 'k': 2, 'n': 9})
    assert result.value == 21
    assert result.note.startswith('divisible=true method=')


@pytest.mark.parametrize('name, params', [
    ('thm16', {}),
    ('eq3', {'p': 3, 'a2': 2}),
    ('parsons', {'q': None}),
])
def test_evaluate_invalid(name, params):
    with pytest.raises(InputError):
        evaluate(name, params)
