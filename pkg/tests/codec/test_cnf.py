""" Unit tests on the arrowing CNF """

import pytest
from pysat.solvers import Solver
from bookramsey.codec.cnf import (
    CNF_CAP,
    assignment_from_graph,
    check_assignment,
    decode_model,
    encode_arrowing_cnf
)
from bookramsey.engine.enumeration import enumerate_graphs
from bookramsey.engine.ramsey import arrows, verify_witness
from bookramsey.entities import RamseyQuery, build_graph, empty_graph
from bookramsey.exceptions import CapacityError, InputError


QUERIES = [
    RamseyQuery.of([1, 1], 1, 3),
    RamseyQuery.of([1, 2], 1, 4),
    RamseyQuery.of([2, 2], 1, 4),
]


@pytest.mark.parametrize('order', range(1, 7))
@pytest.mark.parametrize('query', QUERIES)
def test_check_assignment_agrees_with_verify_witness(order, query):
    instance = encode_arrowing_cnf(order, query)
    for g in enumerate_graphs(order):
        assert check_assignment(instance, g) is verify_witness(g, query).certified


@pytest.mark.parametrize('order', range(2, 6))
@pytest.mark.parametrize('query', [
    RamseyQuery.of([1, 1, 1], 2, 3),
    RamseyQuery.of([1, 1, 1], 2, 4),
    RamseyQuery.of([1, 2], 2, 4),
])
def test_spine_two_books(order, query):
    instance = encode_arrowing_cnf(order, query)
    for g in enumerate_graphs(order):
        assert check_assignment(instance, g) is verify_witness(g, query).certified


@pytest.mark.parametrize('order, query', [
    (4, QUERIES[1]),
    (5, QUERIES[1]),
    (5, RamseyQuery.of([1, 1, 1], 2, 3)),
    (6, RamseyQuery.of([1, 1, 1], 2, 3)),
    (7, RamseyQuery.of([2, 2], 1, 6)),
])
def test_solver_agrees_with_exhaustive_search(order, query):
    instance = encode_arrowing_cnf(order, query)
    with Solver(name='m22', bootstrap_with=instance.clauses) as solver:
        satisfiable = solver.solve()
        assert satisfiable is not arrows(order, query)
        if satisfiable:
            g = build_graph(order, decode_model(instance, solver.get_model()))
            assert verify_witness(g, query).certified


def test_instance_without_clauses():
    instance = encode_arrowing_cnf(1, QUERIES[0])
    assert instance.clauses == []
    assert instance.variable_count == 0
    assert instance.to_dimacs().splitlines()[-1] == 'p cnf 0 0'
    assert check_assignment(instance, empty_graph(1))


def test_single_vertex_pattern_is_unsatisfiable():
    instance = encode_arrowing_cnf(2, RamseyQuery.of([1], 1, 3))
    assert not check_assignment(instance, empty_graph(2))
    assert not check_assignment(instance, build_graph(2, [(0, 1)]))


def test_dimacs_layout():
    instance = encode_arrowing_cnf(4, QUERIES[1])
    lines = instance.to_dimacs().splitlines()
    assert lines[0] == 'c bookramsey arrowing order=4 h1=K_2(1,2) h2=B_{1,4}'
    assert lines[1:7] == [
        'c var 1 0 1', 'c var 2 0 2', 'c var 3 0 3',
        'c var 4 1 2', 'c var 5 1 3', 'c var 6 2 3'
    ]
    assert lines[7] == 'p cnf {} {}'.format(instance.variable_count, len(instance.clauses))
    assert all(line.endswith(' 0') for line in lines[8:])
    assert len(lines) == 8 + len(instance.clauses)


def test_assignment_from_graph_order_mismatch():
    instance = encode_arrowing_cnf(3, QUERIES[0])
    with pytest.raises(InputError):
        assignment_from_graph(instance, empty_graph(4))


def test_capacity():
    with pytest.raises(CapacityError):
        encode_arrowing_cnf(CNF_CAP + 1, QUERIES[0])
