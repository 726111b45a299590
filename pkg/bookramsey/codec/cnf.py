"""

******************
Arrowing CNF (SAT)
******************

A model of :func:`encode_arrowing_cnf` is a graph on ``order`` vertices
that contains no ``h1`` and whose complement contains no ``B_{k,n}``.

* one edge variable per vertex pair, allocated first in lexicographic
  pair order;
* one clause per placement of ``h1``: not every cross pair is an edge;
* for every ``k``-subset ``S``: when ``S`` is a clique of the complement
  (guard literals all false), at most ``n - k - 1`` vertices are common
  complement neighbours of ``S``, by a sequential counter whose clauses
  all carry the guard.

"""

import itertools
from pysat.formula import IDPool
from ..entities.graph import check_capacity
from ..exceptions import InputError


CNF_CAP = 24


class CnfInstance(object):
    """
    Clauses with their variable map.

    :param int order: Vertex count of the encoded graphs.
    :param query: The encoded :class:`RamseyQuery`.
    :param int variable_count: Largest variable index.
    :param list clauses: Integer literal lists.
    :param dict edge_var_map: ``(u, v)`` with ``u < v`` to variable.
    :param list definitions: Auxiliary variable rules, in dependency order.
    """

    def __init__(self, order, query, variable_count, clauses, edge_var_map, definitions=()):
        self._order = order
        self._query = query
        self._variable_count = variable_count
        self._clauses = [list(c) for c in clauses]
        self._edge_var_map = dict(edge_var_map)
        self._definitions = list(definitions)

    def __repr__(self):
        return 'CnfInstance(order={}, {}, variables={}, clauses={})'.format(
            self._order, self._query, self._variable_count, len(self._clauses)
        )

    @property
    def order(self):
        return self._order

    @property
    def query(self):
        return self._query

    @property
    def variable_count(self):
        return self._variable_count

    @property
    def clauses(self):
        return self._clauses

    @property
    def edge_var_map(self):
        return self._edge_var_map

    @property
    def definitions(self):
        return self._definitions

    def to_dimacs(self):
        """
        DIMACS text; ``c var <id> <u> <v>`` lines decode the edge
        variables of a model.
        """
        lines = ['c bookramsey arrowing order={} h1={} h2={}'.format(
            self._order, self._query.h1, self._query.h2
        )]
        for (u, v), var in sorted(self._edge_var_map.items(), key=lambda item: item[1]):
            lines.append('c var {} {} {}'.format(var, u, v))
        lines.append('p cnf {} {}'.format(self._variable_count, len(self._clauses)))
        for clause in self._clauses:
            lines.append(' '.join(str(lit) for lit in clause) + ' 0')
        return '\n'.join(lines) + '\n'


def _split(vertices, sizes):
    """ Ordered splits of ``vertices`` into blocks of the given sizes """
    if not sizes:
        yield []
        return
    for block in itertools.combinations(vertices, sizes[0]):
        rest = [v for v in vertices if v not in block]
        for tail in _split(rest, sizes[1:]):
            yield [block] + tail


def _placements(order, parts):
    """ Distinct cross-pair sets of ``K_p(parts)`` placed on ``order`` vertices """
    seen = set()
    for chosen in itertools.combinations(range(order), sum(parts)):
        for blocks in _split(list(chosen), list(parts)):
            pairs = frozenset(
                (min(u, v), max(u, v))
                for first, second in itertools.combinations(blocks, 2)
                for u in first for v in second
            )
            if pairs not in seen:
                seen.add(pairs)
                yield sorted(pairs)


def _at_most(pool, key, literals, bound, guard):
    """
    Sequential counter ``sum(literals) <= bound``, ``1 <= bound < len``.

    ``s(i, j)`` holds when at least ``j`` of the first ``i + 1`` literals
    are true.
    """
    count = len(literals)
    table = [[pool.id((key, i, j)) for j in range(bound)] for i in range(count - 1)]
    clauses = [[-literals[0], table[0][0]]]
    clauses.extend([-table[0][j]] for j in range(1, bound))
    for i in range(1, count - 1):
        clauses.append([-literals[i], table[i][0]])
        clauses.append([-table[i - 1][0], table[i][0]])
        for j in range(1, bound):
            clauses.append([-literals[i], -table[i - 1][j - 1], table[i][j]])
            clauses.append([-table[i - 1][j], table[i][j]])
        clauses.append([-literals[i], -table[i - 1][bound - 1]])
    clauses.append([-literals[-1], -table[-1][bound - 1]])
    return [clause + guard for clause in clauses], ('counter', literals, table)


def encode_arrowing_cnf(order, query):
    """
    :param int order: ``order <= CNF_CAP``.
    :param RamseyQuery query: ``(h1, B_{k,n})``.
    :returns CnfInstance: Satisfiable iff a counterexample graph exists.
    :raises CapacityError: ``order`` above ``CNF_CAP``.
    """
    check_capacity(order, what='CNF order', cap=CNF_CAP)
    pool = IDPool()
    edge = {}
    for u, v in itertools.combinations(range(order), 2):
        edge[(u, v)] = pool.id(('x', u, v))

    def x(u, v):
        return edge[(min(u, v), max(u, v))]

    clauses = []
    definitions = []
    h1 = query.h1
    if h1.total <= order:
        for pairs in _placements(order, h1.parts):
            if not pairs:
                false = pool.id('false')
                clauses.extend([[false], [-false]])
                break
            clauses.append([-edge[pair] for pair in pairs])

    book = query.h2
    bound = book.total - book.spine - 1
    for spine in itertools.combinations(range(order), book.spine):
        others = [w for w in range(order) if w not in spine]
        if bound >= len(others):
            continue
        guard = [x(u, v) for u, v in itertools.combinations(spine, 2)]
        literals = []
        for w in others:
            if book.spine == 1:
                literals.append(-x(spine[0], w))
                continue
            y = pool.id(('y', spine, w))
            clauses.append([x(w, s) for s in spine] + [y])
            definitions.append(('common', y, [x(w, s) for s in spine]))
            literals.append(y)
        if bound == 0:
            clauses.extend([-lit] + guard for lit in literals)
            continue
        counter, rule = _at_most(pool, ('s', spine), literals, bound, guard)
        clauses.extend(counter)
        definitions.append(rule)
    return CnfInstance(order, query, pool.top, clauses, edge, definitions)


def _value(values, literal):
    value = values.get(abs(literal), False)
    return value if literal > 0 else not value


def assignment_from_graph(instance, g):
    """
    Total assignment induced by ``g``: edge variables from adjacency,
    auxiliary variables propagated by their definitions.

    :returns dict: variable to bool.
    :raises InputError: Order mismatch.
    """
    if g.order != instance.order:
        raise InputError(
            "Graph order {} does not match instance order {}".format(g.order, instance.order)
        )
    values = {var: g.has_edge(u, v) for (u, v), var in instance.edge_var_map.items()}
    for rule in instance.definitions:
        if rule[0] == 'common':
            _, y, edges = rule
            values[y] = not any(values[var] for var in edges)
            continue
        _, literals, table = rule
        running = 0
        for i, row in enumerate(table):
            running += _value(values, literals[i])
            for j, var in enumerate(row):
                values[var] = running >= j + 1
    return values


def check_assignment(instance, g):
    """
    :returns bool: ``True`` iff the assignment induced by ``g`` satisfies
        every clause.
    :raises InputError: Order mismatch.
    """
    values = assignment_from_graph(instance, g)
    return all(any(_value(values, lit) for lit in clause) for clause in instance.clauses)


def decode_model(instance, model):
    """ Graph edges of a solver model (list of signed variables) """
    positive = {lit for lit in model if lit > 0}
    return sorted(pair for pair, var in instance.edge_var_map.items() if var in positive)
