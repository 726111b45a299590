"""

****************************
Isomorph-free graph listings
****************************

Canonical augmentation: a graph of order ``n + 1`` is produced from its
parent of order ``n`` by adding a vertex adjacent to a subset ``S``, and
kept only when the new vertex is in the orbit of the canonical deletion
vertex. The canonical deletion vertex is, among the vertices of maximum
``(degree, sorted neighbour degrees)``, the one with the smallest rooted
canonical code.

Hereditary predicates (closed under induced subgraphs) prune the tree
without losing completeness. Predicates are module level classes so that
they pickle into worker processes.

"""

import concurrent.futures
from ..algebra import complement
from ..entities.graph import Graph, check_capacity, empty_graph, iter_bits, popcount
from ..freeness import find_book, is_pattern_free
from ..logger import get_logger
from .canonical import rooted_code


LOGGER = get_logger(__name__)

ENUMERATION_CAP = 10
SHARD_ORDER = 4

GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168)


class Hereditary(object):
    """ Graph property closed under induced subgraphs; the base accepts all """

    def __call__(self, g):
        return True

    def __repr__(self):
        return '{}()'.format(self.__class__.__name__)


class PatternFree(Hereditary):
    """ No subgraph ``K_p(a_1, ..., a_p)`` """

    def __init__(self, pattern):
        self.pattern = pattern

    def __call__(self, g):
        return is_pattern_free(g, self.pattern)

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.pattern)


class ComplementBookFree(Hereditary):
    """ The complement contains no ``B_{k,n}`` """

    def __init__(self, book):
        self.book = book

    def __call__(self, g):
        if g.order < self.book.total:
            return True
        return find_book(complement(g), self.book) is None

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.book)


class Conjunction(Hereditary):
    """ All of the given predicates, checked in order """

    def __init__(self, predicates):
        self.predicates = tuple(predicates)

    def __call__(self, g):
        return all(predicate(g) for predicate in self.predicates)

    def __repr__(self):
        return '{}({})'.format(
            self.__class__.__name__, ', '.join(repr(p) for p in self.predicates)
        )


def counterexample_predicate(query):
    """ ``h1``-free graphs whose complement is ``h2``-free """
    return Conjunction([PatternFree(query.h1), ComplementBookFree(query.h2)])


def _invariants(rows):
    degrees = [popcount(row) for row in rows]
    return [
        (degrees[v], tuple(sorted(degrees[u] for u in iter_bits(row))))
        for v, row in enumerate(rows)
    ]


def _with_vertex(parent, subset):
    n = parent.order
    rows = [row | ((subset >> v & 1) << n) for v, row in enumerate(parent.rows)]
    rows.append(subset)
    return Graph.from_rows(n + 1, rows)


def _deletion_code(child, invariants):
    """ Rooted code of the last vertex when it is canonical, else ``None`` """
    new = child.order - 1
    tied = [v for v in range(new) if invariants[v] == invariants[new]]
    code = rooted_code(child, new)
    for v in tied:
        if rooted_code(child, v) < code:
            return None
    return code


def augment(parent, predicate=None):
    """
    Canonical children of ``parent``, one per isomorphism class, in
    ascending order of the new vertex's neighbourhood mask.

    :param Graph parent: The parent graph.
    :param Hereditary predicate: Children failing it are dropped.
    :returns list: Graphs of order ``parent.order + 1``; the new vertex is
        the last one.
    """
    seen = set()
    children = []
    for subset in range(1 << parent.order):
        child = _with_vertex(parent, subset)
        invariants = _invariants(child.rows)
        if invariants[-1] < max(invariants):
            continue
        if predicate is not None and not predicate(child):
            continue
        code = _deletion_code(child, invariants)
        if code is None or code in seen:
            continue
        seen.add(code)
        children.append(child)
    return children


def extend_level(graphs, predicate=None):
    """ Canonical children of every graph, parents taken in order """
    return [child for g in graphs for child in augment(g, predicate)]


def generate_level(order, predicate=None):
    """
    Every graph of ``order`` vertices satisfying ``predicate``, up to
    isomorphism, in generation order.

    :raises CapacityError: ``order`` above ``ENUMERATION_CAP``.
    """
    check_capacity(order, what='enumeration order', cap=ENUMERATION_CAP)
    level = [empty_graph(0)]
    if predicate is not None and not predicate(level[0]):
        return []
    for _ in range(order):
        level = extend_level(level, predicate)
    return level


def _descend(g, target, predicate):
    if g.order == target:
        yield g
        return
    for child in augment(g, predicate):
        for found in _descend(child, target, predicate):
            yield found


def _expand_shard(args):
    shard, target, predicate = args
    return list(_descend(shard, target, predicate))


def _first_in_shard(args):
    shard, target, predicate = args
    return next(_descend(shard, target, predicate), None)


def shards(order, predicate=None, shard_order=SHARD_ORDER):
    """ Roots of the subtrees the generation of ``order`` is split into """
    return generate_level(min(order, shard_order), predicate)


def _run_sharded(func, order, predicate, workers, shard_order):
    roots = shards(order, predicate, shard_order)
    LOGGER.info(
        'Order %d: %d shards at order %d, %d worker(s)',
        order, len(roots), min(order, shard_order), workers
    )
    jobs = [(root, order, predicate) for root in roots]
    if workers > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for result in pool.map(func, jobs):
                yield result
    else:
        for job in jobs:
            yield func(job)


def _stream(order, predicate, workers, shard_order):
    if order <= shard_order:
        for g in generate_level(order, predicate):
            yield g
        return
    for index, graphs in enumerate(
            _run_sharded(_expand_shard, order, predicate, workers, shard_order)):
        LOGGER.debug('Shard %d: %d graph(s)', index, len(graphs))
        for g in graphs:
            yield g


def enumerate_graphs(order, predicate=None, workers=1, shard_order=SHARD_ORDER):
    """
    Stream one graph per isomorphism class of the given order.

    :param int order: ``0 <= order <= ENUMERATION_CAP``.
    :param Hereditary predicate: Optional hereditary filter.
    :param int workers: Worker processes for the shards.
    :param int shard_order: Order at which the tree is split.
    :returns: Iterator of :class:`Graph`, deterministic order whatever the
        number of workers.
    :raises CapacityError: ``order`` above ``ENUMERATION_CAP``.
    """
    check_capacity(order, what='enumeration order', cap=ENUMERATION_CAP)
    return _stream(order, predicate, workers, shard_order)


def first_graph(order, predicate=None, workers=1, shard_order=SHARD_ORDER):
    """
    First graph of ``order`` vertices satisfying ``predicate`` in
    generation order, ``None`` when there is none.

    Shards are reduced in order, the result does not depend on the number
    of workers.
    """
    check_capacity(order, what='enumeration order', cap=ENUMERATION_CAP)
    if order <= shard_order:
        level = generate_level(order, predicate)
        return level[0] if level else None
    for found in _run_sharded(_first_in_shard, order, predicate, workers, shard_order):
        if found is not None:
            return found
    return None


def count_graphs(order, predicate=None, workers=1, shard_order=SHARD_ORDER):
    return sum(1 for _ in enumerate_graphs(order, predicate, workers, shard_order))
