"""

*************
Graph algebra
*************

Complement, join, disjoint union, induced subgraphs and the counting
primitives ``d(v)``, ``e(G)`` and ``e(A, B)``.

"""

from .entities.graph import (
    CAPACITY,
    Graph,
    VertexSet,
    check_capacity,
    full_mask,
    iter_bits,
    popcount
)
from .exceptions import InputError


def _check_set(g, s):
    if not isinstance(s, VertexSet) or s.order != g.order:
        raise InputError(
            "Vertex set {!r} does not belong to a graph of order {}".format(s, g.order)
        )


def complement(g):
    """ Graph with exactly the non-edges of ``g`` """
    full = full_mask(g.order)
    return Graph.from_rows(
        g.order, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)]
    )


def join(g1, g2):
    """
    Disjoint copies of ``g1`` and ``g2`` plus every cross edge.

    Vertices of ``g2`` are shifted by ``g1.order``.

    :raises CapacityError: Combined order above ``CAPACITY``.
    """
    check_capacity(g1.order + g2.order, what='joined order', cap=CAPACITY)
    shift = g1.order
    first = full_mask(g1.order)
    second = full_mask(g2.order) << shift
    rows = [row | second for row in g1.rows]
    rows.extend((row << shift) | first for row in g2.rows)
    return Graph.from_rows(g1.order + g2.order, rows)


def disjoint_union(graphs):
    """
    Block diagonal union, graphs placed in the given order.

    :param list graphs: Graphs, possibly empty.
    :raises CapacityError: Total order above ``CAPACITY``.
    """
    graphs = list(graphs)
    check_capacity(sum(g.order for g in graphs), what='union order', cap=CAPACITY)
    rows = []
    shift = 0
    for g in graphs:
        rows.extend(row << shift for row in g.rows)
        shift += g.order
    return Graph.from_rows(shift, rows)


def induced(g, s):
    """
    Subgraph induced by ``s``, relabelled by ascending original index.

    :param Graph g: The host graph.
    :param VertexSet s: Vertices to keep.
    :returns Graph: Graph on ``len(s)`` vertices.
    """
    _check_set(g, s)
    kept = s.to_list()
    position = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in iter_bits(g.rows[v] & s.mask):
            row |= 1 << position[u]
        rows.append(row)
    return Graph.from_rows(len(kept), rows)


def common_neighbors(g, s):
    """
    Vertices adjacent to every member of ``s``.

    :raises InputError: When ``s`` is empty.
    """
    _check_set(g, s)
    if not s.mask:
        raise InputError('Common neighbourhood of an empty set is undefined')
    mask = full_mask(g.order)
    for v in s:
        mask &= g.rows[v]
    return VertexSet.from_mask(g.order, mask)


def degree(g, v):
    return g.degree(v)


def min_degree(g):
    """ Minimum degree, ``0`` for the order-0 graph """
    return min(g.degrees()) if g.order else 0


def count_edges(g):
    return g.edge_count()


def count_edges_between(g, a, b):
    """
    ``e(A, B)``: edges with one end in ``a`` and the other in ``b``.

    :raises InputError: Overlapping sets.
    """
    _check_set(g, a)
    _check_set(g, b)
    if not a.isdisjoint(b):
        raise InputError('Vertex sets {!r} and {!r} overlap'.format(a, b))
    return sum(popcount(g.rows[v] & b.mask) for v in a)


def count_edges_within(g, s):
    """ ``e(S)``: edges with both ends in ``s`` """
    _check_set(g, s)
    return sum(popcount(g.rows[v] & s.mask) for v in s) // 2
