"""

******************************
Compact immutable simple graph
******************************

Vertices are the dense indices ``0..order-1``; the adjacency matrix is
kept as one integer bit row per vertex (bit ``u`` of row ``v`` set iff
``u`` and ``v`` are adjacent).

"""

from ..exceptions import CapacityError, InputError


CAPACITY = 512


def popcount(mask):
    """ Number of set bits of a non negative integer """
    return bin(mask).count('1')


def iter_bits(mask):
    """ Yield the set bit positions of ``mask`` in ascending order """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(order):
    return (1 << order) - 1


def is_count(value):
    """ A plain ``int``, ``bool`` excluded """
    return isinstance(value, int) and not isinstance(value, bool)


def check_capacity(order, what='graph order', cap=CAPACITY):
    """
    Validate an order against a cap.

    :raises CapacityError: When ``order`` exceeds ``cap``.
    :raises InputError: On negative order.
    """
    if order < 0:
        raise InputError("Not a valid 'order':{!r}".format(order))
    if order > cap:
        raise CapacityError(what, order, cap)


class VertexSet(object):
    """ Immutable set of vertices of a graph with ``order`` vertices """

    __slots__ = ('_order', '_mask')

    def __init__(self, order, members=()):
        mask = 0
        for v in members:
            if not 0 <= v < order:
                raise InputError(
                    "Vertex {!r} out of range for order {}".format(v, order)
                )
            mask |= 1 << v
        self._order = order
        self._mask = mask

    @classmethod
    def from_mask(cls, order, mask):
        if mask < 0 or mask >> order:
            raise InputError(
                "Mask {:#x} has members outside order {}".format(mask, order)
            )
        vs = cls.__new__(cls)
        vs._order = order
        vs._mask = mask
        return vs

    @classmethod
    def full(cls, order):
        return cls.from_mask(order, full_mask(order))

    def __repr__(self):
        return '{}({}, {})'.format(
            self.__class__.__name__, self._order, list(self)
        )

    def __len__(self):
        return popcount(self._mask)

    def __iter__(self):
        return iter_bits(self._mask)

    def __contains__(self, v):
        return 0 <= v < self._order and bool(self._mask >> v & 1)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return False
        return self._order == other._order and self._mask == other._mask

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._order, self._mask))

    def __and__(self, other):
        return VertexSet.from_mask(self._order, self._mask & self._check(other))

    def __or__(self, other):
        return VertexSet.from_mask(self._order, self._mask | self._check(other))

    def __sub__(self, other):
        return VertexSet.from_mask(self._order, self._mask & ~self._check(other))

    @property
    def order(self):
        return self._order

    @property
    def mask(self):
        return self._mask

    def isdisjoint(self, other):
        return not self._mask & self._check(other)

    def issubset(self, other):
        return not self._mask & ~self._check(other)

    def complement(self):
        return VertexSet.from_mask(self._order, full_mask(self._order) & ~self._mask)

    def to_list(self):
        return list(iter_bits(self._mask))

    def _check(self, other):
        if not isinstance(other, VertexSet) or other.order != self._order:
            raise InputError(
                "Vertex sets of different graphs cannot be combined"
            )
        return other.mask


class Graph(object):
    """
    Undirected simple graph, immutable after construction.

    Instances are normally produced by :class:`GraphBuilder` or by the
    graph algebra functions, which guarantee the invariants (no loops,
    symmetric rows, every row within the order).
    """

    __slots__ = ('_order', '_rows', '_hash')

    def __init__(self, order, rows):
        check_capacity(order)
        rows = tuple(rows)
        if len(rows) != order:
            raise InputError(
                "Expected {} adjacency rows, got {}".format(order, len(rows))
            )
        for v, row in enumerate(rows):
            if row >> order or row < 0:
                raise InputError("Row {} exceeds order {}".format(v, order))
            if row >> v & 1:
                raise InputError("Self-loop at vertex {}".format(v))
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise InputError(
                        "Asymmetric adjacency between {} and {}".format(v, u)
                    )
        self._order = order
        self._rows = rows
        self._hash = None

    @classmethod
    def from_rows(cls, order, rows):
        """ Build from bit rows without validation; callers guarantee the invariants """
        g = cls.__new__(cls)
        g._order = order
        g._rows = tuple(rows)
        g._hash = None
        return g

    def __repr__(self):
        return '{}(order={}, edges={})'.format(
            self.__class__.__name__, self._order, self.edge_count()
        )

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return False
        return self._order == other._order and self._rows == other._rows

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._order, self._rows))
        return self._hash

    def __len__(self):
        return self._order

    @property
    def order(self):
        return self._order

    @property
    def rows(self):
        return self._rows

    def vertices(self):
        return VertexSet.full(self._order)

    def has_edge(self, u, v):
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v):
        self._check_vertex(v)
        return VertexSet.from_mask(self._order, self._rows[v])

    def degree(self, v):
        self._check_vertex(v)
        return popcount(self._rows[v])

    def degrees(self):
        return [popcount(row) for row in self._rows]

    def edge_count(self):
        return sum(self.degrees()) // 2

    def edges(self):
        """ Sorted list of edges ``(u, v)`` with ``u < v`` """
        return [
            (u, v)
            for u, row in enumerate(self._rows)
            for v in iter_bits(row >> (u + 1) << (u + 1))
        ]

    def _check_vertex(self, v):
        if not 0 <= v < self._order:
            raise InputError(
                "Vertex {!r} out of range for order {}".format(v, self._order)
            )


class GraphBuilder(object):
    """ Accumulates edges of a graph of fixed order until sealed """

    def __init__(self, order):
        check_capacity(order)
        self._order = order
        self._rows = [0] * order
        self._sealed = False

    @property
    def order(self):
        return self._order

    def add_edge(self, u, v):
        """
        Add the edge ``{u, v}``; duplicates are collapsed.

        :raises InputError: Out of range vertex, self-loop or sealed builder.
        """
        if self._sealed:
            raise InputError('Builder is sealed')
        for w in (u, v):
            if not 0 <= w < self._order:
                raise InputError(
                    "Vertex {!r} out of range for order {}".format(w, self._order)
                )
        if u == v:
            raise InputError("Self-loop at vertex {}".format(u))
        self._rows[u] |= 1 << v
        self._rows[v] |= 1 << u
        return self

    def add_edges(self, edges):
        for u, v in edges:
            self.add_edge(u, v)
        return self

    def seal(self):
        """ Freeze the builder and return the graph """
        self._sealed = True
        return Graph.from_rows(self._order, self._rows)


def build_graph(order, edges):
    """
    Build a graph from an edge list.

    :param int order: Vertex count, at most ``CAPACITY``.
    :param edges: Iterable of vertex pairs.
    :returns Graph: Graph with exactly the given edges.
    :raises InputError: Out of range vertex or self-loop.
    :raises CapacityError: Order above the cap.
    """
    return GraphBuilder(order).add_edges(edges).seal()


def empty_graph(order):
    check_capacity(order)
    return Graph.from_rows(order, [0] * order)


def complete_graph(order):
    check_capacity(order)
    full = full_mask(order)
    return Graph.from_rows(order, [full & ~(1 << v) for v in range(order)])


def cycle_graph(order):
    if order < 3:
        raise InputError("A cycle needs at least 3 vertices, got {}".format(order))
    return build_graph(order, [(v, (v + 1) % order) for v in range(order)])


def path_graph(order):
    return build_graph(order, [(v, v + 1) for v in range(order - 1)])
