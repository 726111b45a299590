"""

*****************************************
Queries, bounds and search certificates
*****************************************

"""

import collections
import enum
from ..exceptions import InputError
from .graph import is_count, popcount
from .patterns import BookPattern, MultipartitePattern


class Outcome(enum.Enum):
    """ Result of a budgeted search """
    FOUND = 'found'
    ABSENT = 'absent'
    INCONCLUSIVE = 'inconclusive'

    def __str__(self):
        return '{}'.format(self.value)


class BoundMethod(enum.Enum):
    """ How a Ramsey bound was obtained """
    BURR = 'burr'
    CHVATAL = 'chvatal'
    EQ3 = 'section2-construction'
    EQ2 = 'dirac-assembly'
    THM14 = 'thm14'
    THM15 = 'thm15 (assumes b <= delta ln n)'
    WITNESS = 'witness'
    EXHAUSTIVE = 'exhaustive'

    def __str__(self):
        return '{}'.format(self.value)

    @classmethod
    def values(cls):
        return [str(m) for m in cls]


class RamseyQuery(object):
    """
    The pair ``(K_p(a_1, ..., a_p), B_{k,n})`` of ``r(H1, H2)``.

    :param MultipartitePattern h1: The multipartite pattern.
    :param BookPattern h2: The book.
    :raises InputError: On arguments of the wrong type.
    """

    def __init__(self, h1, h2):
        if not isinstance(h1, MultipartitePattern):
            raise InputError("'h1' must be a MultipartitePattern, not {}".format(type(h1)))
        if not isinstance(h2, BookPattern):
            raise InputError("'h2' must be a BookPattern, not {}".format(type(h2)))
        self._h1 = h1
        self._h2 = h2

    @classmethod
    def of(cls, parts, spine, total):
        return cls(MultipartitePattern(parts), BookPattern(spine, total))

    def __repr__(self):
        return 'RamseyQuery({} vs {})'.format(self._h1, self._h2)

    def __eq__(self, other):
        if not isinstance(other, RamseyQuery):
            return False
        return self._h1 == other.h1 and self._h2 == other.h2

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._h1, self._h2))

    @property
    def h1(self):
        return self._h1

    @property
    def h2(self):
        return self._h2


class WitnessCertificate(object):
    """
    A graph checked against a Ramsey query.

    ``certified_lower`` is ``order + 1`` exactly when the graph is
    ``h1``-free and its complement is ``h2``-free, ``None`` otherwise; in
    that case ``violation`` holds an embedding of the failing pattern
    (in the graph for ``h1``, in the complement for ``h2``).
    """

    def __init__(self, graph, query, h1_free, complement_book_free, violation=None):
        self._graph = graph
        self._query = query
        self._h1_free = bool(h1_free)
        self._complement_book_free = bool(complement_book_free)
        self._violation = violation

    def __repr__(self):
        return 'WitnessCertificate(order={}, {}, certified_lower={})'.format(
            self._graph.order, self._query, self.certified_lower
        )

    @property
    def graph(self):
        return self._graph

    @property
    def query(self):
        return self._query

    @property
    def h1_free(self):
        return self._h1_free

    @property
    def complement_book_free(self):
        return self._complement_book_free

    @property
    def violation(self):
        return self._violation

    @property
    def certified(self):
        return self._h1_free and self._complement_book_free

    @property
    def certified_lower(self):
        if self.certified:
            return self._graph.order + 1
        return None


class RamseyBound(object):
    """
    Known bounds on ``r(h1, h2)``; ``None`` stands for unknown.

    :raises InputError: When both bounds are known and ``lower > upper``.
    """

    def __init__(self, query, lower=None, upper=None, methods=(), witness_ref=None,
                 witness=None):
        if lower is not None and upper is not None and lower > upper:
            raise InputError(
                "Inconsistent bounds for {}: {} > {}".format(query, lower, upper)
            )
        self._query = query
        self._lower = lower
        self._upper = upper
        self._methods = tuple(str(m) for m in methods)
        self._witness_ref = witness_ref
        self._witness = witness

    def __repr__(self):
        return 'RamseyBound({}, lower={}, upper={}, methods={})'.format(
            self._query, self._lower, self._upper, list(self._methods)
        )

    @property
    def query(self):
        return self._query

    @property
    def lower(self):
        return self._lower

    @property
    def upper(self):
        return self._upper

    @property
    def methods(self):
        return self._methods

    @property
    def witness_ref(self):
        return self._witness_ref

    @property
    def witness(self):
        """ The counterexample :class:`WitnessCertificate` behind ``lower`` """
        return self._witness

    @property
    def exact(self):
        return self._lower is not None and self._lower == self._upper

    @property
    def value(self):
        return self._lower if self.exact else None


class DkQuery(object):
    """
    Query for ``d_k(n, H)``.

    :param int n: ``n >= 1``.
    :param int k: ``k >= 1``.
    :param MultipartitePattern pattern: The forbidden ``H``, at least two parts.
    :raises InputError: In case of invalid arguments.
    """

    def __init__(self, n, k, pattern):
        if not is_count(n) or n < 1:
            raise InputError("Not a valid 'n':{!r}".format(n))
        if not is_count(k) or k < 1:
            raise InputError("Not a valid 'k':{!r}".format(k))
        if not isinstance(pattern, MultipartitePattern) or pattern.p < 2:
            raise InputError(
                "The forbidden pattern needs at least two parts: {!r}".format(pattern)
            )
        self._n = n
        self._k = k
        self._pattern = pattern

    def __repr__(self):
        return 'DkQuery(n={}, k={}, {})'.format(self._n, self._k, self._pattern)

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def pattern(self):
        return self._pattern

    @property
    def is_star(self):
        return self._pattern.p == 2 and self._pattern.parts[0] == 1


DkResult = collections.namedtuple(
    'DkResult', ['query', 'value', 'witness', 'low_degree_count']
)

BlowupResult = collections.namedtuple(
    'BlowupResult', ['outcome', 'embedding', 'nodes']
)

PartitionDiagnostics = collections.namedtuple(
    'PartitionDiagnostics', [
        'epsilon',
        'internal_edge_ratio',
        'size_deviations',
        'cross_densities',
        'condition_iv_violations',
        'max_internal_degree',
        'internal_ok',
        'sizes_ok',
        'cross_ok',
        'internal_degree_ok',
    ]
)

GoodnessReport = collections.namedtuple(
    'GoodnessReport', ['query', 'exact', 'burr', 'good']
)

PeelReport = collections.namedtuple(
    'PeelReport',
    ['threshold', 'high', 'low', 'state', 'parts', 'attached', 'unattached']
)


class PartitionState(object):
    """
    Assignment of every vertex to one of ``classes`` parts, with the cached
    number of internal edges ``sum e(V_i)``.

    Instances are immutable; :meth:`move` returns a new state. ``moves``
    counts the moves made since :meth:`from_assignment`, it takes no part
    in equality.
    """

    def __init__(self, assignment, classes, internal_edges, part_masks, moves=0):
        self._assignment = tuple(assignment)
        self._classes = classes
        self._internal_edges = internal_edges
        self._part_masks = tuple(part_masks)
        self._moves = moves

    @classmethod
    def from_assignment(cls, graph, assignment, classes):
        """
        :raises InputError: Wrong length or part index out of range.
        """
        if classes < 1:
            raise InputError("Not a valid number of 'classes':{!r}".format(classes))
        if len(assignment) != graph.order:
            raise InputError(
                "Assignment covers {} vertices, graph has {}"
                .format(len(assignment), graph.order)
            )
        masks = [0] * classes
        for v, part in enumerate(assignment):
            if not 0 <= part < classes:
                raise InputError("Part {!r} of vertex {} out of range".format(part, v))
            masks[part] |= 1 << v
        internal = sum(
            popcount(graph.rows[v] & masks[part])
            for v, part in enumerate(assignment)
        ) // 2
        return cls(assignment, classes, internal, masks)

    def __repr__(self):
        return 'PartitionState(classes={}, internal_edges={}, sizes={})'.format(
            self._classes, self._internal_edges, self.part_sizes
        )

    def __eq__(self, other):
        if not isinstance(other, PartitionState):
            return False
        return (self._assignment, self._classes) == (other.assignment, other.classes)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._assignment, self._classes))

    @property
    def assignment(self):
        return self._assignment

    @property
    def classes(self):
        return self._classes

    @property
    def internal_edges(self):
        return self._internal_edges

    @property
    def part_masks(self):
        return self._part_masks

    @property
    def moves(self):
        return self._moves

    @property
    def part_sizes(self):
        return tuple(popcount(mask) for mask in self._part_masks)

    def move(self, graph, v, target):
        """ State after moving ``v`` to part ``target`` """
        source = self._assignment[v]
        row = graph.rows[v]
        delta = (popcount(row & self._part_masks[target])
                 - popcount(row & self._part_masks[source]))
        masks = list(self._part_masks)
        masks[source] &= ~(1 << v)
        masks[target] |= 1 << v
        assignment = list(self._assignment)
        assignment[v] = target
        return PartitionState(assignment, self._classes,
                              self._internal_edges + delta, masks, self._moves + 1)
