"""

********************
Named graph families
********************

Deterministic builders:

* books ``B_{k,n}`` and stars,
* complete multipartite and Turan graphs,
* the clique-copy witness ``G = F + ... + F`` (``p - 1`` joined copies of
  ``F``, itself a disjoint union of ``K_{a2}``),
* the Dirac-type assembly of a ``d_k`` witness with independent sets,
* the polarity graph ``ER_q`` over a prime field.

"""

import itertools
from .algebra import disjoint_union, join
from .entities.graph import (
    Graph,
    VertexSet,
    check_capacity,
    complete_graph,
    empty_graph,
    full_mask,
    is_count
)
from .entities.patterns import BookPattern, MultipartitePattern
from .exceptions import InputError, UnsupportedParameterError


def _positive(name, value, minimum=1):
    if not is_count(value) or value < minimum:
        raise InputError("Not a valid '{}':{!r}, expected >= {}".format(name, value, minimum))


def make_book(b):
    """
    ``B_{k,n}``: the spine ``0..k-1`` is a clique, every page vertex
    ``k..n-1`` is adjacent to exactly the spine.

    :param BookPattern b: The book.
    :returns Graph: ``n`` vertices, ``C(k,2) + k(n-k)`` edges.
    """
    if not isinstance(b, BookPattern):
        raise InputError("Not a BookPattern: {!r}".format(b))
    check_capacity(b.total)
    spine = full_mask(b.spine)
    rows = [(full_mask(b.total) & ~(1 << v)) for v in range(b.spine)]
    rows.extend(spine for _ in range(b.pages))
    return Graph.from_rows(b.total, rows)


def make_star(leaves):
    """ ``K_{1,leaves}`` as the book ``B_{1,leaves+1}`` """
    _positive('leaves', leaves)
    return make_book(BookPattern(1, leaves + 1))


def _blocks_graph(sizes):
    """ Complete multipartite graph on consecutive blocks of the given sizes """
    order = sum(sizes)
    check_capacity(order)
    full = full_mask(order)
    rows = []
    start = 0
    for size in sizes:
        block = full_mask(size) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph.from_rows(order, rows)


def multipartite_blocks(sizes):
    """
    Consecutive vertex blocks of a complete multipartite graph.

    :returns list: One :class:`VertexSet` per part, in the given order.
    """
    order = sum(sizes)
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(VertexSet.from_mask(order, full_mask(size) << start))
        start += size
    return blocks


def make_multipartite(m):
    """
    ``K_p(a_1, ..., a_p)`` with the parts laid out in consecutive blocks,
    smallest part first.

    :raises CapacityError: Total above the vertex cap.
    """
    if not isinstance(m, MultipartitePattern):
        raise InputError("Not a MultipartitePattern: {!r}".format(m))
    return _blocks_graph(m.parts)


def turan_sizes(order, classes):
    """ Part sizes as equal as possible, nondecreasing """
    _positive('classes', classes)
    _positive('order', order, minimum=0)
    base, extra = divmod(order, classes)
    return [base] * (classes - extra) + [base + 1] * extra


def make_turan(order, classes):
    """
    Balanced complete ``classes``-partite graph on ``order`` vertices.

    Part sizes differ by at most one; when ``classes > order`` some parts
    are empty.
    """
    return _blocks_graph(turan_sizes(order, classes))


def section2_clique_count(a2, k, n):
    """ Number of ``K_{a2}`` copies in ``F``: ``floor((n-k-1)/a2) + k`` """
    _positive('a2', a2)
    _positive('k', k)
    if not is_count(n) or n < k + 2:
        raise InputError(
            "The clique-copy witness needs n >= k + 2, got n={!r}, k={}".format(n, k)
        )
    return (n - k - 1) // a2 + k


def make_section2_witness(p, a2, k, n):
    """
    ``p - 1`` copies of ``F`` with all edges between copies, where ``F`` is
    the disjoint union of ``floor((n-k-1)/a2) + k`` cliques ``K_{a2}``.

    :param int p: ``p >= 2``.
    :param int a2: Clique size, ``a2 >= 1``.
    :param int k: Book spine, ``k >= 1``.
    :param int n: Book order, ``n >= k + 2``.
    :returns Graph: Order ``(p-1) * (floor((n-k-1)/a2) + k) * a2``.
    :raises InputError: Invalid parameters.
    :raises CapacityError: Order above the vertex cap.
    """
    _positive('p', p, minimum=2)
    cliques = section2_clique_count(a2, k, n)
    check_capacity((p - 1) * cliques * a2, what='witness order')
    f = disjoint_union([complete_graph(a2)] * cliques)
    g = f
    for _ in range(p - 2):
        g = join(g, f)
    return g


def make_dk_witness_assembly(p, n, inner, d):
    """
    Join of ``inner`` (``n + d - 1`` vertices) with ``p - 2`` independent
    sets of size ``n - 1``.

    :returns Graph: Order ``(p-1)(n-1) + d``.
    :raises InputError: ``inner`` has the wrong order.
    :raises CapacityError: Order above the vertex cap.
    """
    _positive('p', p, minimum=2)
    _positive('n', n)
    _positive('d', d, minimum=0)
    if inner.order != n + d - 1:
        raise InputError(
            "Inner graph has order {}, expected n + d - 1 = {}"
            .format(inner.order, n + d - 1)
        )
    check_capacity((p - 1) * (n - 1) + d, what='assembly order')
    g = inner
    for _ in range(p - 2):
        g = join(g, empty_graph(n - 1))
    return g


def is_prime(q):
    if q < 2:
        return False
    return all(q % f for f in range(2, int(q ** 0.5) + 1))


def projective_points(q):
    """
    Points of the projective plane over ``GF(q)``, ``q`` prime.

    Each point is the triple whose first nonzero coordinate is ``1``;
    points are listed in lexicographic order.
    """
    return [
        t for t in itertools.product(range(q), repeat=3)
        if any(t) and next(x for x in t if x) == 1
    ]


def _check_prime_field(q):
    if not is_count(q) or not is_prime(q):
        raise UnsupportedParameterError(
            "Only prime q is supported, got {!r}".format(q)
        )
    check_capacity(q * q + q + 1, what='polarity graph order')


def make_er_polarity(q):
    """
    Polarity graph ``ER_q``: projective points, ``u ~ v`` iff ``u . v = 0``
    in ``GF(q)`` and ``u != v``.

    C4-free of order ``q^2 + q + 1``; the ``q + 1`` absolute points have
    degree ``q``, all others ``q + 1``.

    :raises UnsupportedParameterError: ``q`` not prime.
    :raises CapacityError: Order above the vertex cap.
    """
    _check_prime_field(q)
    points = projective_points(q)
    rows = [0] * len(points)
    for (i, u), (j, v) in itertools.combinations(enumerate(points), 2):
        if (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q == 0:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph.from_rows(len(points), rows)


def er_absolute_points(q):
    """ Self-orthogonal points of ``ER_q``, the vertices of degree ``q`` """
    _check_prime_field(q)
    points = projective_points(q)
    return VertexSet(len(points), [
        i for i, u in enumerate(points)
        if (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]) % q == 0
    ])
