"""

**************************
Dirac-type extremal values
**************************

``d_k(n, H)`` is the largest ``d`` for which some ``(n + d - 1)``-vertex
``H``-free graph has at most ``k - 1`` vertices of degree below ``d``.
It is computed by exhaustive isomorph-free search over ``H``-free graphs,
and the witness is assembled into a lower bound for ``r(H1, B_{k,n})``.

"""

from .constructions import make_dk_witness_assembly
from .engine.enumeration import ENUMERATION_CAP, SHARD_ORDER, PatternFree, enumerate_graphs
from .engine.ramsey import verify_witness
from .entities.graph import check_capacity, is_count
from .entities.records import DkResult
from .exceptions import InputError
from .freeness import is_pattern_free
from .logger import get_logger


LOGGER = get_logger(__name__)


def dk_star_cap(k, a2):
    """
    ``a2 - 1``, the structural cap on ``d_k(n, K_{1,a2})``.

    :raises InputError: ``a2 < 1`` or ``k < 1``.
    """
    if not is_count(k) or k < 1:
        raise InputError("Not a valid 'k':{!r}".format(k))
    if not is_count(a2) or a2 < 1:
        raise InputError("Not a valid 'a2':{!r}".format(a2))
    return a2 - 1


def low_degree_count(g, d):
    """ Number of vertices of degree below ``d`` """
    return sum(1 for degree in g.degrees() if degree < d)


def verify_dk_witness(g, query, d):
    """
    Re-check a witness of ``d_k(n, H) >= d`` by direct scan.

    :returns bool: Right order, ``H``-free and at most ``k - 1`` vertices
        of degree below ``d``.
    """
    return (
        g.order == query.n + d - 1
        and low_degree_count(g, d) <= query.k - 1
        and is_pattern_free(g, query.pattern)
    )


def exempt_range(query):
    """
    Largest ``d`` at which all ``n + d - 1`` vertices may be exempt, so an
    edgeless graph is a witness: ``max(0, k - n)``.
    """
    return max(0, query.k - query.n)


def _search_cap(query):
    """ Last ``d`` worth probing, or ``None`` when only capacity bounds it """
    if query.is_star:
        return max(dk_star_cap(query.k, query.pattern.parts[1]), exempt_range(query))
    return None


def find_dk_witness(query, d, workers=1, shard_order=SHARD_ORDER):
    """
    First ``H``-free graph on ``n + d - 1`` vertices, in generation order,
    with at most ``k - 1`` vertices of degree below ``d``.

    :returns: A :class:`Graph` or ``None``.
    :raises CapacityError: ``n + d - 1`` above ``ENUMERATION_CAP``.
    """
    order = query.n + d - 1
    check_capacity(order, what='d_k witness order', cap=ENUMERATION_CAP)
    for g in enumerate_graphs(order, PatternFree(query.pattern), workers, shard_order):
        if low_degree_count(g, d) <= query.k - 1:
            return g
    return None


def dk_value(query, lookahead=1, workers=1, shard_order=SHARD_ORDER):
    """
    Compute ``d_k(n, H)``.

    ``d`` ascends from ``0`` (always witnessed by an edgeless graph). The
    search stops after ``lookahead`` consecutive values without a witness.
    The default of one stops at the first such ``d``; ``lookahead=2``
    also tries ``d + 1`` before stopping. Stars ``K_{1,a2}`` are further
    capped at ``a2 - 1``, unless ``k - n`` is larger: up to ``d = k - n``
    every vertex is exempt. Other patterns are bounded only by the
    enumeration cap.

    :param DkQuery query: The query.
    :param int lookahead: Consecutive failing ``d`` values before stopping.
    :returns DkResult: Value, first witness in generation order, and its
        low-degree census.
    :raises CapacityError: A searched order ``n + d - 1`` above the
        enumeration cap.
    """
    if not is_count(lookahead) or lookahead < 1:
        raise InputError("Not a valid 'lookahead':{!r}".format(lookahead))
    cap = _search_cap(query)
    best = None
    failures = 0
    d = 0
    while (cap is None or d <= cap) and failures < lookahead:
        witness = find_dk_witness(query, d, workers, shard_order)
        if witness is None:
            failures += 1
            LOGGER.info('%s: no witness for d=%d', query, d)
        else:
            failures = 0
            best = (d, witness)
            LOGGER.info('%s: witness for d=%d on %d vertices', query, d, witness.order)
        d += 1
    value, witness = best
    return DkResult(query, value, witness, low_degree_count(witness, value))


def assemble_eq2_bound(p, n, dk, query):
    """
    Join the ``d_k`` witness with ``p - 2`` independent sets of size
    ``n - 1`` and certify it against ``query``.

    :returns WitnessCertificate: Certified lower bound
        ``(p - 1)(n - 1) + d + 1`` on success; otherwise the failing
        check is recorded in the certificate.
    :raises InputError: Witness order differs from ``n + d - 1``.
    """
    g = make_dk_witness_assembly(p, n, dk.witness, dk.value)
    return verify_witness(g, query)
