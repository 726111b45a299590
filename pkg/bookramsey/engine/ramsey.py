"""

***********************
Ramsey numbers r(H1, B)
***********************

Witness certification and exact computation of
``r(K_p(a_1, ..., a_p), B_{k,n})`` at desk scale.

Counterexamples (``h1``-free graphs with ``h2``-free complement) form a
hereditary family, so the search walks the canonical augmentation tree
restricted to counterexamples, one order at a time: the first order with
no survivor is the Ramsey number.

"""

import concurrent.futures
from ..algebra import complement
from ..codec.graph6 import graph6_encode
from ..constructions import make_multipartite
from ..entities.graph import check_capacity, empty_graph
from ..entities.records import (
    BoundMethod,
    GoodnessReport,
    RamseyBound,
    WitnessCertificate
)
from ..freeness import find_book, find_multipartite
from ..logger import get_logger
from .enumeration import (
    ENUMERATION_CAP,
    SHARD_ORDER,
    augment,
    counterexample_predicate,
    first_graph
)
from .formulas import burr_lower


LOGGER = get_logger(__name__)


def verify_witness(g, query):
    """
    Check that ``g`` avoids ``query.h1`` and its complement avoids
    ``query.h2``.

    :param Graph g: Candidate witness.
    :param RamseyQuery query: The query.
    :returns WitnessCertificate: Certifies ``r(h1, h2) >= order + 1`` when
        both checks pass, otherwise carries the violating embedding.
    """
    h1 = find_multipartite(g, query.h1)
    book = find_book(complement(g), query.h2)
    return WitnessCertificate(
        g, query,
        h1_free=h1 is None,
        complement_book_free=book is None,
        violation=h1 if h1 is not None else book
    )


def find_counterexample(order, query, workers=1, shard_order=SHARD_ORDER):
    """
    First counterexample on ``order`` vertices in generation order.

    :returns: A certified :class:`WitnessCertificate`, or ``None`` when
        ``order`` arrows the query.
    :raises CapacityError: ``order`` above ``ENUMERATION_CAP``.
    """
    g = first_graph(order, counterexample_predicate(query), workers, shard_order)
    if g is None:
        return None
    return verify_witness(g, query)


def arrows(order, query, workers=1, shard_order=SHARD_ORDER):
    """
    ``True`` iff every graph on ``order`` vertices contains ``h1`` or has
    ``h2`` in its complement.

    :raises CapacityError: ``order`` above ``ENUMERATION_CAP``.
    """
    return find_counterexample(order, query, workers, shard_order) is None


def _augment_job(args):
    parent, predicate = args
    return augment(parent, predicate)


def _next_level(level, predicate, pool):
    if pool is None or len(level) < 2:
        return [child for parent in level for child in augment(parent, predicate)]
    jobs = [(parent, predicate) for parent in level]
    return [child for children in pool.map(_augment_job, jobs) for child in children]


def _exact(query, n_max, pool):
    predicate = counterexample_predicate(query)
    level = [empty_graph(0)]
    witness = level[0]
    for order in range(1, n_max + 1):
        level = _next_level(level, predicate, pool)
        LOGGER.info('%s: %d counterexample(s) on %d vertices', query, len(level), order)
        if not level:
            certificate = verify_witness(witness, query)
            return RamseyBound(
                query, order, order,
                methods=[BoundMethod.EXHAUSTIVE, BoundMethod.WITNESS],
                witness_ref=graph6_encode(witness),
                witness=certificate
            )
        witness = level[0]
    certificate = verify_witness(witness, query)
    return RamseyBound(
        query, n_max + 1, None,
        methods=[BoundMethod.WITNESS],
        witness_ref=graph6_encode(witness),
        witness=certificate
    )


def ramsey_exact(query, n_max, workers=1):
    """
    Smallest ``N <= n_max`` such that ``N`` arrows the query.

    :param RamseyQuery query: The query.
    :param int n_max: ``n_max <= ENUMERATION_CAP``.
    :param int workers: Worker processes; parents of a level are expanded
        in parallel and gathered in order.
    :returns RamseyBound: Exact when found, with the first counterexample
        on ``N - 1`` vertices attached; otherwise ``lower = n_max + 1``,
        upper unknown, with the first counterexample on ``n_max``
        vertices.
    :raises CapacityError: ``n_max`` above ``ENUMERATION_CAP``.
    """
    check_capacity(n_max, what='enumeration order', cap=ENUMERATION_CAP)
    if workers > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            return _exact(query, n_max, pool)
    return _exact(query, n_max, None)


def goodness_report(query, exact):
    """
    Compare an exact value with Burr's lower bound.

    :returns GoodnessReport: ``good`` is ``True`` when the book is
        ``h1``-good at this instance.
    """
    burr = burr_lower(make_multipartite(query.h1), query.h2.total)
    return GoodnessReport(query, exact, burr, exact == burr)
