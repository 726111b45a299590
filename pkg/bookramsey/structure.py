"""

***********************
Constructive proof kits
***********************

Runnable kernels of the stability arguments:

* local-move partition refinement to a fixpoint where every vertex has
  no more neighbours in its own part than in any other part,
* epsilon diagnostics of a partition,
* greedy independent sets meeting the Turan bound,
* clique counting by pivoting,
* degree peeling and reattachment of low-degree vertices,
* budgeted search for induced blowups ``K_r(t)``.

"""

import math
import random
from fractions import Fraction
from .algebra import induced
from .entities.graph import VertexSet, full_mask, is_count, iter_bits, popcount
from .entities.patterns import Embedding, MultipartitePattern
from .entities.records import (
    BlowupResult,
    Outcome,
    PartitionDiagnostics,
    PartitionState,
    PeelReport
)
from .exceptions import InputError
from .logger import get_logger


LOGGER = get_logger(__name__)

BLOWUP_BUDGET = 100000


def _initial_assignment(order, classes, seed):
    if seed is None:
        return [v % classes for v in range(order)]
    permutation = list(range(order))
    random.Random(seed).shuffle(permutation)
    assignment = [0] * order
    for position, v in enumerate(permutation):
        assignment[v] = position % classes
    return assignment


def refine_partition(g, classes, seed=None):
    """
    Single-vertex moves that strictly lower ``sum e(V_i)``, until none is
    left.

    Vertices are scanned in ascending order and each takes the first
    strictly improving target part, in ascending order. At the fixpoint
    ``d_{V_i}(v) <= d_{V_j}(v)`` for every ``v`` in ``V_i`` and every ``j``.

    :param Graph g: The graph.
    :param int classes: Number of parts, ``>= 1``.
    :param seed: Optional seed of the initial permutation; round-robin by
        vertex index when ``None``.
    :returns PartitionState: The fixpoint.
    """
    if not is_count(classes) or classes < 1:
        raise InputError("Not a valid number of 'classes':{!r}".format(classes))
    state = PartitionState.from_assignment(
        g, _initial_assignment(g.order, classes, seed), classes
    )
    improved = True
    while improved:
        improved = False
        for v in range(g.order):
            row = g.rows[v]
            own = popcount(row & state.part_masks[state.assignment[v]])
            for target in range(classes):
                if target == state.assignment[v]:
                    continue
                if popcount(row & state.part_masks[target]) < own:
                    state = state.move(g, v, target)
                    improved = True
                    break
    LOGGER.debug('Partition fixpoint after %d move(s): %r', state.moves, state)
    return state


def _internal_degrees(g, state):
    return [
        popcount(g.rows[v] & state.part_masks[part])
        for v, part in enumerate(state.assignment)
    ]


def max_internal_degree(g, state):
    """ Largest ``d_{V_i}(v)`` over ``v`` in ``V_i``, ``0`` when empty """
    return max(_internal_degrees(g, state) or [0])


def condition_iv_violations(g, state):
    """ Vertices with more neighbours in their own part than in some other """
    count = 0
    for v, own in enumerate(_internal_degrees(g, state)):
        if any(popcount(g.rows[v] & mask) < own for mask in state.part_masks):
            count += 1
    return count


def partition_diagnostics(g, state, epsilon, pattern=None):
    """
    Observed partition quantities against ``epsilon``.

    * internal: ``sum e(V_i) <= epsilon C(n, 2)``,
    * sizes: ``| |V_i| - n/c | <= sqrt(2 epsilon) n``,
    * cross: ``e(V_i, V_j) >= (1 - (c + 1)^2 epsilon) |V_i| |V_j|``,

    with ``c`` parts. With a ``pattern`` ``K_p(a_1, a_2, ...)`` the largest
    internal degree is also checked against ``a2 - 1``.

    :raises InputError: ``epsilon`` outside ``(0, 1)``.
    """
    if not 0 < epsilon < 1:
        raise InputError("'epsilon' must lie in (0, 1), got {!r}".format(epsilon))
    n = g.order
    pairs = n * (n - 1) // 2
    ratio = float(state.internal_edges) / pairs if pairs else 0.0
    sizes = state.part_sizes
    target = float(n) / state.classes
    deviations = tuple(abs(size - target) for size in sizes)
    cross = []
    for i in range(state.classes):
        for j in range(i + 1, state.classes):
            between = sum(
                popcount(g.rows[v] & state.part_masks[j])
                for v in iter_bits(state.part_masks[i])
            )
            denominator = sizes[i] * sizes[j]
            cross.append((i, j, float(between) / denominator if denominator else 0.0))
    internal_max = max_internal_degree(g, state)
    degree_ok = None
    if pattern is not None and pattern.p >= 2:
        degree_ok = internal_max <= pattern.parts[1] - 1
    cross_floor = 1 - (state.classes + 1) ** 2 * epsilon
    return PartitionDiagnostics(
        epsilon=epsilon,
        internal_edge_ratio=ratio,
        size_deviations=deviations,
        cross_densities=tuple(cross),
        condition_iv_violations=condition_iv_violations(g, state),
        max_internal_degree=internal_max,
        internal_ok=ratio <= epsilon,
        sizes_ok=all(d <= math.sqrt(2 * epsilon) * n for d in deviations),
        cross_ok=all(density >= cross_floor for _, _, density in cross),
        internal_degree_ok=degree_ok
    )


def turan_bound(g):
    """ ``ceil(n / (1 + average degree))`` """
    if not g.order:
        return 0
    average = Fraction(2 * g.edge_count(), g.order)
    return int(math.ceil(Fraction(g.order) / (1 + average)))


def turan_independent_set(g):
    """
    Greedy independent set: take a vertex of minimum degree in what is
    left (lowest index on ties), drop it and its neighbours, repeat.

    :returns VertexSet: Independent, of size at least :func:`turan_bound`.
    """
    remaining = full_mask(g.order)
    chosen = 0
    while remaining:
        v = min(iter_bits(remaining), key=lambda u: popcount(g.rows[u] & remaining))
        chosen |= 1 << v
        remaining &= ~(g.rows[v] | (1 << v))
    return VertexSet.from_mask(g.order, chosen)


def count_cliques(g, p):
    """
    Number of ``p``-cliques, by pivoting.

    Every branch of the pivot tree ends with ``held`` vertices that are in
    every clique of the branch and ``pivots`` that are free to choose, and
    contributes ``C(pivots, p - held)``.

    :raises InputError: ``p < 1``.
    """
    if not is_count(p) or p < 1:
        raise InputError("Not a valid clique size 'p':{!r}".format(p))
    rows = g.rows
    total = [0]

    def walk(candidates, held, pivots):
        if held > p:
            return
        if not candidates:
            if held <= p <= held + pivots:
                total[0] += math.comb(pivots, p - held)
            return
        pivot = max(iter_bits(candidates), key=lambda u: popcount(candidates & rows[u]))
        walk(candidates & rows[pivot], held, pivots + 1)
        remaining = candidates & ~(1 << pivot)
        for v in iter_bits(candidates & ~rows[pivot] & ~(1 << pivot)):
            walk(remaining & rows[v], held + 1, pivots)
            remaining &= ~(1 << v)

    walk(full_mask(g.order), 0, 0)
    return total[0]


def degree_peel(g, threshold):
    """
    Split by degree.

    :returns tuple: ``(high, low)`` with ``high`` the vertices of degree
        above ``threshold`` and ``low`` the rest.
    """
    high = VertexSet(g.order, [v for v, d in enumerate(g.degrees()) if d > threshold])
    return high, high.complement()


def attach_low_vertices(g, low, parts, a2):
    """
    Put each low vertex into the first part ``T_i`` where it has at most
    ``a2 - 1`` neighbours.

    Degrees are taken into the original parts, not the growing ones.

    :param VertexSet low: Vertices to attach.
    :param list parts: Disjoint :class:`VertexSet` parts of ``g``.
    :param int a2: Second part size of the forbidden pattern.
    :returns tuple: ``(parts, attached, unattached)``; ``attached`` lists
        ``(vertex, part)`` pairs in vertex order.
    """
    masks = [part.mask for part in parts]
    attached = []
    unattached = []
    for v in low:
        for i, part in enumerate(parts):
            if popcount(g.rows[v] & part.mask) <= a2 - 1:
                masks[i] |= 1 << v
                attached.append((v, i))
                break
        else:
            unattached.append(v)
    return (
        tuple(VertexSet.from_mask(g.order, mask) for mask in masks),
        tuple(attached),
        VertexSet(g.order, unattached)
    )


def peel_and_partition(g, threshold, classes, a2, seed=None):
    """
    Peel by degree, refine a partition of the high-degree part, then
    attach low-degree vertices.

    :returns PeelReport: ``state`` is the partition of ``G[high]`` under
        its own relabelling; ``parts`` are vertex sets of ``g``.
    """
    high, low = degree_peel(g, threshold)
    state = refine_partition(induced(g, high), classes, seed)
    kept = high.to_list()
    masks = [0] * classes
    for index, part in enumerate(state.assignment):
        masks[part] |= 1 << kept[index]
    parts = [VertexSet.from_mask(g.order, mask) for mask in masks]
    parts, attached, unattached = attach_low_vertices(g, low, parts, a2)
    LOGGER.debug(
        'Peel at %d: %d high, %d attached, %d unattached',
        threshold, len(high), len(attached), len(unattached)
    )
    return PeelReport(threshold, high, low, state, parts, attached, unattached)


class _BlowupSearch(object):
    """ Backtracking for ``r`` independent ``t``-sets, pairwise complete """

    def __init__(self, g, r, t, budget):
        self._rows = g.rows
        self._r = r
        self._t = t
        self._budget = budget
        self.nodes = 0
        self.images = []

    def run(self, order):
        return self._part(full_mask(order), -1)

    def _part(self, common, previous_first):
        if len(self.images) == self._r:
            return True
        if popcount(common) < (self._r - len(self.images)) * self._t:
            return False
        pool = common & ~full_mask(previous_first + 1)
        return self._pick(pool, common, [])

    def _pick(self, pool, common, part):
        if len(part) == self._t:
            self.images.append(part)
            if self._part(common, part[0]):
                return True
            self.images.pop()
            return False
        for v in iter_bits(pool):
            self.nodes += 1
            if self.nodes > self._budget:
                raise _BudgetExhausted()
            after = pool & ~self._rows[v] & ~full_mask(v + 1)
            if popcount(after) < self._t - len(part) - 1:
                continue
            if self._pick(after, common & self._rows[v], part + [v]):
                return True
        return False


class _BudgetExhausted(Exception):
    pass


def find_induced_blowup(g, r, t, budget=BLOWUP_BUDGET):
    """
    Search an induced ``K_r(t)``: ``r`` disjoint independent sets of size
    ``t``, every cross pair adjacent.

    :param int budget: Maximum number of search nodes.
    :returns BlowupResult: ``FOUND`` with a verified embedding, ``ABSENT``
        when the search completed, ``INCONCLUSIVE`` when the budget ran out.
    :raises InputError: ``r < 1``, ``t < 1`` or ``r * t > order``.
    """
    for name, value in (('r', r), ('t', t)):
        if not is_count(value) or value < 1:
            raise InputError("Not a valid '{}':{!r}".format(name, value))
    if r * t > g.order:
        raise InputError("r * t = {} exceeds the order {}".format(r * t, g.order))
    search = _BlowupSearch(g, r, t, budget)
    try:
        found = search.run(g.order)
    except _BudgetExhausted:
        return BlowupResult(Outcome.INCONCLUSIVE, None, search.nodes)
    if not found:
        return BlowupResult(Outcome.ABSENT, None, search.nodes)
    return BlowupResult(
        Outcome.FOUND,
        Embedding(MultipartitePattern([t] * r), search.images),
        search.nodes
    )
