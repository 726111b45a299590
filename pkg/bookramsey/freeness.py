"""

****************************
Containment decision methods
****************************

Subgraph (not induced) containment of complete multipartite patterns and
books, C4-freeness, and the chromatic data ``chi(H)`` and ``s(H)``.

"""

from .entities.graph import check_capacity, full_mask, is_count, iter_bits, popcount
from .entities.patterns import (
    BookPattern,
    ChromaticInfo,
    Embedding,
    MultipartitePattern
)
from .exceptions import InputError


CHROMATIC_CAP = 16

C4 = MultipartitePattern((2, 2))


class _MultipartiteSearch(object):
    """
    Backtracking embedding of ``K_p(a_1, ..., a_p)``.

    Parts are placed in descending size, vertices ascending. ``common``
    is the set of unused vertices adjacent to every vertex placed so far.
    Consecutive parts of equal size start at increasing vertices.
    """

    def __init__(self, g, m):
        self._rows = g.rows
        self._sizes = sorted(m.parts, reverse=True)
        self._suffix = [sum(self._sizes[i:]) for i in range(len(self._sizes) + 1)]
        self._images = []

    def run(self, order):
        if self._place_part(0, full_mask(order), -1):
            return sorted(self._images, key=lambda image: (len(image), image))
        return None

    def _place_part(self, i, common, previous_first):
        if i == len(self._sizes):
            return True
        if popcount(common) < self._suffix[i]:
            return False
        pool = common
        if i and self._sizes[i] == self._sizes[i - 1]:
            pool &= ~full_mask(previous_first + 1)
        return self._pick(i, pool, common, [])

    def _pick(self, i, pool, common, part):
        size = self._sizes[i]
        if len(part) == size:
            self._images.append(part)
            if self._place_part(i + 1, common, part[0]):
                return True
            self._images.pop()
            return False
        if popcount(pool) < size - len(part):
            return False
        rest = self._suffix[i + 1]
        for v in iter_bits(pool):
            narrowed = common & self._rows[v]
            for u in part:
                narrowed &= ~(1 << u)
            if popcount(narrowed) < rest:
                continue
            after = pool & ~full_mask(v + 1)
            if self._pick(i, after, narrowed, part + [v]):
                return True
        return False


def find_multipartite(g, m):
    """
    First embedding of ``K_p(a_1, ..., a_p)`` as a subgraph of ``g``.

    :param Graph g: Host graph.
    :param MultipartitePattern m: Pattern.
    :returns: An :class:`Embedding` with one image per part, in the
        pattern's (ascending) part order, or ``None``.
    """
    if not isinstance(m, MultipartitePattern):
        raise InputError("Not a MultipartitePattern: {!r}".format(m))
    if m.total > g.order:
        return None
    images = _MultipartiteSearch(g, m).run(g.order)
    if images is None:
        return None
    return Embedding(m, images)


def contains_multipartite(g, m):
    return find_multipartite(g, m) is not None


def is_pattern_free(g, m):
    return find_multipartite(g, m) is None


def is_c4_free(g):
    return is_pattern_free(g, C4)


def iter_cliques(g, k, candidates=None):
    """
    Yield the ``k``-cliques of ``g`` as ascending vertex lists, in
    lexicographic order.

    :param int candidates: Optional mask restricting the vertices used.
    """
    rows = g.rows
    pool = full_mask(g.order) if candidates is None else candidates

    def extend(clique, pool):
        if len(clique) == k:
            yield list(clique)
            return
        if popcount(pool) < k - len(clique):
            return
        for v in iter_bits(pool):
            clique.append(v)
            for found in extend(clique, pool & rows[v] & ~full_mask(v + 1)):
                yield found
            clique.pop()

    return extend([], pool)


def _spine_common(g, clique):
    mask = full_mask(g.order)
    for v in clique:
        mask &= g.rows[v]
    return mask


def find_book(g, b):
    """
    First ``B_{k,n}`` in ``g``: the lexicographically least ``k``-clique
    with at least ``n - k`` common neighbours, and its lowest ``n - k``
    common neighbours as pages.

    :returns: An :class:`Embedding` ``(spine, pages)`` or ``None``.
    """
    if not isinstance(b, BookPattern):
        raise InputError("Not a BookPattern: {!r}".format(b))
    if b.total > g.order:
        return None
    for spine in iter_cliques(g, b.spine):
        common = _spine_common(g, spine)
        if popcount(common) >= b.pages:
            pages = list(iter_bits(common))[:b.pages]
            return Embedding(b, [spine, pages])
    return None


def contains_book(g, b):
    return find_book(g, b) is not None


def book_size(g, k):
    """
    Largest ``n`` such that ``g`` contains ``B_{k,n}``, counted as
    ``k + |common neighbours|`` over all ``k``-cliques.

    :returns int: ``0`` when ``g`` has no ``k``-clique.
    :raises InputError: ``k < 1``.
    """
    if not is_count(k) or k < 1:
        raise InputError("Not a valid spine size 'k':{!r}".format(k))
    best = 0
    for spine in iter_cliques(g, k):
        best = max(best, k + popcount(_spine_common(g, spine)))
    return best


class _Coloring(object):
    """ Proper colorings, color classes in smallest-index order """

    def __init__(self, h, colors):
        self._rows = h.rows
        self._order = h.order
        self._colors = colors
        self._classes = [0] * colors
        self._best = None

    def exists(self):
        return self._extend(0, 0, None)

    def min_class(self):
        """ Smallest color class over all proper colorings, ``None`` if none """
        self._best = None
        self._extend(0, 0, self._record)
        return self._best

    def _record(self):
        smallest = min(popcount(c) for c in self._classes)
        if self._best is None or smallest < self._best:
            self._best = smallest
        return self._best == 1

    def _extend(self, v, used, on_complete):
        if v == self._order:
            if used < self._colors:
                return False
            return on_complete() if on_complete else True
        if on_complete and self._best is not None and used == self._colors and \
                min(popcount(c) for c in self._classes) >= self._best:
            return False
        if self._colors - used > self._order - v:
            return False
        for color in range(min(used + 1, self._colors)):
            if self._classes[color] & self._rows[v]:
                continue
            self._classes[color] |= 1 << v
            stop = self._extend(v + 1, max(used, color + 1), on_complete)
            self._classes[color] &= ~(1 << v)
            if stop:
                return True
        return False


def chromatic_number(h):
    check_capacity(h.order, what='chromatic order', cap=CHROMATIC_CAP)
    for colors in range(1, h.order + 1):
        if _Coloring(h, colors).exists():
            return colors
    return 0


def chromatic_info(h):
    """
    ``chi(h)`` and the chromatic surplus ``s(h)``, the smallest color class
    over all proper ``chi``-colorings.

    :returns ChromaticInfo: ``(0, 0)`` for the order-0 graph.
    :raises CapacityError: Order above ``CHROMATIC_CAP``.
    """
    chi = chromatic_number(h)
    if not chi:
        return ChromaticInfo(0, 0)
    return ChromaticInfo(chi, _Coloring(h, chi).min_class())
