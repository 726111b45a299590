"""

****************
Canonical labels
****************

Individualization-refinement search for a canonical adjacency code.

The code of a labelling ``(v_0, ..., v_{n-1})`` is the upper triangle of
the relabelled adjacency matrix read column by column, first pair most
significant. The canonical code is the smallest code over the leaves of an
isomorphism-invariant search tree:

* every node refines its ordered partition to an equitable one,
* children individualize the vertices of the first non-singleton cell,
* children in one orbit of the automorphisms found so far that fix the
  node's individualized vertices are skipped,
* a leaf equivalent to the best leaf aborts the branch back to the level
  where both paths diverge.

"""

from ..entities.graph import Graph, full_mask, iter_bits, popcount


def refine(rows, cells):
    """
    Equitable refinement of an ordered partition.

    :param rows: Adjacency bit rows.
    :param list cells: Ordered partition as vertex masks.
    :returns list: Refined ordered partition; fragments of a cell are
        ordered by their neighbour count in the splitting cell.
    """
    cells = list(cells)
    queue = list(cells)
    while queue:
        if len(cells) == len(rows):
            break
        splitter = queue.pop(0)
        refined = []
        for cell in cells:
            if not cell & (cell - 1):
                refined.append(cell)
                continue
            buckets = {}
            for v in iter_bits(cell):
                count = popcount(rows[v] & splitter)
                buckets[count] = buckets.get(count, 0) | (1 << v)
            if len(buckets) == 1:
                refined.append(cell)
                continue
            fragments = [buckets[count] for count in sorted(buckets)]
            refined.extend(fragments)
            queue.extend(fragments)
        cells = refined
    return cells


def labelling_code(rows, labelling):
    """ Adjacency code of ``rows`` under the vertex order ``labelling`` """
    code = 0
    for j in range(1, len(labelling)):
        row = rows[labelling[j]]
        for i in range(j):
            code = (code << 1) | (row >> labelling[i] & 1)
    return code


def _orbit_roots(generators, order):
    parent = list(range(order))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for perm in generators:
        for v, image in enumerate(perm):
            a, b = find(v), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(order)]


class CanonicalSearch(object):
    """
    One canonical labelling computation.

    :param rows: Adjacency bit rows of the graph.
    :param list cells: Initial ordered partition (masks), invariant under
        the isomorphisms of interest; a singleton first cell roots the
        code at that vertex.
    """

    def __init__(self, rows, cells=None):
        self._rows = tuple(rows)
        self._order = len(self._rows)
        if cells is None:
            cells = [full_mask(self._order)] if self._order else []
        self._cells = [c for c in cells if c]
        self._best_code = None
        self._best_path = None
        self._best_labelling = None
        self._generators = []

    @property
    def generators(self):
        """ Automorphisms found during the search (``perm[v]`` image of ``v``) """
        return list(self._generators)

    def run(self):
        """
        :returns tuple: ``(code, labelling)``; ``labelling[i]`` is the vertex
            placed at position ``i``.
        """
        if not self._order:
            return 0, []
        self._search(self._cells, [])
        return self._best_code, list(self._best_labelling)

    def _search(self, cells, path):
        cells = refine(self._rows, cells)
        if len(cells) == self._order:
            return self._leaf(cells, path)
        index = next(i for i, c in enumerate(cells) if c & (c - 1))
        target = cells[index]
        depth = len(path)
        done = []
        for v in iter_bits(target):
            if done:
                fixing = [g for g in self._generators if all(g[u] == u for u in path)]
                roots = _orbit_roots(fixing, self._order)
                if any(roots[v] == roots[u] for u in done):
                    continue
            done.append(v)
            child = cells[:index] + [1 << v, target & ~(1 << v)] + cells[index + 1:]
            jump = self._search(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, cells, path):
        labelling = [c.bit_length() - 1 for c in cells]
        code = labelling_code(self._rows, labelling)
        if self._best_code is None or code < self._best_code:
            self._best_code = code
            self._best_path = list(path)
            self._best_labelling = labelling
            return None
        if code > self._best_code:
            return None
        perm = [0] * self._order
        for mine, theirs in zip(labelling, self._best_labelling):
            perm[mine] = theirs
        self._generators.append(tuple(perm))
        diverge = 0
        while diverge < len(path) and path[diverge] == self._best_path[diverge]:
            diverge += 1
        return diverge


def canonical_form(g):
    """ ``(code, labelling)`` of the graph """
    return CanonicalSearch(g.rows).run()


def canonical_code(g):
    """ Canonical code; equal for two graphs of one order iff isomorphic """
    return canonical_form(g)[0]


def certificate(g):
    return g.order, canonical_code(g)


def rooted_code(g, root):
    """ Canonical code of ``g`` with ``root`` placed first """
    rest = full_mask(g.order) & ~(1 << root)
    return CanonicalSearch(g.rows, [1 << root, rest]).run()[0]


def relabel(g, labelling):
    """ Graph whose vertex ``i`` is ``labelling[i]`` of ``g`` """
    position = [0] * g.order
    for i, v in enumerate(labelling):
        position[v] = i
    rows = []
    for v in labelling:
        row = 0
        for u in iter_bits(g.rows[v]):
            row |= 1 << position[u]
        rows.append(row)
    return Graph.from_rows(g.order, rows)


def canonical_graph(g):
    """ The canonically labelled copy of ``g`` """
    return relabel(g, canonical_form(g)[1])


def is_isomorphic(g1, g2):
    return certificate(g1) == certificate(g2)


def automorphism_orbits(g):
    """
    Orbits of ``Aut(g)`` as ascending vertex lists, ordered by first vertex.

    Two vertices share an orbit iff their rooted codes are equal.
    """
    orbits = {}
    for v in range(g.order):
        orbits.setdefault(rooted_code(g, v), []).append(v)
    return sorted(orbits.values())
