"""

*******************************
Forbidden and embedded patterns
*******************************

* ``MultipartitePattern``: part sizes of ``K_p(a_1, ..., a_p)``.
* ``BookPattern``: ``B_{k,n}``, ``n - k`` copies of ``K_{k+1}`` sharing a ``K_k``.
* ``Embedding``: images of a pattern inside a host graph.

"""

import collections
import itertools
import six
from ..exceptions import InputError, ParseError
from .graph import is_count


ChromaticInfo = collections.namedtuple('ChromaticInfo', ['chi', 'surplus'])


def _parse_counts(text, expected=None):
    """ Comma separated positive integers, e.g. ``1,2,2`` """
    if not isinstance(text, six.string_types):
        raise ParseError(0, 'pattern must be a string, not {}'.format(type(text)))
    values = []
    offset = 0
    for token in text.split(','):
        stripped = token.strip()
        if not stripped.isdigit():
            raise ParseError(offset, 'not a positive integer: {!r}'.format(token))
        values.append(int(stripped))
        offset += len(token) + 1
    if expected is not None and len(values) != expected:
        raise ParseError(
            0, 'expected {} comma separated values, got {}'.format(expected, len(values))
        )
    return values


# pylint: disable=attribute-defined-outside-init
class MultipartitePattern(object):
    """
    Complete p-partite pattern ``K_p(a_1, ..., a_p)``.

    Part sizes are stored sorted nondecreasing, whatever order they are
    given in.

    :param parts: Iterable of positive part sizes, at least one.
    :raises InputError: Empty pattern or non positive part.
    """

    def __init__(self, parts):
        self.parts = parts

    @classmethod
    def from_string(cls, text):
        """ ``1,2,2`` -> ``K_3(1,2,2)`` """
        return cls(_parse_counts(text))

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, list(self._parts))

    def __str__(self):
        return 'K_{}({})'.format(self.p, ','.join(str(a) for a in self._parts))

    def __eq__(self, other):
        if not isinstance(other, MultipartitePattern):
            return False
        return self._parts == other._parts

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self._parts)

    @property
    def parts(self):
        return self._parts

    @parts.setter
    def parts(self, parts):
        try:
            parts = tuple(parts)
        except TypeError:
            raise InputError("Not a valid part list: {!r}".format(parts))
        if not all(is_count(a) for a in parts):
            raise InputError("Not a valid part list: {!r}".format(parts))
        parts = tuple(sorted(parts))
        if not parts:
            raise InputError('A multipartite pattern needs at least one part')
        if parts[0] < 1:
            raise InputError("Part sizes must be positive: {!r}".format(parts))
        self._parts = parts

    @property
    def p(self):
        return len(self._parts)

    @property
    def total(self):
        return sum(self._parts)

    @property
    def edge_count(self):
        return (self.total ** 2 - sum(a * a for a in self._parts)) // 2


class BookPattern(object):
    """
    Book ``B_{k,n}``: a ``k`` vertex spine and ``n - k`` pages.

    :param int spine: ``k >= 1``.
    :param int total: ``n >= k + 1``.
    :raises InputError: In case of an invalid book.
    """

    def __init__(self, spine, total):
        self.spine = spine
        self.total = total

    @classmethod
    def from_string(cls, text):
        """ ``2,9`` -> ``B_{2,9}`` """
        spine, total = _parse_counts(text, expected=2)
        return cls(spine, total)

    def __repr__(self):
        return '{}({}, {})'.format(self.__class__.__name__, self._spine, self._total)

    def __str__(self):
        return 'B_{{{},{}}}'.format(self._spine, self._total)

    def __eq__(self, other):
        if not isinstance(other, BookPattern):
            return False
        return (self._spine, self._total) == (other.spine, other.total)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._spine, self._total))

    @property
    def spine(self):
        return self._spine

    @spine.setter
    def spine(self, spine):
        if not is_count(spine) or spine < 1:
            raise InputError("Not a valid book 'spine':{!r}".format(spine))
        self._spine = spine

    @property
    def total(self):
        return self._total

    @total.setter
    def total(self, total):
        if not is_count(total) or total <= self._spine:
            raise InputError(
                "Book total {!r} must exceed spine {}".format(total, self._spine)
            )
        self._total = total

    @property
    def pages(self):
        return self._total - self._spine


class Embedding(object):
    """
    Images of a pattern in a host graph.

    For a :class:`MultipartitePattern` there is one image per part, in the
    pattern's part order. For a :class:`BookPattern` the images are
    ``(spine, pages)``.

    :param pattern: The embedded pattern.
    :param images: Sequence of vertex sequences.
    """

    def __init__(self, pattern, images):
        self._pattern = pattern
        self._images = tuple(tuple(sorted(image)) for image in images)

    def __repr__(self):
        return '{}({}, {!r})'.format(
            self.__class__.__name__, self._pattern, self._images
        )

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return False
        return self._pattern == other.pattern and self._images == other.images

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._pattern, self._images))

    @property
    def pattern(self):
        return self._pattern

    @property
    def images(self):
        return self._images

    def vertices(self):
        return sorted(v for image in self._images for v in image)

    def verify(self, host, induced=False):
        """
        Re-verify the embedding against the host by direct adjacency scan.

        :param Graph host: The host graph.
        :param bool induced: Also require every multipartite part to be
            independent in the host.
        :returns bool: ``True`` when every required adjacency is present.
        """
        flat = self.vertices()
        if len(flat) != len(set(flat)):
            return False
        if any(not 0 <= v < host.order for v in flat):
            return False
        if isinstance(self._pattern, BookPattern):
            return self._verify_book(host)
        return self._verify_multipartite(host, induced)

    def _verify_book(self, host):
        if len(self._images) != 2:
            return False
        spine, pages = self._images
        if len(spine) != self._pattern.spine or len(pages) != self._pattern.pages:
            return False
        if any(not host.has_edge(u, v) for u, v in itertools.combinations(spine, 2)):
            return False
        return all(host.has_edge(u, w) for u in spine for w in pages)

    def _verify_multipartite(self, host, induced):
        sizes = tuple(len(image) for image in self._images)
        if sizes != self._pattern.parts:
            return False
        for first, second in itertools.combinations(self._images, 2):
            if any(not host.has_edge(u, v) for u in first for v in second):
                return False
        if induced:
            for image in self._images:
                if any(host.has_edge(u, v) for u, v in itertools.combinations(image, 2)):
                    return False
        return True
