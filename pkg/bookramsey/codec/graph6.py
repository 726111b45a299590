"""

****************
graph6 / sparse6
****************

graph6 is written and read here, bit for bit: the size header ``N(n)``
followed by the upper triangle of the adjacency matrix, column by column,
six bits per printable byte (value ``+ 63``), zero padded.

sparse6 is read only, through ``networkx``.

"""

import networkx as nx
from ..entities.graph import CAPACITY, Graph, check_capacity
from ..exceptions import ParseError


HEADER = '>>graph6<<'
SPARSE6_HEADER = '>>sparse6<<'

_BIAS = 63
_LONG = 126


def _size_header(n):
    if n <= 62:
        return chr(_BIAS + n)
    if n <= 258047:
        return '~' + ''.join(chr(_BIAS + (n >> s & 63)) for s in (12, 6, 0))
    return '~~' + ''.join(chr(_BIAS + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g):
    """
    :param Graph g: The graph.
    :returns str: graph6 text without header or newline.
    """
    bits = []
    for j in range(1, g.order):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    data = []
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        data.append(chr(_BIAS + value))
    return _size_header(g.order) + ''.join(data)


def _strip(text, header):
    if isinstance(text, bytes):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError as e:
            raise ParseError(e.start, 'non ASCII byte')
    text = text.strip()
    skipped = 0
    if text.startswith(header):
        skipped = len(header)
        text = text[skipped:]
    return text, skipped


def _check_printable(text, base):
    for offset, char in enumerate(text):
        if not _BIAS <= ord(char) <= _LONG:
            raise ParseError(base + offset, 'byte {!r} outside 63..126'.format(char))


def _read_size(text, base):
    """ ``(n, header_length)`` of a size header """
    if not text:
        raise ParseError(base, 'missing size header')
    if ord(text[0]) != _LONG:
        return ord(text[0]) - _BIAS, 1
    if len(text) > 1 and ord(text[1]) == _LONG:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(text) < start + width:
        raise ParseError(base + len(text), 'truncated size header')
    n = 0
    for char in text[start:start + width]:
        n = (n << 6) | (ord(char) - _BIAS)
    return n, start + width


def graph6_decode(text):
    """
    :param str text: graph6 text, optionally with the ``>>graph6<<`` header
        and surrounding whitespace.
    :returns Graph: The decoded graph.
    :raises ParseError: Malformed header, wrong length or nonzero padding;
        the offset counts from the start of the stripped text.
    :raises CapacityError: Order above the vertex cap.
    """
    text, base = _strip(text, HEADER)
    _check_printable(text, base)
    n, used = _read_size(text, base)
    check_capacity(n, what='graph6 order', cap=CAPACITY)
    pairs = n * (n - 1) // 2
    expected = (pairs + 5) // 6
    data = text[used:]
    if len(data) != expected:
        raise ParseError(
            base + used + min(len(data), expected),
            'expected {} data bytes for order {}, got {}'.format(expected, n, len(data))
        )
    values = [ord(char) - _BIAS for char in data]
    padding = expected * 6 - pairs
    if padding and values[-1] & ((1 << padding) - 1):
        raise ParseError(base + used + expected - 1, 'nonzero padding bits')
    rows = [0] * n
    index = 0
    for j in range(1, n):
        for i in range(j):
            if values[index // 6] >> (5 - index % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index += 1
    return Graph.from_rows(n, rows)


def sparse6_decode(text):
    """
    :param str text: sparse6 text (leading ``:``), optionally with the
        ``>>sparse6<<`` header.
    :returns Graph: The decoded simple graph; repeated edges collapse.
    :raises ParseError: Malformed text or a self-loop.
    """
    text, base = _strip(text, SPARSE6_HEADER)
    if not text.startswith(':'):
        raise ParseError(base, "sparse6 text must start with ':'")
    _check_printable(text[1:], base + 1)
    n, _ = _read_size(text[1:], base + 1)
    check_capacity(n, what='sparse6 order', cap=CAPACITY)
    try:
        decoded = nx.from_sparse6_bytes(text.encode('ascii'))
    except (nx.NetworkXError, ValueError, TypeError, IndexError) as e:
        raise ParseError(base, str(e))
    rows = [0] * n
    for u, v in decoded.edges():
        if u == v:
            raise ParseError(base, 'self-loop at vertex {}'.format(u))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph.from_rows(n, rows)


def decode(text):
    """ graph6 or sparse6, told apart by the leading ``:`` of sparse6 """
    stripped = text.decode('ascii', 'replace') if isinstance(text, bytes) else text
    stripped = stripped.strip()
    if stripped.startswith(':') or stripped.startswith(SPARSE6_HEADER):
        return sparse6_decode(text)
    return graph6_decode(text)
