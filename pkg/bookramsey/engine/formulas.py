"""

******************
Closed-form values
******************

Exact integer evaluation of the known bounds and values of
``r(K_p(a_1, ..., a_p), B_{k,n})`` and its relatives. Nothing here
searches; every function is plain integer arithmetic.

"""

import collections
from ..constructions import is_prime, make_multipartite, section2_clique_count
from ..entities.graph import is_count
from ..entities.patterns import MultipartitePattern
from ..entities.records import BoundMethod
from ..exceptions import InputError, UnsupportedParameterError
from ..freeness import chromatic_info


FormulaValue = collections.namedtuple('FormulaValue', ['value', 'note'])


def _check(name, value, minimum):
    if not is_count(value) or value < minimum:
        raise InputError("Not a valid '{}':{!r}, expected >= {}".format(name, value, minimum))


def burr_lower(h1, n):
    """
    ``(chi(h1) - 1)(n - 1) + s(h1)``, the lower bound for every connected
    ``h2`` of order ``n``.

    :param Graph h1: Graph of order at most 16.
    :param int n: ``n >= s(h1)``.
    :raises InputError: ``n < s(h1)``.
    :raises CapacityError: From :func:`chromatic_info`.
    """
    info = chromatic_info(h1)
    if n < info.surplus:
        raise InputError("n={} is below the chromatic surplus {}".format(n, info.surplus))
    return (info.chi - 1) * (n - 1) + info.surplus


def chvatal_value(p, n):
    """ ``r(K_p, T_n) = (p - 1)(n - 1) + 1`` for every tree ``T_n`` """
    _check('p', p, 2)
    _check('n', n, 1)
    return (p - 1) * (n - 1) + 1


def eq3_lower(p, a2, k, n):
    """
    Lower bound certified by the clique-copy witness:
    ``(p - 1)(floor((n - k - 1) / a2) + k) a2 + 1``.
    """
    _check('p', p, 2)
    return (p - 1) * section2_clique_count(a2, k, n) * a2 + 1


def eq3_relaxed_lower(p, a2, k, n):
    """ Floor-free form ``(p - 1)(n - 1) + (p - 1)(k - 1)(a2 - 1) + 1`` """
    _check('p', p, 2)
    section2_clique_count(a2, k, n)
    return (p - 1) * (n - 1) + (p - 1) * (k - 1) * (a2 - 1) + 1


def thm_value(p, a2, k, n):
    """
    Upper bound ``(p - 1)(n - 1) + k(p - 1)(a2 - 1) + 1`` for large ``n``,
    tight when ``a2`` divides ``n - 1 - k``.

    :returns tuple: ``(value, divisibility_holds)``.
    """
    _check('p', p, 2)
    section2_clique_count(a2, k, n)
    value = (p - 1) * (n - 1) + k * (p - 1) * (a2 - 1) + 1
    divisible = (n - 1 - k) % a2 == 0
    if divisible:
        assert value == eq3_lower(p, a2, k, n)
    return value, divisible


def conjecture_upper(p, a2, n):
    """
    ``(p - 1)(n - 1) + (a2 - 1) + 1``: what the Dirac-type conjecture would
    give for ``a1 = 1``, using ``d_k(n, K_{1,a2}) <= a2 - 1``.
    """
    _check('p', p, 2)
    _check('a2', a2, 1)
    _check('n', n, 1)
    return (p - 1) * (n - 1) + a2


def conjecture_violated(p, a2, k, n):
    """ ``True`` when the witness bound exceeds :func:`conjecture_upper` """
    return eq3_lower(p, a2, k, n) > conjecture_upper(p, a2, n)


def nr_books_value(p, n):
    """ Goodness value ``(p - 1)(n - 1) + 1`` of large books """
    return chvatal_value(p, n)


def corollary_value(p, n):
    """ Goodness value ``(p - 1)(n - 1) + 1`` for ``K_p(1, 1, b, ..., b)`` """
    return chvatal_value(p, n)


def is_prime_power(q):
    if q < 2:
        return False
    base = next(f for f in range(2, q + 1) if q % f == 0)
    while q % base == 0:
        q //= base
    return q == 1 and is_prime(base)


def parsons_value(q):
    """
    ``r(C4, K_{1,q^2+1}) = q^2 + q + 2``.

    :raises UnsupportedParameterError: ``q`` is not a prime power.
    """
    if not is_count(q) or not is_prime_power(q):
        raise UnsupportedParameterError("q must be a prime power, got {!r}".format(q))
    return q * q + q + 2


def _burr_for_pattern(parts, n):
    return burr_lower(make_multipartite(MultipartitePattern(parts)), n)


def evaluate(name, params):
    """
    Evaluate a formula by name.

    :param str name: One of :data:`FORMULAS`.
    :param dict params: Keyword arguments; ``h1`` is a part size list.
    :returns FormulaValue: The value and an optional note.
    :raises InputError: Unknown name or missing parameter.
    """
    if name not in FORMULAS:
        raise InputError("Unknown formula {!r}, expected one of {}".format(name, sorted(FORMULAS)))
    func, keys = FORMULAS[name]
    missing = [key for key in keys if params.get(key) is None]
    if missing:
        raise InputError("Formula {!r} needs {}".format(name, ', '.join('--' + k for k in missing)))
    args = [params[key] for key in keys]
    if name in ('thm14', 'thm15'):
        value, divisible = func(*args)
        note = 'divisible={}'.format(str(divisible).lower())
        if name == 'thm15':
            note += ' method={}'.format(BoundMethod.THM15)
        return FormulaValue(value, note)
    if name == 'conjecture':
        p, a2, k, n = args
        return FormulaValue(
            conjecture_upper(p, a2, n),
            'eq3={} violated={}'.format(
                eq3_lower(p, a2, k, n), str(conjecture_violated(p, a2, k, n)).lower()
            )
        )
    return FormulaValue(func(*args), None)


FORMULAS = collections.OrderedDict([
    ('burr', (_burr_for_pattern, ('h1', 'n'))),
    ('chvatal', (chvatal_value, ('p', 'n'))),
    ('eq3', (eq3_lower, ('p', 'a2', 'k', 'n'))),
    ('eq3-relaxed', (eq3_relaxed_lower, ('p', 'a2', 'k', 'n'))),
    ('thm14', (thm_value, ('p', 'a2', 'k', 'n'))),
    ('thm15', (thm_value, ('p', 'a2', 'k', 'n'))),
    ('nr-books', (nr_books_value, ('p', 'n'))),
    ('corollary', (corollary_value, ('p', 'n'))),
    ('parsons', (parsons_value, ('q',))),
    ('conjecture', (None, ('p', 'a2', 'k', 'n'))),
])
