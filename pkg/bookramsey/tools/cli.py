#!/usr/bin/env python
"""
Ramsey goodness workbench for books B_{k,n} against multipartite K_p(a_1, ..., a_p).

Patterns are comma separated part sizes: ``--h1 1,2,2`` is K_3(1,2,2) and
``--h2 2,9`` is the book B_{2,9}. Graphs are read as graph6 or sparse6 text
and written as graph6.

Exit codes: 0 success, 1 verification failed or counterexample found,
2 usage or parse error, 3 capacity exceeded.
"""

import sys
import argparse
from bookramsey import BookRamsey
from bookramsey.codec.graph6 import decode, graph6_encode
from bookramsey.codec.records import (
    dk_result_record,
    dumps,
    partition_diagnostics_record,
    peel_report_record,
    ramsey_bound_record,
    witness_certificate_record
)
from bookramsey.constructions import (
    make_book,
    make_er_polarity,
    make_multipartite,
    make_section2_witness,
    make_star,
    make_turan
)
from bookramsey.engine.formulas import FORMULAS, evaluate
from bookramsey.entities import (
    BookPattern,
    DkQuery,
    MultipartitePattern,
    RamseyQuery,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph
)
from bookramsey.exceptions import (
    CapacityError,
    ConfigurationError,
    InputError
)
from bookramsey.freeness import find_book, find_multipartite, is_c4_free
from bookramsey.logger import get_logger


LOGGER = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

FAMILIES = (
    'book', 'star', 'multipartite', 'turan', 'section2', 'er',
    'cycle', 'path', 'empty', 'complete'
)


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise InputError(
            "Family {!r} needs {}".format(
                args.family, ', '.join('--' + n.replace('_', '-') for n in missing)
            )
        )
    return [getattr(args, name) for name in names]


def _construct_graph(args):
    family = args.family
    if family == 'book':
        return make_book(*_require(args, 'book'))
    if family == 'star':
        return make_star(*_require(args, 'leaves'))
    if family == 'multipartite':
        return make_multipartite(*_require(args, 'parts'))
    if family == 'turan':
        return make_turan(*_require(args, 'order', 'classes'))
    if family == 'section2':
        return make_section2_witness(*_require(args, 'p', 'a2', 'k', 'n'))
    if family == 'er':
        return make_er_polarity(*_require(args, 'q'))
    builders = {
        'cycle': cycle_graph,
        'path': path_graph,
        'empty': empty_graph,
        'complete': complete_graph
    }
    return builders[family](*_require(args, 'order'))


def _write(out, text):
    out.write(text if text.endswith('\n') else text + '\n')


def _construct(workbench, args, out):
    _write(out, graph6_encode(_construct_graph(args)))
    return EXIT_OK


def _check_free(workbench, args, out):
    g = decode(args.graph)
    if args.c4:
        free = is_c4_free(g)
        _write(out, 'C4: {}'.format('free' if free else 'contained'))
        return EXIT_OK if free else EXIT_FAILED
    if args.h1 is None and args.book is None:
        raise InputError('check-free needs --h1, --book or --c4')
    free = True
    checks = []
    if args.h1 is not None:
        checks.append((args.h1, find_multipartite(g, args.h1)))
    if args.book is not None:
        checks.append((args.book, find_book(g, args.book)))
    for pattern, embedding in checks:
        if embedding is None:
            _write(out, '{}: free'.format(pattern))
        else:
            free = False
            _write(out, '{}: contained at {}'.format(
                pattern, ' | '.join(','.join(str(v) for v in image) for image in embedding.images)
            ))
    return EXIT_OK if free else EXIT_FAILED


def _verify_witness(workbench, args, out):
    certificate = workbench.verify_witness(decode(args.graph), RamseyQuery(args.h1, args.h2))
    _write(out, dumps(witness_certificate_record(certificate)))
    return EXIT_OK if certificate.certified else EXIT_FAILED


def _ramsey_exact(workbench, args, out):
    bound = workbench.ramsey_exact(RamseyQuery(args.h1, args.h2), args.max_n)
    _write(out, dumps(ramsey_bound_record(bound)))
    return EXIT_OK if bound.exact else EXIT_FAILED


def _dk(workbench, args, out):
    result = workbench.dk(DkQuery(args.n, args.k, args.pattern))
    _write(out, dumps(dk_result_record(result)))
    return EXIT_OK


def _formula(workbench, args, out):
    params = {
        'p': args.p, 'a2': args.a2, 'k': args.k, 'n': args.n, 'q': args.q,
        'h1': args.h1.parts if args.h1 is not None else None
    }
    result = evaluate(args.name, params)
    _write(out, str(result.value))
    if result.note:
        _write(out, result.note)
    return EXIT_OK


def _partition(workbench, args, out):
    g = decode(args.graph)
    state = workbench.partition(g, args.classes, args.seed)
    diagnostics = workbench.diagnose(g, state, args.epsilon, args.h1)
    _write(out, dumps(partition_diagnostics_record(diagnostics, state)))
    return EXIT_OK


def _peel(workbench, args, out):
    report = workbench.peel(decode(args.graph), args.threshold, args.classes, args.a2, args.seed)
    _write(out, dumps(peel_report_record(report)))
    return EXIT_OK


def _export_cnf(workbench, args, out):
    out.write(workbench.export_cnf(args.order, RamseyQuery(args.h1, args.h2)).to_dimacs())
    return EXIT_OK


def _census(workbench, args, out):
    _write(out, str(workbench.census(args.order)))
    return EXIT_OK


def _add_query(parser):
    parser.add_argument(
        '--h1', dest='h1', type=MultipartitePattern.from_string, required=True,
        help='Part sizes of K_p(a_1, ..., a_p), e.g. 1,2,2'
    )
    parser.add_argument(
        '--h2', dest='h2', type=BookPattern.from_string, required=True,
        help='Book B_{k,n} as k,n, e.g. 2,9'
    )


def _add_graph(parser):
    parser.add_argument(
        '--graph', dest='graph', type=str, required=True,
        help='graph6 or sparse6 text'
    )


def _add_params(parser, names, required=False):
    helps = {
        'p': 'Number of parts p',
        'a2': 'Second part size a2',
        'k': 'Book spine size k',
        'n': 'Book order n',
        'q': 'Field order q',
        'order': 'Vertex count',
        'classes': 'Number of parts',
        'leaves': 'Star leaves',
        'threshold': 'Degree threshold',
        'seed': 'Seed of the initial random partition',
    }
    for name in names:
        parser.add_argument(
            '--{}'.format(name.replace('_', '-')), dest=name, type=int,
            required=required, default=None, help=helps[name]
        )


def parse_arguments(argv=None):
    """ Parse command line arguments """
    parser = argparse.ArgumentParser(
        description=__doc__,
        formatter_class=argparse.RawTextHelpFormatter,
        usage='python -m bookramsey.tools.cli [options] <command> ...'
    )
    parser.add_argument(
        '--config', dest='config', type=str, default=None,
        help='INI configuration file, absolute or relative path.'
    )
    parser.add_argument(
        '--profile', dest='profile', type=str, default='default',
        help='INI profile, section <profile>:bookramsey:search. Default: default'
    )
    commands = parser.add_subparsers(dest='command', metavar='<command>')
    commands.required = True

    construct = commands.add_parser('construct', help='Named graph family to graph6')
    construct.add_argument('--family', dest='family', choices=FAMILIES, required=True)
    construct.add_argument('--book', dest='book', type=BookPattern.from_string, help='k,n')
    construct.add_argument(
        '--parts', dest='parts', type=MultipartitePattern.from_string, help='a_1,...,a_p'
    )
    _add_params(construct, ('p', 'a2', 'k', 'n', 'q', 'order', 'classes', 'leaves'))
    construct.set_defaults(handler=_construct)

    check = commands.add_parser('check-free', help='Pattern containment verdict')
    _add_graph(check)
    check.add_argument('--h1', dest='h1', type=MultipartitePattern.from_string)
    check.add_argument('--book', dest='book', type=BookPattern.from_string)
    check.add_argument('--c4', dest='c4', action='store_true')
    check.set_defaults(handler=_check_free)

    verify = commands.add_parser('verify-witness', help='JSON witness certificate')
    _add_graph(verify)
    _add_query(verify)
    verify.set_defaults(handler=_verify_witness)

    exact = commands.add_parser('ramsey-exact', help='JSON exact Ramsey bound')
    _add_query(exact)
    exact.add_argument('--max-n', dest='max_n', type=int, required=True)
    exact.set_defaults(handler=_ramsey_exact)

    dk = commands.add_parser('dk', help='JSON d_k(n, H) result')
    _add_params(dk, ('n', 'k'), required=True)
    dk.add_argument('--pattern', dest='pattern', type=MultipartitePattern.from_string,
                    required=True, help='Forbidden H as part sizes')
    dk.set_defaults(handler=_dk)

    formula = commands.add_parser('formula', help='Closed form value')
    formula.add_argument('--name', dest='name', choices=list(FORMULAS), required=True)
    _add_params(formula, ('p', 'a2', 'k', 'n', 'q'))
    formula.add_argument('--h1', dest='h1', type=MultipartitePattern.from_string)
    formula.set_defaults(handler=_formula)

    partition = commands.add_parser('partition', help='JSON partition diagnostics')
    _add_graph(partition)
    _add_params(partition, ('classes',), required=True)
    _add_params(partition, ('seed',))
    partition.add_argument('--epsilon', dest='epsilon', type=float, default=None)
    partition.add_argument('--h1', dest='h1', type=MultipartitePattern.from_string)
    partition.set_defaults(handler=_partition)

    peel = commands.add_parser('peel', help='JSON degree peel report')
    _add_graph(peel)
    _add_params(peel, ('threshold', 'classes', 'a2'), required=True)
    _add_params(peel, ('seed',))
    peel.set_defaults(handler=_peel)

    cnf = commands.add_parser('export-cnf', help='DIMACS arrowing instance')
    _add_params(cnf, ('order',), required=True)
    _add_query(cnf)
    cnf.set_defaults(handler=_export_cnf)

    census = commands.add_parser('census', help='Number of graphs up to isomorphism')
    _add_params(census, ('order',), required=True)
    census.set_defaults(handler=_census)

    return parser.parse_args(argv)


def main(argv=None, logger=None, out=None):
    logger = logger or get_logger(__name__)
    out = sys.stdout if out is None else out
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return e.code
    try:
        if args.config is not None:
            workbench = BookRamsey.from_ini(args.profile, args.config)
        else:
            workbench = BookRamsey()
        return args.handler(workbench, args, out)
    except CapacityError as e:
        logger.error(e)
        return EXIT_CAPACITY
    except (ConfigurationError, InputError) as e:
        logger.error(e)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main(sys.argv[1:], logger=LOGGER))
