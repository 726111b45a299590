"""

************
JSON records
************

Every record is a flat JSON object with a ``schema`` field
``bookramsey/<record>/1``. Keys are sorted so identical inputs render to
identical bytes.

"""

import json
from ..exceptions import InputError
from .graph6 import graph6_encode


SCHEMA = 'bookramsey/{}/1'

RECORD_SCHEMAS = {
    'witness_certificate': (
        'order', 'graph6', 'h1', 'h2', 'h1_free', 'complement_book_free',
        'certified', 'certified_lower', 'violation'
    ),
    'ramsey_bound': (
        'h1', 'h2', 'lower', 'upper', 'exact', 'value', 'methods', 'witness_ref'
    ),
    'dk_result': (
        'n', 'k', 'pattern', 'value', 'witness', 'witness_order', 'low_degree_count'
    ),
    'partition_diagnostics': (
        'epsilon', 'internal_edge_ratio', 'size_deviations', 'cross_densities',
        'condition_iv_violations', 'max_internal_degree', 'internal_ok',
        'sizes_ok', 'cross_ok', 'internal_degree_ok'
    ),
    'peel_report': (
        'threshold', 'high', 'low', 'internal_edges', 'parts', 'attached',
        'unattached'
    ),
    'goodness_report': ('h1', 'h2', 'exact', 'burr', 'good'),
}


def _record(name, **fields):
    fields['schema'] = SCHEMA.format(name)
    return fields


def _embedding(embedding):
    if embedding is None:
        return None
    return {
        'pattern': str(embedding.pattern),
        'images': [list(image) for image in embedding.images]
    }


def witness_certificate_record(certificate):
    query = certificate.query
    return _record(
        'witness_certificate',
        order=certificate.graph.order,
        graph6=graph6_encode(certificate.graph),
        h1=str(query.h1),
        h2=str(query.h2),
        h1_free=certificate.h1_free,
        complement_book_free=certificate.complement_book_free,
        certified=certificate.certified,
        certified_lower=certificate.certified_lower,
        violation=_embedding(certificate.violation)
    )


def ramsey_bound_record(bound):
    return _record(
        'ramsey_bound',
        h1=str(bound.query.h1),
        h2=str(bound.query.h2),
        lower=bound.lower,
        upper=bound.upper,
        exact=bound.exact,
        value=bound.value,
        methods=list(bound.methods),
        witness_ref=bound.witness_ref
    )


def dk_result_record(result):
    return _record(
        'dk_result',
        n=result.query.n,
        k=result.query.k,
        pattern=str(result.query.pattern),
        value=result.value,
        witness=graph6_encode(result.witness),
        witness_order=result.witness.order,
        low_degree_count=result.low_degree_count
    )


def partition_diagnostics_record(diagnostics, state=None):
    """
    :param PartitionState state: When given, the assignment and part sizes
        are added to the record.
    """
    record = _record(
        'partition_diagnostics',
        epsilon=diagnostics.epsilon,
        internal_edge_ratio=diagnostics.internal_edge_ratio,
        size_deviations=list(diagnostics.size_deviations),
        cross_densities=[
            {'i': i, 'j': j, 'density': density}
            for i, j, density in diagnostics.cross_densities
        ],
        condition_iv_violations=diagnostics.condition_iv_violations,
        max_internal_degree=diagnostics.max_internal_degree,
        internal_ok=diagnostics.internal_ok,
        sizes_ok=diagnostics.sizes_ok,
        cross_ok=diagnostics.cross_ok,
        internal_degree_ok=diagnostics.internal_degree_ok
    )
    if state is not None:
        record['assignment'] = list(state.assignment)
        record['internal_edges'] = state.internal_edges
        record['part_sizes'] = list(state.part_sizes)
    return record


def peel_report_record(report):
    return _record(
        'peel_report',
        threshold=report.threshold,
        high=report.high.to_list(),
        low=report.low.to_list(),
        internal_edges=report.state.internal_edges,
        parts=[part.to_list() for part in report.parts],
        attached=[list(pair) for pair in report.attached],
        unattached=report.unattached.to_list()
    )


def goodness_report_record(report):
    return _record(
        'goodness_report',
        h1=str(report.query.h1),
        h2=str(report.query.h2),
        exact=report.exact,
        burr=report.burr,
        good=report.good
    )


def dumps(record):
    """ Deterministic JSON text of a record, newline terminated """
    return json.dumps(record, sort_keys=True) + '\n'


def validate_record(payload):
    """
    Check a parsed record against :data:`RECORD_SCHEMAS`.

    :param dict payload: Parsed JSON object.
    :returns str: The record name.
    :raises InputError: Unknown schema or missing keys.
    """
    if not isinstance(payload, dict):
        raise InputError("A record is a JSON object, not {}".format(type(payload)))
    schema = payload.get('schema')
    names = {SCHEMA.format(name): name for name in RECORD_SCHEMAS}
    if schema not in names:
        raise InputError("Unknown record schema {!r}".format(schema))
    name = names[schema]
    missing = [key for key in RECORD_SCHEMAS[name] if key not in payload]
    if missing:
        raise InputError("Record {} misses {}".format(schema, ', '.join(missing)))
    return name
