from .graph6 import decode, graph6_decode, graph6_encode, sparse6_decode
from .cnf import CnfInstance, check_assignment, encode_arrowing_cnf
from .records import (
    RECORD_SCHEMAS,
    dk_result_record,
    dumps,
    goodness_report_record,
    partition_diagnostics_record,
    peel_report_record,
    ramsey_bound_record,
    validate_record,
    witness_certificate_record,
)
