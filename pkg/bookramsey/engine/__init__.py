from .canonical import canonical_code, canonical_graph, is_isomorphic
from .enumeration import (
    ENUMERATION_CAP,
    ComplementBookFree,
    Conjunction,
    Hereditary,
    PatternFree,
    count_graphs,
    enumerate_graphs,
    first_graph
)
from .formulas import (
    FORMULAS,
    burr_lower,
    chvatal_value,
    conjecture_upper,
    conjecture_violated,
    corollary_value,
    eq3_lower,
    eq3_relaxed_lower,
    evaluate,
    nr_books_value,
    parsons_value,
    thm_value
)
from .ramsey import (
    arrows,
    find_counterexample,
    goodness_report,
    ramsey_exact,
    verify_witness
)
