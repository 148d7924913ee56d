"""Hereditarily binary numbers: arithmetic on tree-shaped numerals.

Numbers are stored as nested run-length blocks of bijective base-2 digits,
so towers of exponents and other sparse giants stay small while ordinary
numbers cost about as much as a binary string.

>>> from hbn import term, value, mul, exp2
>>> value(mul(term(6), term(7)))
42
>>> exp2(exp2(term(5)))
V (V (W E []) []) []
"""

from .arith import (
    Ordering,
    ShiftView,
    absdif,
    add,
    best_case,
    bitsize,
    compare,
    div_and_rem,
    divide,
    double,
    exp2,
    half,
    ilog2,
    isqrt,
    iterated,
    leftshift_by,
    max2,
    min2,
    min_max_absdif,
    mul,
    power,
    remainder,
    rightshift_by,
    square,
    sub,
    to_shift_view,
    tsize,
    worse_case,
)
from .catalog import (
    Dag,
    DagStats,
    catalog_constants,
    dag_fold,
    dag_stats,
    dag_to_dot,
    fermat,
    mersenne,
    perfect,
    unfold,
)
from .collatz import TraceEntry, collatz_step, collatz_trace, nsyr, syracuse, tl, trace_to_csv
from .convert import (
    ExpansionTooLarge,
    RefNat,
    from_reference,
    parse_decimal,
    print_decimal,
    term,
    to_reference,
    value,
)
from .core import (
    E,
    V,
    W,
    DomainError,
    HbnError,
    Parity,
    Term,
    TermSyntaxError,
    apply_i,
    apply_o,
    dual,
    format_term,
    parity,
    parse_term,
    predecessor,
    successor,
    unapply_i,
    unapply_o,
)
from .oracle import conformance_sweep, simple_add, simple_sub

__version__ = "0.1.0"
