"""Maximal order types of well partial orders.

Thin Python layer over the C++ core. Expressions use the same syntax as the
``otype`` command line tool::

    >>> import otype
    >>> str(otype.eval("ord(w+1) . antichain(2)"))
    'w*2+2'
"""

from ._core import (
    DeltaMK,
    FinitePoset,
    Ordinal,
    WpoTerm,
    count_linear_extensions,
    delta_mk,
    is_cut,
    linear_extensions,
    max_count,
    maximal_elements,
    nat_prod,
    nat_sum,
    o_of,
    proof_trace,
    proof_trace_o,
    run_suite,
    split_delta_m,
    validate_witness,
    vialard,
    vialard_expanded,
    witness_product_antichain,
)


def eval(expr):  # noqa: A001 - mirrors the CLI subcommand
    """o(expr) for an expression string."""
    return o_of(WpoTerm.parse(expr))


def decompose(expr):
    """(delta, m, k) for an expression string."""
    return delta_mk(WpoTerm.parse(expr))


__all__ = [
    "DeltaMK",
    "FinitePoset",
    "Ordinal",
    "WpoTerm",
    "count_linear_extensions",
    "decompose",
    "delta_mk",
    "eval",
    "is_cut",
    "linear_extensions",
    "max_count",
    "maximal_elements",
    "nat_prod",
    "nat_sum",
    "o_of",
    "proof_trace",
    "proof_trace_o",
    "run_suite",
    "split_delta_m",
    "validate_witness",
    "vialard",
    "vialard_expanded",
    "witness_product_antichain",
]
