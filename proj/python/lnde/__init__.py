"""Locally nonlinear distributed evaluation: ANF tools, classical search, GHZ adder."""

from ._lnde import (
    InternalConsistency,
    InvalidInput,
    LndeError,
    ProtocolViolation,
    ResourceLimit,
    __version__,
    algebraic_degree,
    anf_to_truth_table,
    bus_xor,
    format_anf,
    ghz_budget,
    is_linear,
    moebius_transform,
    run_adder_statevector,
    run_quantum_adder,
    search_realizable,
    sum_digit_function,
    verify_lemma_bound,
)

__all__ = [
    "InternalConsistency",
    "InvalidInput",
    "LndeError",
    "ProtocolViolation",
    "ResourceLimit",
    "__version__",
    "algebraic_degree",
    "anf_to_truth_table",
    "bus_xor",
    "format_anf",
    "ghz_budget",
    "is_linear",
    "moebius_transform",
    "run_adder_statevector",
    "run_quantum_adder",
    "search_realizable",
    "sum_digit_function",
    "verify_lemma_bound",
]
