"""Exact simulation of two-party interactive quantum protocols.

Computes quantum information cost, quantum communication cost, and error of
protocols on classical input distributions, plus rectangle discrepancy and
generalized discrepancy bounds for tiny boolean functions.
"""

from ._qicsim import (
    Protocol,
    and_protocol,
    and_round_entropy,
    avg_error,
    binary_entropy,
    classical_and_protocol,
    disc,
    disj_protocol,
    dummy_protocol,
    gdm_delta,
    mu_star,
    parallel,
    qic_report,
    repeat,
    verify,
    worst_case_error,
    __version__,
)

__all__ = [
    "Protocol",
    "and_protocol",
    "and_round_entropy",
    "avg_error",
    "binary_entropy",
    "classical_and_protocol",
    "disc",
    "disj_protocol",
    "dummy_protocol",
    "gdm_delta",
    "mu_star",
    "parallel",
    "qic_report",
    "repeat",
    "verify",
    "worst_case_error",
    "__version__",
]
