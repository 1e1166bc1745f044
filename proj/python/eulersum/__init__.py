"""Harmonic-sum combinatorics, Euler-sum evaluation and identity verification."""

from ._eulersum import (  # noqa: F401
    __version__,
    alt_harmonic,
    alt_zeta,
    bell_Y,
    euler_gamma,
    eval_sum,
    harmonic,
    list_identities,
    polylog,
    stirling_first,
    verify,
    verify_all,
    zeta,
)

__all__ = [
    "__version__",
    "alt_harmonic",
    "alt_zeta",
    "bell_Y",
    "euler_gamma",
    "eval_sum",
    "harmonic",
    "list_identities",
    "polylog",
    "stirling_first",
    "verify",
    "verify_all",
    "zeta",
]
