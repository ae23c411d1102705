"""Deodhar polynomials, decomposition multiplicities and Kazhdan-Lusztig
polynomials of finite Weyl groups.

Elements are tuples of 1-based generator indices; polynomials are
``{exponent: coefficient}`` dicts (in q for Q, S, P and in t for the tilde
tables, with q = t^2).
"""

from ._kldecomp import (
    CacheCorruption,
    CartanError,
    ConsistencyError,
    ContractViolation,
    Error,
    OverflowError,
    System,
    WordError,
    __version__,
)

__all__ = [
    "CacheCorruption",
    "CartanError",
    "ConsistencyError",
    "ContractViolation",
    "Error",
    "OverflowError",
    "System",
    "WordError",
    "kl_polynomials",
    "__version__",
]


def kl_polynomials(cartan, policy="lexmin"):
    """All P_{w,v} as a dict keyed by (w, v)."""
    system = System(cartan, policy)
    return {(w, v): poly for w in system.elements() for v, poly in system.row("P", w).items()}
