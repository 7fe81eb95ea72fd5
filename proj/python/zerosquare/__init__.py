"""Exact zero-square matrix tools.

Decides T^2 = 0 over the integers, prime fields and Z_2[X,Y]/(X^2,Y^2),
constructs similarity certificates (r, U) with T*U = U*(r*E_1n) for
n in {2, 3} over Bezout domains, and produces rank obstructions for n >= 4.
"""

from ._core import (
    Error,
    check,
    counterexample,
    gcd_list,
    generate,
    is_zero_square,
    normalize,
    obstruction,
    oracle_summary,
    verify,
    xgcd,
    __version__,
)

__all__ = [
    "Error",
    "check",
    "counterexample",
    "gcd_list",
    "generate",
    "is_zero_square",
    "normalize",
    "obstruction",
    "oracle_summary",
    "verify",
    "xgcd",
    "__version__",
]
