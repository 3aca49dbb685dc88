"""Exact polynomial coefficient recovery with Worpitzky number triangles.

All scalars cross the boundary as ``fractions.Fraction`` (results) or as
``str`` / ``int`` / ``Fraction`` (arguments). Floats are rejected.
"""

from ._core import (
    DomainError,
    InconsistencyError,
    NotPolynomialError,
    OutOfRangeError,
    ParseError,
    SingularError,
    WorpitzkyError,
    ZeroDenominatorError,
    __version__,
    awnt,
    binomial,
    build_triangle,
    compose_affine,
    detect_degree,
    diagonal_direct,
    difference_table,
    efdt_sum,
    fit,
    mwnt,
    parse_scalar,
    solve_start_one,
    solve_start_zero,
    stirling2,
    vandermonde_fit,
)

__all__ = [
    "DomainError",
    "InconsistencyError",
    "NotPolynomialError",
    "OutOfRangeError",
    "ParseError",
    "SingularError",
    "WorpitzkyError",
    "ZeroDenominatorError",
    "__version__",
    "awnt",
    "binomial",
    "build_triangle",
    "compose_affine",
    "detect_degree",
    "diagonal_direct",
    "difference_table",
    "efdt_sum",
    "fit",
    "mwnt",
    "parse_scalar",
    "solve_start_one",
    "solve_start_zero",
    "stirling2",
    "vandermonde_fit",
]
