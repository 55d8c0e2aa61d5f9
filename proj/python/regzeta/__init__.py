"""Exact degrees, counts and regular representation zeta functions of
GL_n(o), GU_n(o), SL_n(o), SU_n(o), with brute-force finite-field
verification oracles.

All arithmetic is exact; big values come back as Python ints and
Fractions.
"""

from regzeta._core import (
    __version__,
    count,
    count_regular_elements,
    degree,
    degree_table,
    dirichlet_coeffs,
    ennola,
    iota,
    sum_of_squares,
    type_factor,
    types,
    verify_matrices,
    verify_self_dual,
    verify_types,
    w_coeffs,
    zeta,
    zeta_evaluate,
)

__all__ = [
    "__version__",
    "count",
    "count_regular_elements",
    "degree",
    "degree_table",
    "dirichlet_coeffs",
    "ennola",
    "iota",
    "sum_of_squares",
    "type_factor",
    "types",
    "verify_matrices",
    "verify_self_dual",
    "verify_types",
    "w_coeffs",
    "zeta",
    "zeta_evaluate",
]
