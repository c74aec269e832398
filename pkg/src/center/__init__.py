"""Central generators of H_lambda and the presentation of its center."""

from .generators import (
    CentralGenerators,
    big_generator_t1,
    c_generator,
    central_character,
    central_generators,
    delta_identity_report,
    delta_kernel_check,
    is_central,
    quadratic_generator,
    verify_presentation,
    y_generator,
    zero_shift_search,
)
from .products import ordered_product_big, reversed_product_report, t1_product_claim, xi_set, y_zeta, y_zeta_closed_form

__all__ = [
    "CentralGenerators",
    "big_generator_t1",
    "c_generator",
    "central_character",
    "central_generators",
    "delta_identity_report",
    "delta_kernel_check",
    "is_central",
    "ordered_product_big",
    "quadratic_generator",
    "reversed_product_report",
    "t1_product_claim",
    "verify_presentation",
    "xi_set",
    "y_generator",
    "y_zeta",
    "y_zeta_closed_form",
    "zero_shift_search",
]
