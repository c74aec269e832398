"""The Ore extension H_lambda = R[y; delta] over R = kE[x]."""

from .context import AlgebraContext, binom_mod
from .delta import delta, delta_chain, delta_power, delta_quotient, divide_by_delta_g, divide_exact
from .element import HElement, evaluate_R, format_R
from .oracle import fold_word, oracle_normal_form, random_word
from .product import commutator, commutator_with_y, gr_leading, h_mul, h_pow, h_product

__all__ = [
    "AlgebraContext",
    "HElement",
    "binom_mod",
    "commutator",
    "commutator_with_y",
    "delta",
    "delta_chain",
    "delta_power",
    "delta_quotient",
    "divide_by_delta_g",
    "divide_exact",
    "evaluate_R",
    "fold_word",
    "format_R",
    "gr_leading",
    "h_mul",
    "h_pow",
    "h_product",
    "oracle_normal_form",
    "random_word",
]
