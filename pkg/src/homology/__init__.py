"""Free resolutions over H_lambda and the Ext groups they compute."""

from .ext import (
    ExtTable,
    cross_fiber_vanishing,
    euler_check,
    ext_between,
    ext_dims,
    hom_complex,
    in_copies,
    left_multiplication,
    reference_dims,
    singular_pair_condition,
    source_resolution,
    weyl_annihilator_check,
    weyl_ext,
)
from .matrices import HMatrix
from .resolutions import Resolution, build_resolution, check_composites, composite_report, t1_singular_variant_report

__all__ = [
    "ExtTable",
    "HMatrix",
    "Resolution",
    "build_resolution",
    "check_composites",
    "composite_report",
    "cross_fiber_vanishing",
    "euler_check",
    "ext_between",
    "ext_dims",
    "hom_complex",
    "in_copies",
    "left_multiplication",
    "reference_dims",
    "singular_pair_condition",
    "source_resolution",
    "t1_singular_variant_report",
    "weyl_annihilator_check",
    "weyl_ext",
]
