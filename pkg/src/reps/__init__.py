"""Verma modules, simple quotients and their matrix models."""

from .auxiliary import AuxiliaryRepresentation, aux_representation
from .irreducible import IrreducibilityReport, fixed_space, is_irreducible, spin
from .reduction import (
    LocusRow,
    bar_dimension,
    expected_simple_dimension,
    quotient_by_g_minus_one,
    reference_bar_dimension,
    structural_idempotent_check,
    sweep_loci,
)
from .simple import (
    MatrixRep,
    generator_choice,
    matrix_power,
    maximal_submodule_generator,
    no_fixed_low_degree,
    relation_suite,
    simple_module,
    verma_truncation,
)
from .singular import compare_with_quotient, singular_locus_matrices, tangent_values
from .verma import VermaModule, verma_act

__all__ = [
    "AuxiliaryRepresentation",
    "IrreducibilityReport",
    "LocusRow",
    "MatrixRep",
    "VermaModule",
    "aux_representation",
    "bar_dimension",
    "compare_with_quotient",
    "expected_simple_dimension",
    "fixed_space",
    "generator_choice",
    "is_irreducible",
    "matrix_power",
    "maximal_submodule_generator",
    "no_fixed_low_degree",
    "quotient_by_g_minus_one",
    "reference_bar_dimension",
    "relation_suite",
    "simple_module",
    "singular_locus_matrices",
    "spin",
    "structural_idempotent_check",
    "sweep_loci",
    "tangent_values",
    "verma_act",
    "verma_truncation",
]
