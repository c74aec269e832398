"""Integer-exact triangles, partition polynomials and sequence identities."""

from .partitions import (
    PartitionPoly,
    clique_coefficient,
    delta_lambda_triangle,
    delta_power_from_f_sequence,
    delta_power_from_triangle,
    delta_triangle,
    evaluate_f_poly,
    evaluate_triangle_entry,
    f_sequence,
    f_sequence_closed_form,
    homogenize,
    mod_p_bridge,
    reduce_mod,
    triangles_equal,
)
from .sequences import known_sequences, sequence_registry, tangent_reduced
from .triangles import (
    Triangle,
    andre_triangle,
    generalized_triangles,
    integer_delta_power,
    mod_p_collapse,
    quadratic_recursion_check,
    triangle_matches_oracle,
    weighted_factorial_identity,
    weighted_row_sums,
)

__all__ = [
    "PartitionPoly",
    "Triangle",
    "andre_triangle",
    "clique_coefficient",
    "delta_lambda_triangle",
    "delta_power_from_f_sequence",
    "delta_power_from_triangle",
    "delta_triangle",
    "evaluate_f_poly",
    "evaluate_triangle_entry",
    "f_sequence",
    "f_sequence_closed_form",
    "generalized_triangles",
    "homogenize",
    "integer_delta_power",
    "known_sequences",
    "mod_p_bridge",
    "mod_p_collapse",
    "quadratic_recursion_check",
    "reduce_mod",
    "sequence_registry",
    "tangent_reduced",
    "triangle_matches_oracle",
    "triangles_equal",
    "weighted_factorial_identity",
    "weighted_row_sums",
]
