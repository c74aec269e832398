"""Finite field scalars."""

from .field import (
    FieldParams,
    FieldType,
    build_field,
    element_from_vector,
    element_to_vector,
    field_literal,
    field_ops,
    field_params,
    format_element,
    fq_generator,
    frobenius,
    inv,
    pth_root,
    scalar,
    sqrt,
    to_field,
)

__all__ = [
    "FieldParams",
    "FieldType",
    "build_field",
    "element_from_vector",
    "element_to_vector",
    "field_literal",
    "field_ops",
    "field_params",
    "format_element",
    "fq_generator",
    "frobenius",
    "inv",
    "pth_root",
    "scalar",
    "sqrt",
    "to_field",
]
