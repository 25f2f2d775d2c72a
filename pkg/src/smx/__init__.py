"""Exact arithmetic for block-partitioned rational matrices and their unions."""

from . import errors
from .algebra import (
    ProductWitness,
    add,
    gram,
    scale,
    strict_eq,
    sub,
    super_mul,
    transpose,
    value_eq,
)
from .classify import (
    ClassReport,
    is_symmetric_super,
    shape_class,
    symmetry_class,
    union_class,
    union_shape,
)
from .core import (
    DenseMatrix,
    Partition,
    Rational,
    SuperMatrix,
    as_rational,
    block,
    flatten,
    grid_shape,
    make_partition,
    make_super,
    strips,
)
from .textio import format, parse, parse_scalar  # noqa: A004  format mirrors parse
from .union import (
    SuperNMatrix,
    improper_pair,
    is_proper,
    is_semi_super,
    make_union,
    union_add,
    union_flatten,
    union_gram,
    union_mul,
    union_scale,
    union_strict_eq,
    union_sub,
    union_transpose,
    union_value_eq,
)

__all__ = [
    "errors",
    "Rational",
    "as_rational",
    "Partition",
    "make_partition",
    "DenseMatrix",
    "SuperMatrix",
    "make_super",
    "grid_shape",
    "block",
    "flatten",
    "strips",
    "ProductWitness",
    "value_eq",
    "strict_eq",
    "add",
    "sub",
    "scale",
    "transpose",
    "super_mul",
    "gram",
    "SuperNMatrix",
    "make_union",
    "improper_pair",
    "is_proper",
    "is_semi_super",
    "union_add",
    "union_sub",
    "union_scale",
    "union_transpose",
    "union_mul",
    "union_gram",
    "union_flatten",
    "union_value_eq",
    "union_strict_eq",
    "ClassReport",
    "shape_class",
    "is_symmetric_super",
    "symmetry_class",
    "union_shape",
    "union_class",
    "parse",
    "format",
    "parse_scalar",
]
