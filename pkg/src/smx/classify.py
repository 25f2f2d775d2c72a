"""Shape and symmetry taxonomy.

Single supermatrices fall into four shapes by which axes carry cuts. Unions
get a collective label: vector families first (components cut along one
axis only), then uniform or mixed square/rectangular families. A union is
symmetric when every component is, quasi symmetric when at least one is.

Symmetry here is stricter than entry symmetry: the matrix must be square,
the two partitions must coincide, and entries must mirror. A square matrix
with mirrored entries but different row and column cuts is not symmetric as
a supermatrix.
"""

from dataclasses import dataclass

from .union import improper_pair, is_semi_super

SIMPLE = "simple"
ROW_SUPERVECTOR = "row_supervector"
COLUMN_SUPERVECTOR = "column_supervector"
GENERAL_SUPER = "general_super"

ROW_N_VECTOR = "row_n_vector"
COLUMN_N_VECTOR = "column_n_vector"
SPECIAL_ROW_N_VECTOR = "special_row_n_vector"
SPECIAL_COLUMN_N_VECTOR = "special_column_n_vector"
MIXED_SQUARE = "mixed_square"
MIXED_RECTANGULAR = "mixed_rectangular"
MIXED = "mixed"

SYMMETRIC = "symmetric"
QUASI_SYMMETRIC = "quasi_symmetric"
NONE = "none"


@dataclass(frozen=True)
class ClassReport:
    arity: int
    component_shapes: tuple
    union_shape: str
    symmetry: str
    semi_super: bool
    proper: bool

    def to_dict(self):
        return {
            "arity": self.arity,
            "component_shapes": list(self.component_shapes),
            "union_shape": self.union_shape,
            "symmetry": self.symmetry,
            "semi_super": self.semi_super,
            "proper": self.proper,
        }


def shape_class(s):
    has_row = not s.row_partition.is_trivial
    has_col = not s.col_partition.is_trivial
    if not has_row and not has_col:
        return SIMPLE
    if has_col and not has_row:
        return ROW_SUPERVECTOR
    if has_row and not has_col:
        return COLUMN_SUPERVECTOR
    return GENERAL_SUPER


def is_symmetric_super(s):
    if s.rows != s.cols:
        return False
    if s.row_partition != s.col_partition:
        return False
    return all(
        s.data.at(i, j) == s.data.at(j, i) for i in range(s.rows) for j in range(i + 1, s.cols)
    )


def symmetry_class(u):
    flags = [is_symmetric_super(c) for c in u.components]
    if all(flags):
        return SYMMETRIC
    if any(flags):
        return QUASI_SYMMETRIC
    return NONE


def union_shape(u):
    comps = u.components
    any_cut = any(c.row_cuts or c.col_cuts for c in comps)
    # Vector families: every cut lies along a single axis across the union.
    if any_cut and not any(c.row_cuts for c in comps):
        if all(c.rows == 1 for c in comps):
            return ROW_N_VECTOR
        if all(c.cols > c.rows for c in comps):
            return SPECIAL_ROW_N_VECTOR
        return ROW_N_VECTOR
    if any_cut and not any(c.col_cuts for c in comps):
        if all(c.cols == 1 for c in comps):
            return COLUMN_N_VECTOR
        if all(c.rows > c.cols for c in comps):
            return SPECIAL_COLUMN_N_VECTOR
        return COLUMN_N_VECTOR
    if all(c.rows == c.cols for c in comps):
        orders = {c.rows for c in comps}
        if len(orders) == 1:
            return f"square({orders.pop()})"
        return MIXED_SQUARE
    if all(c.rows != c.cols for c in comps):
        dims = {(c.rows, c.cols) for c in comps}
        if len(dims) == 1:
            m, t = dims.pop()
            return f"rectangular({m},{t})"
        return MIXED_RECTANGULAR
    return MIXED


def union_class(u):
    return ClassReport(
        arity=u.arity,
        component_shapes=tuple(shape_class(c) for c in u.components),
        union_shape=union_shape(u),
        symmetry=symmetry_class(u),
        semi_super=is_semi_super(u),
        proper=improper_pair(u) is None,
    )
