"""Arithmetic on supermatrices.

Addition wants identical shape and identical partitions; the sum keeps them.
Transposition swaps the two partitions along with the entries. The block
product is the unified rule: A*B is defined exactly when the flat shapes
multiply and A's column partition equals B's row partition; the entries are
the ordinary dense product, the result carries A's row partition and B's
column partition, and the shared inner partition is reported in a witness
rather than in the result.
"""

from dataclasses import dataclass

from .core import DenseMatrix, Partition, SuperMatrix, as_rational, make_super
from .errors import DimensionMismatch, PartitionMismatch


@dataclass(frozen=True)
class ProductWitness:
    """The partitions that made a block product well formed."""

    inner_partition: Partition
    left_row_partition: Partition
    right_col_partition: Partition


def value_eq(a, b):
    """Same shape and entries; partitions ignored."""
    return a.data.rows == b.data.rows and a.data.cols == b.data.cols and a.data.entries == b.data.entries


def strict_eq(a, b):
    """Same entries and the same partitions on both axes."""
    return value_eq(a, b) and a.row_partition == b.row_partition and a.col_partition == b.col_partition


def _require_same_layout(a, b):
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatch(f"operand shapes differ: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
    if a.row_partition != b.row_partition:
        raise PartitionMismatch(
            f"partition mismatch: row cuts {list(a.row_cuts)} vs {list(b.row_cuts)}"
        )
    if a.col_partition != b.col_partition:
        raise PartitionMismatch(
            f"partition mismatch: column cuts {list(a.col_cuts)} vs {list(b.col_cuts)}"
        )


def add(a, b):
    _require_same_layout(a, b)
    entries = tuple(x + y for x, y in zip(a.data.entries, b.data.entries))
    return SuperMatrix(DenseMatrix(a.rows, a.cols, entries), a.row_partition, a.col_partition)


def scale(k, a):
    k = as_rational(k)
    entries = tuple(k * x for x in a.data.entries)
    return SuperMatrix(DenseMatrix(a.rows, a.cols, entries), a.row_partition, a.col_partition)


def sub(a, b):
    return add(a, scale(-1, b))


def transpose(a):
    entries = tuple(a.data.at(i, j) for j in range(a.cols) for i in range(a.rows))
    return SuperMatrix(DenseMatrix(a.cols, a.rows, entries), a.col_partition, a.row_partition)


def _dense_mul(a, b):
    n, k, m = a.rows, a.cols, b.cols
    out = []
    for i in range(n):
        arow = a.entries[i * k : (i + 1) * k]
        for j in range(m):
            acc = sum(arow[t] * b.entries[t * m + j] for t in range(k))
            out.append(acc)
    return DenseMatrix(n, m, tuple(out))


def super_mul(a, b):
    """Unified block product: (result, witness)."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.col_partition != b.row_partition:
        raise PartitionMismatch(
            f"partition mismatch: inner cuts {list(a.col_cuts)} vs {list(b.row_cuts)}"
        )
    product = SuperMatrix(_dense_mul(a.data, b.data), a.row_partition, b.col_partition)
    witness = ProductWitness(a.col_partition, a.row_partition, b.col_partition)
    return product, witness


def gram(a, side="right"):
    """a * a^T (side="right") or a^T * a (side="left"). Always defined."""
    if side == "right":
        product, _ = super_mul(a, transpose(a))
    elif side == "left":
        product, _ = super_mul(transpose(a), a)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return product
