"""Core data model: exact scalars, axis partitions, dense matrices, supermatrices.

A supermatrix is an ordinary dense matrix of rationals together with one
partition per axis. A partition of an axis of length n is a strictly
increasing tuple of cut positions, each strictly between 0 and n; the cuts
slice the axis into contiguous blocks. No cuts means the trivial partition,
and a supermatrix with two trivial partitions is a simple matrix that
happens to carry its (empty) partition data along.

Entries are fractions.Fraction throughout. Floats are refused rather than
converted: binary floats would smuggle rounding into a library whose whole
point is exactness.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BlockIndexOutOfRange,
    CutOutOfRange,
    DimensionMismatch,
    DuplicateCut,
    UnsortedCuts,
)

Rational = Fraction


def as_rational(x):
    """Coerce int / Fraction / numeric string to Fraction. Floats are rejected."""
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; use Fraction or a string like '7/2'")
    return Fraction(x)


@dataclass(frozen=True)
class Partition:
    """Cut positions for one axis. cuts=() is the trivial partition."""

    length: int
    cuts: tuple = ()

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 1:
            raise DimensionMismatch(f"axis length must be a positive integer, got {self.length!r}")
        cuts = tuple(self.cuts)
        object.__setattr__(self, "cuts", cuts)
        prev = 0
        for c in cuts:
            if not isinstance(c, int) or c < 1 or c > self.length - 1:
                raise CutOutOfRange(c, self.length)
            if c == prev:
                raise DuplicateCut(c)
            if c < prev:
                raise UnsortedCuts(cuts)
            prev = c

    @property
    def is_trivial(self):
        return not self.cuts

    @property
    def block_count(self):
        return len(self.cuts) + 1

    @property
    def bounds(self):
        """Block edges as 0-based half-open positions: (0, *cuts, length)."""
        return (0,) + self.cuts + (self.length,)

    def blocks(self):
        """Yield (start, stop) per block, 0-based half-open."""
        edges = self.bounds
        for i in range(len(edges) - 1):
            yield edges[i], edges[i + 1]


def make_partition(length, cuts=()):
    return Partition(length, tuple(cuts))


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major immutable matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        entries = tuple(as_rational(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix needs at least one row")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise DimensionMismatch(f"row {i + 1} has {len(r)} entries, row 1 has {width}")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), width, flat)

    def at(self, i, j):
        """Entry at 0-based (i, j)."""
        return self.entries[i * self.cols + j]

    def to_rows(self):
        return [list(self.entries[i * self.cols : (i + 1) * self.cols]) for i in range(self.rows)]


@dataclass(frozen=True)
class SuperMatrix:
    """A dense matrix plus one partition per axis."""

    data: DenseMatrix
    row_partition: Partition
    col_partition: Partition

    def __post_init__(self):
        if self.row_partition.length != self.data.rows:
            raise DimensionMismatch(
                f"row partition covers {self.row_partition.length} rows, matrix has {self.data.rows}"
            )
        if self.col_partition.length != self.data.cols:
            raise DimensionMismatch(
                f"column partition covers {self.col_partition.length} columns, matrix has {self.data.cols}"
            )

    @property
    def rows(self):
        return self.data.rows

    @property
    def cols(self):
        return self.data.cols

    @property
    def row_cuts(self):
        return self.row_partition.cuts

    @property
    def col_cuts(self):
        return self.col_partition.cuts


def _as_partition(p, length):
    if isinstance(p, Partition):
        if p.length != length:
            raise DimensionMismatch(f"partition covers {p.length} positions, axis has {length}")
        return p
    return Partition(length, tuple(p))


def make_super(data, row_partition=(), col_partition=()):
    """Build a SuperMatrix from a DenseMatrix or nested row lists.

    Each partition argument may be a Partition or a bare iterable of cuts.
    """
    if not isinstance(data, DenseMatrix):
        data = DenseMatrix.from_rows(data)
    return SuperMatrix(
        data,
        _as_partition(row_partition, data.rows),
        _as_partition(col_partition, data.cols),
    )


def grid_shape(s):
    """(row blocks, column blocks) of the partition grid."""
    return (s.row_partition.block_count, s.col_partition.block_count)


def block(s, i, j):
    """Block (i, j) of the grid, 1-based, as a SuperMatrix with trivial partitions."""
    rb, cb = grid_shape(s)
    if not (1 <= i <= rb) or not (1 <= j <= cb):
        raise BlockIndexOutOfRange(f"block ({i}, {j}) outside {rb}x{cb} grid")
    r0, r1 = list(s.row_partition.blocks())[i - 1]
    c0, c1 = list(s.col_partition.blocks())[j - 1]
    rows = [[s.data.at(r, c) for c in range(c0, c1)] for r in range(r0, r1)]
    return make_super(rows)


def flatten(s):
    """Forget the partitions: the underlying DenseMatrix."""
    return s.data


def strips(s, axis):
    """Slice a supermatrix along one partitioned axis into a list of supermatrices.

    axis="row" keeps the column partition on every strip; axis="column" keeps
    the row partition. Re-stacking the strips in order recovers the original.
    """
    if axis == "row":
        out = []
        for r0, r1 in s.row_partition.blocks():
            rows = [[s.data.at(r, c) for c in range(s.cols)] for r in range(r0, r1)]
            out.append(make_super(rows, (), s.col_partition.cuts))
        return out
    if axis == "column":
        out = []
        for c0, c1 in s.col_partition.blocks():
            rows = [[s.data.at(r, c) for c in range(c0, c1)] for r in range(s.rows)]
            out.append(make_super(rows, s.row_partition.cuts, ()))
        return out
    raise ValueError(f"axis must be 'row' or 'column', got {axis!r}")
