"""Ordered unions of supermatrices.

A SuperNMatrix is a finite nonempty sequence of supermatrix components.
Operations lift componentwise and demand equal arity. A union is proper
unless two components coincide exactly (entries and partitions), with two
carve-outs: a single component is always proper, and a union in which every
component is zero is proper by convention.
"""

from dataclasses import dataclass

from . import algebra
from .core import make_super
from .errors import ArityMismatch, DimensionMismatch, EmptyUnion, PartitionMismatch


@dataclass(frozen=True)
class SuperNMatrix:
    """Ordered union of n >= 1 supermatrix components."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise EmptyUnion("union needs at least one component")
        object.__setattr__(self, "components", comps)

    @property
    def arity(self):
        return len(self.components)


def make_union(components):
    return SuperNMatrix(tuple(components))


def _is_zero(s):
    return all(x == 0 for x in s.data.entries)


def improper_pair(u):
    """First (i, j), 1-based, with identical components; None if proper."""
    if u.arity == 1:
        return None
    if all(_is_zero(c) for c in u.components):
        return None
    for i in range(u.arity):
        for j in range(i + 1, u.arity):
            if algebra.strict_eq(u.components[i], u.components[j]):
                return (i + 1, j + 1)
    return None


def is_proper(u):
    return improper_pair(u) is None


def _is_partitioned(s):
    return not (s.row_partition.is_trivial and s.col_partition.is_trivial)


def is_semi_super(u):
    """True when the union mixes partitioned and unpartitioned components."""
    flags = [_is_partitioned(c) for c in u.components]
    return any(flags) and not all(flags)


def _lift_pairs(op, u, v, opname):
    if u.arity != v.arity:
        raise ArityMismatch(f"cannot {opname} unions of arity {u.arity} and {v.arity}")
    out = []
    for k, (a, b) in enumerate(zip(u.components, v.components), start=1):
        try:
            out.append(op(a, b))
        except (DimensionMismatch, PartitionMismatch) as e:
            raise type(e)(f"component {k}: {e}", component=k) from e
    return SuperNMatrix(tuple(out))


def union_add(u, v):
    return _lift_pairs(algebra.add, u, v, "add")


def union_sub(u, v):
    return _lift_pairs(algebra.sub, u, v, "subtract")


def union_scale(k, u):
    return SuperNMatrix(tuple(algebra.scale(k, c) for c in u.components))


def union_transpose(u):
    return SuperNMatrix(tuple(algebra.transpose(c) for c in u.components))


def union_mul(u, v):
    return _lift_pairs(lambda a, b: algebra.super_mul(a, b)[0], u, v, "multiply")


def union_gram(u, side="right"):
    return SuperNMatrix(tuple(algebra.gram(c, side) for c in u.components))


def union_flatten(u):
    """Forget every partition; components become simple."""
    return SuperNMatrix(tuple(make_super(c.data) for c in u.components))


def union_value_eq(u, v):
    if u.arity != v.arity:
        return False
    return all(algebra.value_eq(a, b) for a, b in zip(u.components, v.components))


def union_strict_eq(u, v):
    if u.arity != v.arity:
        return False
    return all(algebra.strict_eq(a, b) for a, b in zip(u.components, v.components))
