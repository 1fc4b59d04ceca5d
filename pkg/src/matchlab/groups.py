"""Ambient abelian groups: cyclic groups Z/nZ and the integers.

Elements are plain Python ints in canonical form: residues in [0, n) for the
cyclic case, bounded signed integers for Z.  All operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BoundExceededError

# Magnitude cap for elements of Z.  Desk-scale verification never needs more;
# exceeding it is a bounds error, not a silent wrap.
DEFAULT_INT_BOUND = 2**31


@dataclass(frozen=True)
class GroupCtx:
    """A cyclic group of order ``modulus`` or the additive group of integers.

    ``modulus`` is None exactly when ``kind == "integers"``.
    """

    kind: str  # "cyclic" | "integers"
    modulus: int | None = None
    int_bound: int = field(default=DEFAULT_INT_BOUND, compare=False)

    def __post_init__(self):
        if self.kind == "cyclic":
            if self.modulus is None or self.modulus < 1:
                raise ValueError(f"cyclic group needs modulus >= 1, got {self.modulus}")
        elif self.kind == "integers":
            if self.modulus is not None:
                raise ValueError("integers mode takes no modulus")
        else:
            raise ValueError(f"unknown group kind {self.kind!r}")

    @property
    def is_cyclic(self) -> bool:
        return self.kind == "cyclic"

    def canonicalize(self, x: int) -> int:
        if self.is_cyclic:
            return x % self.modulus
        if abs(x) > self.int_bound:
            raise BoundExceededError(f"integer element {x} exceeds bound {self.int_bound}")
        return x

    def is_canonical(self, x: int) -> bool:
        if self.is_cyclic:
            return 0 <= x < self.modulus
        return abs(x) <= self.int_bound

    def add(self, x: int, y: int) -> int:
        """Group addition of canonical elements; result is canonical."""
        if self.is_cyclic:
            return (x + y) % self.modulus
        s = x + y
        if abs(s) > self.int_bound:
            raise BoundExceededError(f"integer sum {s} exceeds bound {self.int_bound}")
        return s

    def neg(self, x: int) -> int:
        if self.is_cyclic:
            return (-x) % self.modulus
        return -x

    def scale(self, k: int, x: int) -> int:
        """k-fold sum of x (integer scalar action)."""
        if self.is_cyclic:
            return (k * x) % self.modulus
        s = k * x
        if abs(s) > self.int_bound:
            raise BoundExceededError(f"scaled element {s} exceeds bound {self.int_bound}")
        return s

    def elements(self) -> range:
        if not self.is_cyclic:
            raise ValueError("cannot enumerate the integers")
        return range(self.modulus)

    def describe(self) -> str:
        return f"Z/{self.modulus}Z" if self.is_cyclic else "Z"


def cyclic(n: int) -> GroupCtx:
    return GroupCtx("cyclic", n)


def integers(bound: int = DEFAULT_INT_BOUND) -> GroupCtx:
    return GroupCtx("integers", None, bound)


def subgroup_generated(g: GroupCtx, a: int) -> tuple[int, ...]:
    """The cyclic subgroup <a> of Z/nZ as a sorted tuple.

    Size is n / gcd(a, n); <0> = {0}.
    """
    if not g.is_cyclic:
        raise ValueError("subgroup enumeration requires a cyclic group")
    n = g.modulus
    a = g.canonicalize(a)
    if a == 0:
        return (0,)
    step = math.gcd(a, n)
    return tuple(range(0, n, step))


def units(g: GroupCtx) -> tuple[int, ...]:
    """Multiplicative units of Z/nZ: residues u in [1, n) with gcd(u, n) = 1.

    These act as automorphisms x -> u*x; used for symmetry reduction.
    """
    if not g.is_cyclic:
        raise ValueError("unit enumeration requires a cyclic group")
    n = g.modulus
    return tuple(u for u in range(1, n) if math.gcd(u, n) == 1)
