"""Exact combinatorial primitives.

Everything downstream indexes matrices by either k-subsets (the choices of
through positions in a diagram) or set partitions into a fixed number of
blocks (the one-row equivalence relations underlying half diagrams). Both
enumerations must be total orders that never change between runs, because
matrix rows are addressed by position. The orders used here:

* k_subsets(n, k): lexicographic on the sorted element tuple,
  e.g. {1,2} < {1,3} < {2,3}.
* set_partitions(n, b): lexicographic on the restricted-growth string,
  e.g. for n=3, b=2: 001 ({1,2}{3}) < 010 ({1,3}{2}) < 011 ({1}{2,3}).

All counts are Python ints, so nothing overflows.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention that out-of-range k gives 0."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def stirling2(n: int, b: int) -> int:
    """Number of set partitions of an n-set into exactly b nonempty blocks."""
    if n < 0 or b < 0:
        raise ValueError(f"stirling2: arguments must be nonnegative, got ({n}, {b})")
    if n == 0:
        return 1 if b == 0 else 0
    if b == 0 or b > n:
        return 0
    # S(n,b) = b*S(n-1,b) + S(n-1,b-1): point n is alone or joins a block
    return b * stirling2(n - 1, b) + stirling2(n - 1, b - 1)


@dataclass(frozen=True)
class Subset:
    """A sorted subset of {1..n}, used to index matrix rows."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 1 for e in self.elements):
            raise ValueError(f"Subset elements must be positive: {self.elements}")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError(f"Subset must be strictly increasing: {self.elements}")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: int) -> bool:
        return e in self.elements

    def intersection_size(self, other: "Subset") -> int:
        return len(set(self.elements) & set(other.elements))

    def complement(self, n: int) -> "Subset":
        inside = set(self.elements)
        return Subset(tuple(e for e in range(1, n + 1) if e not in inside))


def k_subsets(n: int, k: int) -> list[Subset]:
    """All k-element subsets of {1..n} in lexicographic order.

    This order is load-bearing: it fixes row and column indexing of every
    matrix built downstream.
    """
    if n < 0 or k < 0:
        raise ValueError(f"k_subsets: arguments must be nonnegative, got ({n}, {k})")
    if k > n:
        raise ValueError(f"k_subsets: k={k} exceeds n={n}")
    # itertools.combinations of an ascending range is already lexicographic
    return [Subset(c) for c in itertools.combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class SetPartition:
    """Set partition of {1..n} in restricted-growth form.

    block_assignment[i] is the block label of point i+1. Labels start at 0
    for point 1 and a new label is always exactly one more than the maximum
    seen so far, which makes the string a canonical name for the partition.
    """

    block_assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        mx = -1
        for lab in self.block_assignment:
            if lab < 0 or lab > mx + 1:
                raise ValueError(
                    f"not a restricted-growth string: {self.block_assignment}"
                )
            mx = max(mx, lab)

    @property
    def n(self) -> int:
        return len(self.block_assignment)

    @property
    def block_count(self) -> int:
        return max(self.block_assignment) + 1 if self.block_assignment else 0

    def blocks(self) -> list[tuple[int, ...]]:
        """Blocks as sorted point tuples, ordered by block label (= order of
        first appearance)."""
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for pt, lab in enumerate(self.block_assignment, start=1):
            out[lab].append(pt)
        return [tuple(b) for b in out]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.block_assignment)


def set_partitions(n: int, b: int) -> list[SetPartition]:
    """All partitions of {1..n} into exactly b blocks, RGS-lexicographic."""
    if n < 1 or b < 1:
        raise ValueError(f"set_partitions: need n, b >= 1, got ({n}, {b})")
    if b > n:
        raise ValueError(f"set_partitions: b={b} exceeds n={n}")
    out: list[SetPartition] = []
    rgs = [0] * n

    def extend(i: int, mx: int) -> None:
        if i == n:
            if mx + 1 == b:
                out.append(SetPartition(tuple(rgs)))
            return
        # labels must stay reachable: remaining points must cover b labels
        for lab in range(min(mx + 1, b - 1) + 1):
            new_mx = max(mx, lab)
            if (b - 1 - new_mx) <= (n - 1 - i):
                rgs[i] = lab
                extend(i + 1, new_mx)
        rgs[i] = 0

    extend(1, 0)
    return out
