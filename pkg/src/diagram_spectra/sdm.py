"""Symmetric diagram matrices.

A diagram with s through classes and r horizontal edges is determined, up to
the data that matters here, by which s of its s+r components are through
classes. The symmetric diagram matrix A^{s+r,s} is the C(s+r,s)-square
matrix indexed by those choices whose (i,j) entry is the symbol

    x_{min(s,r) - f},   f = s - |through_i cap through_j|,

f being the number of positions that are through in one index diagram but
horizontal in the other. f never exceeds min(s,r): it is at most s by
definition, and at most r because two s-subsets of an (s+r)-set overlap in
at least s-r elements.

Entries are stored as integer levels (level v stands for the symbol x_v);
`substitute` turns a level matrix into a concrete matrix over whatever ring
the caller supplies values from (integers for the verification oracle,
polynomials for Gram-block work).

Rows and columns follow k_subsets(s+r, s), i.e. lexicographic order of the
through-position sets. Any fixed order would do mathematically; this one is
documented so that emitted matrices are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, TypeVar

from .combinat import Subset, binomial, k_subsets
from .errors import SizeCapExceeded

DEFAULT_MAX_SIZE = 200_000

T = TypeVar("T")


@dataclass(frozen=True)
class DiagramKey:
    s: int
    r: int
    through_set: Subset

    def __post_init__(self) -> None:
        if len(self.through_set) != self.s:
            raise ValueError(
                f"through_set has {len(self.through_set)} elements, expected s={self.s}"
            )
        if self.through_set.elements and self.through_set.elements[-1] > self.s + self.r:
            raise ValueError(
                f"through_set {self.through_set.elements} exceeds s+r={self.s + self.r}"
            )


def entry_level(d_i: DiagramKey, d_j: DiagramKey) -> int:
    """Level v of the entry symbol x_v for the pair (d_i, d_j)."""
    if (d_i.s, d_i.r) != (d_j.s, d_j.r):
        raise ValueError(
            f"mismatched shapes: ({d_i.s},{d_i.r}) vs ({d_j.s},{d_j.r})"
        )
    f = d_i.s - d_i.through_set.intersection_size(d_j.through_set)
    return min(d_i.s, d_i.r) - f


@dataclass(frozen=True)
class EntryMatrix:
    """Level matrix of A^{s+r,s}; levels[i][j] = v means entry x_v."""

    s: int
    r: int
    n: int
    levels: tuple[tuple[int, ...], ...]

    @property
    def min_level(self) -> int:
        return min(self.s, self.r)

    def row_keys(self) -> list[DiagramKey]:
        return [DiagramKey(self.s, self.r, t) for t in k_subsets(self.s + self.r, self.s)]

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "r": self.r,
            "n": self.n,
            "levels": [list(row) for row in self.levels],
        }

    def to_csv(self) -> str:
        lines = [",".join(f"x{v}" for v in row) for row in self.levels]
        return "\n".join(lines) + "\n"


def build(s: int, r: int, max_size: int = DEFAULT_MAX_SIZE) -> EntryMatrix:
    """Construct A^{s+r,s} as a level matrix."""
    if s < 0 or r < 0:
        raise ValueError(f"need s, r >= 0, got ({s}, {r})")
    if s + r < 1:
        raise ValueError("need s + r >= 1")
    n = binomial(s + r, s)
    if n > max_size:
        raise SizeCapExceeded(f"A^{{{s + r},{s}}}", n, max_size)
    throughs = [frozenset(t.elements) for t in k_subsets(s + r, s)]
    lo = min(s, r)
    rows = []
    for ti in throughs:
        rows.append(tuple(lo - (s - len(ti & tj)) for tj in throughs))
    return EntryMatrix(s=s, r=r, n=n, levels=tuple(rows))


def substitute(m: EntryMatrix, values: Sequence[T]) -> list[list[T]]:
    """Replace each level v by values[v]; values must cover 0..min(s,r)."""
    if len(values) != m.min_level + 1:
        raise ValueError(
            f"expected {m.min_level + 1} values (levels 0..{m.min_level}), got {len(values)}"
        )
    return [[values[v] for v in row] for row in m.levels]
