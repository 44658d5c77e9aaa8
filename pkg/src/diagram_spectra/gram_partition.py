"""Gram matrix of the partition-algebra half-diagram basis, and its reduced
block spectra.

A half diagram on k points is a set partition of {1..k} into s+r blocks
together with a choice of s of those blocks as through classes; the other r
blocks are horizontal edges. The Gram matrix G_s is indexed by all such half
diagrams (there are f_s = sum_r stirling2(k,s+r)*C(s+r,s) of them) and its
(i,j) entry records the diagram product U_i * U_j:

* form the join of the two partitions (finest common coarsening);
* if the s through classes of each side do not pair off bijectively through
  join blocks, the propagating number of the product has dropped and the
  entry is 0;
* otherwise the entry is x^m where m counts the join blocks containing no
  through class of either side (each such block collapses to a loop worth a
  factor of x in the diagram product).

Paired row and column operations reduce G_s to a block-diagonal matrix with
stirling2(k,s+r) identical blocks for each r, and each block is a symmetric
diagram matrix A^{s+r,s} whose symbol x_{min(s,r)-t} has been substituted by
the polynomial

    X_{min(s,r)-t} = (-1)^t * t! * prod_{m=t}^{r-1} (x - (s+m)).

Feeding those substitutions through the closed-form spectrum of A^{s+r,s}
gives the block eigenpolynomials E_{r,l}. The reduction is NOT a similarity
(already on k=2, s=1 the traces disagree), so the E_{r,l} are eigenvalues of
the reduced matrix only; what survives for G_s itself is the determinant:

    det G_s = eps * prod_{r,l} E_{r,l}^{stirling2(k,s+r)*m_l(s,r)},
    eps in {+1, -1}.

The sign eps comes from the row/column interchanges in the reduction and is
measured by the oracle, never assumed. Semisimplicity analysis only needs
the determinant's roots, so nothing is lost.

product_form is the factored shape of E_{r,l}:

    E_{r,l} = prod_{i=0}^{l-1} (x - (s-1+i)) * prod_{j=0}^{r-l-1} (x - (2s+j)).

The upper bound r-l-1 on the second product is forced by degree (every
E_{r,l} has degree exactly r); a bound of min(s,r)-l-1 agrees with it when
r <= s but is degree-deficient when r > s, and the identity test in the
suite exercises exactly that corner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .combinat import SetPartition, Subset, binomial, k_subsets, set_partitions, stirling2
from .errors import SizeCapExceeded
from .poly import ONE, ZERO, Polynomial, factor_product, integer_roots
from .spectrum import eberlein_coefficient, multiplicities

DEFAULT_MAX_SIZE = 3000


@dataclass(frozen=True)
class HalfDiagram:
    k: int
    partition: SetPartition
    through_blocks: Subset

    def __post_init__(self) -> None:
        if self.partition.n != self.k:
            raise ValueError(f"partition covers {self.partition.n} points, expected {self.k}")
        nb = self.partition.block_count
        if self.through_blocks.elements and self.through_blocks.elements[-1] > nb:
            raise ValueError(
                f"through block index {self.through_blocks.elements[-1]} exceeds {nb} blocks"
            )

    @property
    def s(self) -> int:
        return len(self.through_blocks)

    @property
    def r(self) -> int:
        return self.partition.block_count - self.s

    def __str__(self) -> str:
        blocks = self.partition.blocks()
        parts = []
        for idx, blk in enumerate(blocks, start=1):
            body = ",".join(str(p) for p in blk)
            mark = "*" if idx in self.through_blocks else ""
            parts.append("{" + body + "}" + mark)
        return "".join(parts)


def enumerate_half_diagrams(k: int, s: int) -> list[HalfDiagram]:
    """All half diagrams on k points with s through classes.

    Grouped by ascending r; within a group, partition order is RGS-lex and
    through choices follow k_subsets order. This is the row order of G_s.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not (0 <= s <= k):
        raise ValueError(f"need 0 <= s <= k, got s={s}, k={k}")
    out: list[HalfDiagram] = []
    for r in range(0, k - s + 1):
        nb = s + r
        if nb == 0:
            continue
        choices = k_subsets(nb, s)
        for part in set_partitions(k, nb):
            for thr in choices:
                out.append(HalfDiagram(k=k, partition=part, through_blocks=thr))
    return out


def gram_entry(h_i: HalfDiagram, h_j: HalfDiagram) -> Polynomial:
    """Entry of G_s for the product U_i * U_j: x^loops, or 0 on propagating
    collapse."""
    if h_i.k != h_j.k:
        raise ValueError(f"mismatched k: {h_i.k} vs {h_j.k}")
    if h_i.s != h_j.s:
        raise ValueError(f"mismatched s: {h_i.s} vs {h_j.s}")
    k, s = h_i.k, h_i.s
    # union-find join of the two partitions over points 0..k-1
    parent = list(range(k))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for rgs in (h_i.partition.block_assignment, h_j.partition.block_assignment):
        first: dict[int, int] = {}
        for pt, lab in enumerate(rgs):
            if lab in first:
                ra, rb = find(first[lab]), find(pt)
                if ra != rb:
                    parent[ra] = rb
            else:
                first[lab] = pt

    thr_i = set(h_i.through_blocks.elements)
    thr_j = set(h_j.through_blocks.elements)
    has_i: set[int] = set()
    has_j: set[int] = set()
    roots: set[int] = set()
    for pt in range(k):
        root = find(pt)
        roots.add(root)
        if h_i.partition.block_assignment[pt] + 1 in thr_i:
            has_i.add(root)
        if h_j.partition.block_assignment[pt] + 1 in thr_j:
            has_j.add(root)
    matched = len(has_i & has_j)
    if matched < s:
        return ZERO
    loops = sum(1 for root in roots if root not in has_i and root not in has_j)
    return Polynomial.of([0] * loops + [1])


@dataclass(frozen=True)
class GramMatrix:
    k: int
    s: int
    diagrams: tuple[HalfDiagram, ...]
    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def n(self) -> int:
        return len(self.diagrams)

    def monomial_strings(self) -> list[list[str]]:
        out = []
        for row in self.entries:
            cells = []
            for p in row:
                if p.is_zero():
                    cells.append("0")
                elif p == ONE:
                    cells.append("1")
                else:
                    d = p.degree()
                    cells.append("x" if d == 1 else f"x^{d}")
            out.append(cells)
        return out

    def to_csv(self) -> str:
        return "\n".join(",".join(row) for row in self.monomial_strings()) + "\n"


def build_gram(k: int, s: int, max_size: int = DEFAULT_MAX_SIZE) -> GramMatrix:
    diagrams = enumerate_half_diagrams(k, s)
    n = len(diagrams)
    if n > max_size:
        raise SizeCapExceeded(f"G_{s} on {k} points", n, max_size)
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            e = gram_entry(diagrams[i], diagrams[j])
            rows[i][j] = e
            rows[j][i] = e
    return GramMatrix(
        k=k, s=s, diagrams=tuple(diagrams), entries=tuple(tuple(row) for row in rows)
    )


def x_substitution_poly(s: int, r: int, t: int) -> Polynomial:
    """X_{min(s,r)-t} = (-1)^t * t! * prod_{m=t}^{r-1} (x - (s+m))."""
    if not (0 <= t <= min(s, r)):
        raise ValueError(f"t={t} out of range 0..{min(s, r)}")
    prod = factor_product(Polynomial.x_minus(s + m) for m in range(t, r))
    return prod.scale((-1) ** t * math.factorial(t))


@dataclass(frozen=True)
class BlockSpectrum:
    r: int
    eigenpolys: tuple[tuple[int, Polynomial, int], ...]  # (l, E_{r,l}, multiplicity)


def block_spectrum(k: int, s: int, r: int) -> BlockSpectrum:
    """Eigenpolynomials of the r-block of the reduced G_s, with their total
    multiplicities (copies times family multiplicity)."""
    if not (0 <= r <= k - s):
        raise ValueError(f"r={r} out of range 0..{k - s}")
    copies = stirling2(k, s + r)
    mults = multiplicities(s, r)
    eigen = []
    for l in range(min(s, r) + 1):
        e_l = ZERO
        for t in range(min(s, r) + 1):
            e_l = e_l + x_substitution_poly(s, r, t).scale(eberlein_coefficient(s, r, l, t))
        eigen.append((l, e_l, copies * mults[l]))
    return BlockSpectrum(r=r, eigenpolys=tuple(eigen))


def product_form(s: int, r: int, l: int) -> Polynomial:
    """Factored form of the block eigenpolynomial E_{r,l} (degree r)."""
    if not (0 <= l <= min(s, r)):
        raise ValueError(f"l={l} out of range 0..{min(s, r)}")
    left = factor_product(Polynomial.x_minus(s - 1 + i) for i in range(l))
    right = factor_product(Polynomial.x_minus(2 * s + j) for j in range(r - l))
    return left * right


def semisimple_exceptions(k: int, s: int) -> set[int]:
    """Integer x at which det G_s vanishes: union of integer roots over all
    block eigenpolynomials."""
    if k < 1 or not (0 <= s <= k):
        raise ValueError(f"need k >= 1 and 0 <= s <= k, got ({k}, {s})")
    roots: set[int] = set()
    for r in range(0, k - s + 1):
        for _, e_l, mult in block_spectrum(k, s, r).eigenpolys:
            if mult == 0:
                continue
            if e_l.degree() == 0:
                continue
            roots |= integer_roots(e_l)
    return roots


def to_json_dict(
    k: int,
    s: int,
    include_matrix: bool = False,
    det_sign: int | None = None,
    singular_x: set[int] | None = None,
    max_size: int = DEFAULT_MAX_SIZE,
) -> dict:
    blocks = []
    for r in range(0, k - s + 1):
        spec_r = block_spectrum(k, s, r)
        blocks.append(
            {
                "r": r,
                "copies": stirling2(k, s + r),
                "eigen": [
                    {"l": l, "poly": p.to_json(), "multiplicity": m}
                    for l, p, m in spec_r.eigenpolys
                ],
            }
        )
    out: dict = {"k": k, "s": s, "blocks": blocks}
    if det_sign is not None:
        out["det_sign"] = det_sign
    if singular_x is not None:
        out["singular_x"] = sorted(singular_x)
    if include_matrix:
        g = build_gram(k, s, max_size=max_size)
        out["matrix"] = {
            "n": g.n,
            "diagrams": [str(d) for d in g.diagrams],
            "entries": [[p.to_json() for p in row] for row in g.entries],
        }
    return out
