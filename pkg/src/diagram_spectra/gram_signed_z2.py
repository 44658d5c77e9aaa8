"""Reduced block spectra for Z2-stable relation algebras and the signed
partition algebra.

Diagrams here carry two kinds of structure: {e}-classes, which occur in
pairs (r1 pairs of horizontal edges, s1 pairs of through classes), and
Z2-classes (r2 horizontal, s2 through). After the same kind of paired
row/column reduction as in the plain partition case, each block is a tensor
product of two substituted symmetric diagram matrices: an e-part A^{2r1,2r1}
pattern with entries

    X_{min(s1,r1)-t} = (-1)^t * 2^t * t! * prod_{i=t}^{r1-1} (x^2 - x - 2(s1+i))

and a Z2-part identical in shape to the partition-algebra substitution with
parameters (s2, r2). Eigenpolynomials of a tensor block are therefore the
pairwise products of the two families' eigenpolynomials, with per-copy
multiplicity m_{l1}(s1,r1) * m_{l2}(s2,r2). How many copies of each (r1,r2)
block occur inside the full Gram matrix is not determined here (no usable
closed form is available for the Z2-stable analogue of the Stirling copy
count), so callers supply copy counts when they aggregate.

Block ranges, with K = k - s1 - s2: Z2-relations mode allows
0 <= r1, r2 <= K; signed mode additionally requires r2 <= K - 1.

The signed case has one extra block with no tensor structure, built by
build_exceptional_block: it collects the diagrams whose underlying partition
is all singletons with s1+s2+r'1+r'2 = k and r'1 >= 1. Its rows come in two
copies per r'1 value (dimension 2K). Within this block every diagram shares
the same singleton through classes, so the propagating number never drops
and every off-diagonal entry takes the sign-flip form
(-1)^{r1+r'1} * prod_{m=0}^{K-1} (x - (s2+m)); the generic entry formula for
a dropped propagating number (parameterized by t1, t2) is exposed as
exceptional_offdiag_poly for completeness. No closed-form spectrum is
offered for this block; use the oracle's determinant on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gram_partition import x_substitution_poly
from .poly import Polynomial, ZERO, factor_product
from .spectrum import eberlein_coefficient, multiplicities


def _quadratic_factor(c: int) -> Polynomial:
    """x^2 - x - 2c."""
    return Polynomial.of([-2 * c, -1, 1])


def x_e_poly(s1: int, r1: int, t: int) -> Polynomial:
    """E-class substitution: (-1)^t 2^t t! prod_{i=t}^{r1-1}(x^2-x-2(s1+i))."""
    if not (0 <= t <= min(s1, r1)):
        raise ValueError(f"t={t} out of range 0..{min(s1, r1)}")
    prod = factor_product(_quadratic_factor(s1 + i) for i in range(t, r1))
    return prod.scale((-1) ** t * 2**t * math.factorial(t))


def x_z2_poly(s2: int, r2: int, t: int) -> Polynomial:
    """Z2-class substitution; same arithmetic as the partition-algebra one."""
    return x_substitution_poly(s2, r2, t)


def e_family_eigenvalues(s1: int, r1: int) -> list[tuple[int, Polynomial]]:
    """Eigenpolynomials of the substituted e-part, degree 2*r1 each."""
    lo = min(s1, r1)
    out = []
    for l in range(lo + 1):
        e_l = ZERO
        for t in range(lo + 1):
            e_l = e_l + x_e_poly(s1, r1, t).scale(eberlein_coefficient(s1, r1, l, t))
        out.append((l, e_l))
    return out


def z2_family_eigenvalues(s2: int, r2: int) -> list[tuple[int, Polynomial]]:
    """Eigenpolynomials of the substituted Z2-part, degree r2 each."""
    lo = min(s2, r2)
    out = []
    for l in range(lo + 1):
        e_l = ZERO
        for t in range(lo + 1):
            e_l = e_l + x_z2_poly(s2, r2, t).scale(eberlein_coefficient(s2, r2, l, t))
        out.append((l, e_l))
    return out


@dataclass(frozen=True)
class SignedBlockKey:
    k: int
    s1: int
    s2: int
    r1: int
    r2: int

    def validate(self, mode: str) -> None:
        if mode not in ("z2", "signed"):
            raise ValueError(f"mode must be 'z2' or 'signed', got {mode!r}")
        if min(self.k, self.s1, self.s2, self.r1, self.r2) < 0:
            raise ValueError("all parameters must be nonnegative")
        cap = self.k - self.s1 - self.s2
        if cap < 0:
            raise ValueError(f"s1+s2={self.s1 + self.s2} exceeds k={self.k}")
        if self.r1 > cap:
            raise ValueError(f"r1={self.r1} out of range 0..{cap}")
        r2_cap = cap - 1 if mode == "signed" else cap
        if self.r2 > r2_cap:
            raise ValueError(f"r2={self.r2} out of range 0..{r2_cap} in {mode} mode")


def block_spectrum_tensor(
    key: SignedBlockKey, mode: str
) -> list[tuple[int, int, Polynomial, int]]:
    """Per-copy spectrum of one tensor block: (l1, l2, eigenpoly, mult)."""
    key.validate(mode)
    e_fam = e_family_eigenvalues(key.s1, key.r1)
    z_fam = z2_family_eigenvalues(key.s2, key.r2)
    m1 = multiplicities(key.s1, key.r1)
    m2 = multiplicities(key.s2, key.r2)
    out = []
    for l1, p1 in e_fam:
        for l2, p2 in z_fam:
            out.append((l1, l2, p1 * p2, m1[l1] * m2[l2]))
    return out


def _z2_run(s2: int, count: int) -> Polynomial:
    """prod_{m=0}^{count-1} (x - (s2+m))."""
    return factor_product(Polynomial.x_minus(s2 + m) for m in range(count))


def exceptional_diag_poly(k: int, s1: int, s2: int, rp1: int) -> Polynomial:
    """Diagonal entry of the exceptional signed block for e-pair count rp1."""
    cap = k - s1 - s2
    if not (1 <= rp1 <= cap):
        raise ValueError(f"rp1={rp1} out of range 1..{cap}")
    rp2 = cap - rp1
    head = factor_product(_quadratic_factor(s1 + j) for j in range(rp1))
    return head * _z2_run(s2, rp2) + _z2_run(s2, cap)


def exceptional_offdiag_poly(
    k: int, s1: int, s2: int, rp1: int, rp2: int, t1: int, t2: int
) -> Polynomial:
    """Generic off-diagonal entry for a dropped propagating number.

    (-1)^{t1+t2} 2^{t1} t1! t2! prod_{j=0}^{rp1-t1-1}(x^2-x-2(s1+t1+j))
    * prod_{m=0}^{rp2-t2-1}(x-(s2+t2+m)) + prod_{m=0}^{K-1}(x-(s2+m)).
    """
    cap = k - s1 - s2
    if not (0 <= t1 <= rp1 and 0 <= t2 <= rp2):
        raise ValueError(f"need 0 <= t1 <= rp1 and 0 <= t2 <= rp2, got {(t1, t2)}")
    head = factor_product(_quadratic_factor(s1 + t1 + j) for j in range(rp1 - t1))
    tail = factor_product(Polynomial.x_minus(s2 + t2 + m) for m in range(rp2 - t2))
    scale = (-1) ** (t1 + t2) * 2**t1 * math.factorial(t1) * math.factorial(t2)
    return (head * tail).scale(scale) + _z2_run(s2, cap)


def build_exceptional_block(k: int, s1: int, s2: int) -> list[list[Polynomial]]:
    """The signed-mode block with all-singleton underlying partition.

    Rows are (rp1, copy) for rp1 = 1..K and copy in {0,1}, K = k-s1-s2, so
    the dimension is 2K. Diagonals follow exceptional_diag_poly; all
    off-diagonals carry (-1)^{rp1_i + rp1_j} times the full linear run,
    because the shared singleton through classes keep the propagating number
    at its maximum between any two diagrams of this block.
    """
    if min(k, s1, s2) < 0:
        raise ValueError("all parameters must be nonnegative")
    cap = k - s1 - s2
    if cap < 1:
        raise ValueError(f"need s1+s2 < k, got s1+s2={s1 + s2}, k={k}")
    run = _z2_run(s2, cap)
    row_rp1 = [rp1 for rp1 in range(1, cap + 1) for _ in (0, 1)]
    n = 2 * cap
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(exceptional_diag_poly(k, s1, s2, row_rp1[i]))
            else:
                row.append(run.scale((-1) ** (row_rp1[i] + row_rp1[j])))
        out.append(row)
    return out


def to_json_dict(k: int, s1: int, s2: int, mode: str) -> dict:
    """Spectrum report over all (r1, r2) blocks valid for the mode."""
    if mode not in ("z2", "signed"):
        raise ValueError(f"mode must be 'z2' or 'signed', got {mode!r}")
    cap = k - s1 - s2
    if min(k, s1, s2) < 0 or cap < 0:
        raise ValueError(f"invalid parameters k={k}, s1={s1}, s2={s2}")
    r2_cap = cap - 1 if mode == "signed" else cap
    blocks = []
    for r1 in range(0, cap + 1):
        for r2 in range(0, r2_cap + 1):
            key = SignedBlockKey(k=k, s1=s1, s2=s2, r1=r1, r2=r2)
            spec = block_spectrum_tensor(key, mode)
            blocks.append(
                {
                    "r1": r1,
                    "r2": r2,
                    "eigen": [
                        {
                            "l1": l1,
                            "l2": l2,
                            "poly": p.to_json(),
                            "multiplicity_per_copy": m,
                        }
                        for l1, l2, p, m in spec
                    ],
                }
            )
    return {"mode": mode, "k": k, "s1": s1, "s2": s2, "blocks": blocks}
