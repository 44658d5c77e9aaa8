"""Dense univariate polynomials over Python integers.

Coefficients are stored ascending by degree with trailing zeros trimmed, so
the zero polynomial is the empty tuple and the degree of a nonzero
polynomial is len(coeffs) - 1. Every polynomial that appears in this package
has integer coefficients (block eigenvalues are monic integer products, and
the fraction-free determinant routines preserve integrality), so there is no
rational fallback anywhere.

degree() of the zero polynomial returns the marker NEG_INF rather than -1,
to keep accidental arithmetic on it from looking like a valid degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

NEG_INF = float("-inf")


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use Polynomial.of()")

    @staticmethod
    def of(coeffs: Iterable[int]) -> "Polynomial":
        return Polynomial(_trim(list(coeffs)))

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial.of([c])

    @staticmethod
    def x_minus(a: int) -> "Polynomial":
        """The linear factor x - a."""
        return Polynomial.of([-a, 1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial.of(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(_trim(out))

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return ZERO
        return Polynomial(tuple(c * a for a in self.coeffs))

    def pow(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def eval_at(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient self / divisor, valid only when the division is exact.

        School long division; each step's leading coefficient must divide
        exactly, which holds whenever divisor genuinely divides self over
        the integers (the only way this is called).
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return ZERO
        rem = list(self.coeffs)
        dc = divisor.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        if len(rem) - 1 < dd:
            raise ValueError("division is not exact: degree too small")
        qout = [0] * (len(rem) - dd)
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            q, rr = divmod(c, lead)
            if rr:
                raise ValueError("division is not exact: leading coefficient")
            qout[top - dd] = q
            for i in range(dd + 1):
                rem[top - dd + i] -= q * dc[i]
        if any(rem):
            raise ValueError("division is not exact: nonzero remainder")
        return Polynomial.of(qout)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            elif d == 1:
                term = "x" if mag == 1 else f"{mag}x"
            else:
                term = f"x^{d}" if mag == 1 else f"{mag}x^{d}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[str]:
        """Decimal strings ascending by degree, safe for any JSON reader."""
        return [str(c) for c in self.coeffs]


ZERO = Polynomial(())
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def factor_product(factors: Iterable[Polynomial]) -> Polynomial:
    """Product of the given polynomials; empty input yields the constant 1."""
    result = ONE
    for f in factors:
        result = result * f
    return result


def integer_roots(p: Polynomial) -> set[int]:
    """All integer roots of a nonzero polynomial.

    Strips powers of x, then tests the divisors of the trailing nonzero
    coefficient (any integer root divides it).
    """
    if p.is_zero():
        raise ValueError("integer_roots: zero polynomial has every root")
    coeffs = list(p.coeffs)
    roots: set[int] = set()
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low > 0:
        roots.add(0)
        coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots
    tail = abs(coeffs[0])
    stripped = Polynomial.of(coeffs)
    d = 1
    while d * d <= tail:
        if tail % d == 0:
            for cand in (d, -d, tail // d, -(tail // d)):
                if stripped.eval_at(cand) == 0:
                    roots.add(cand)
        d += 1
    return roots
