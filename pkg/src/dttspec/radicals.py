"""Exact arithmetic on rational combinations of integer square roots.

Numbers are kept as sums q_d * sqrt(d) over squarefree integers d, with the
rational part stored under d = 1.  Square roots of distinct squarefree
integers are linearly independent over the rationals, so two values are
equal exactly when their canonical forms coincide.  This is what makes the
small-order eigenvalue merges decidable without floating-point ties.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def split_square(m: int) -> tuple[int, int]:
    """Factor m >= 1 as f*f*d with d squarefree; returns (f, d)."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    f, d, p = 1, m, 2
    while p * p <= d:
        while d % (p * p) == 0:
            d //= p * p
            f *= p
        p += 1
    return f, d


@dataclass(frozen=True)
class RadicalSum:
    """Canonical sum of coeff * sqrt(radicand) terms, radicands squarefree."""

    terms: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def _from_dict(coeffs: dict[int, Fraction]) -> "RadicalSum":
        kept = {d: q for d, q in coeffs.items() if q != 0}
        return RadicalSum(tuple(sorted(kept.items())))

    @staticmethod
    def rational(q) -> "RadicalSum":
        return RadicalSum._from_dict({1: Fraction(q)})

    @staticmethod
    def sqrt(q) -> "RadicalSum":
        """Exact sqrt of a nonnegative rational."""
        q = Fraction(q)
        if q < 0:
            raise ValueError(f"cannot take a real square root of {q}")
        if q == 0:
            return RadicalSum(())
        # sqrt(p/r) = sqrt(p*r)/r
        f, d = split_square(q.numerator * q.denominator)
        return RadicalSum._from_dict({d: Fraction(f, q.denominator)})

    def __add__(self, other: "RadicalSum") -> "RadicalSum":
        coeffs = dict(self.terms)
        for d, q in other.terms:
            coeffs[d] = coeffs.get(d, Fraction(0)) + q
        return RadicalSum._from_dict(coeffs)

    def __sub__(self, other: "RadicalSum") -> "RadicalSum":
        return self + (-other)

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(tuple((d, -q) for d, q in self.terms))

    def value(self) -> float:
        return float(sum(float(q) * math.sqrt(d) for d, q in self.terms))
