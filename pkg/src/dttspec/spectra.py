"""Analytic eigenvalues with multiplicities for the eight transform kinds.

Five kinds have exactly two distinct eigenvalues +-sqrt(r):

    DCT4, DST4   r = n/2          DCT8, DST5   r = (2n+1)/4
    DST1         r = (n+1)/2

with multiplicities (n/2, n/2) for even n and ((n-1)/2, (n+1)/2) for odd n
(the positive eigenvalue is the more frequent one).

DCT5 and DST8 add two simple eigenvalues c -+ sqrt(n - 7/16) around the
+-sqrt((2n-1)/4) pair, where c = 1/4 for DCT5 and c = -(-1)^n/4 for DST8;
the paired multiplicities become (n/2 - 1, n/2 - 1) for even n and
((n-3)/2, (n-1)/2) for odd n.

DCT1 has six distinct eigenvalues; for odd n

    -sqrt(n-1) : 1            1/2 -+ sqrt(n - 3/4) : 1 each
    +-sqrt((n-1)/2) : (n-5)/2 and (n-3)/2          sqrt(n-1) : 1

and for even n

    +-sqrt(2)/4 -+ sqrt(n - 7/8) : 1 each    +-sqrt((n-1)/2) : n/2 - 2 each.

For very small orders some table entries coincide or carry zero or negative
multiplicity.  The builder keeps the raw signed entries, merges entries
whose values agree exactly (decided in the radical arithmetic of
:mod:`dttspec.radicals`, never by floating-point comparison), drops emptied
entries, and validates that what remains is a genuine spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateSpectrum
from .kinds import TransformKind
from .matrices import check_size
from .radicals import RadicalSum


@dataclass(frozen=True)
class EigenPair:
    value: float
    multiplicity: int


@dataclass(frozen=True)
class SpectrumSpec:
    """Distinct eigenvalues in ascending order; multiplicities sum to n."""

    kind: TransformKind
    n: int
    pairs: tuple[EigenPair, ...]


def _two_value_entries(radicand: Fraction, n: int) -> list[tuple[RadicalSum, int]]:
    root = RadicalSum.sqrt(radicand)
    if n % 2 == 0:
        neg, pos = n // 2, n // 2
    else:
        neg, pos = (n - 1) // 2, (n + 1) // 2
    return [(-root, neg), (root, pos)]


def _four_value_entries(center: RadicalSum, n: int) -> list[tuple[RadicalSum, int]]:
    wide = RadicalSum.sqrt(Fraction(16 * n - 7, 16))
    root = RadicalSum.sqrt(Fraction(2 * n - 1, 4))
    if n % 2 == 0:
        neg = pos = n // 2 - 1
    else:
        neg, pos = (n - 3) // 2, (n - 1) // 2
    return [(center - wide, 1), (-root, neg), (root, pos), (center + wide, 1)]


def _raw_entries(kind: TransformKind, n: int) -> list[tuple[RadicalSum, int]]:
    if kind in (TransformKind.DCT4, TransformKind.DST4):
        return _two_value_entries(Fraction(n, 2), n)
    if kind in (TransformKind.DCT8, TransformKind.DST5):
        return _two_value_entries(Fraction(2 * n + 1, 4), n)
    if kind is TransformKind.DST1:
        return _two_value_entries(Fraction(n + 1, 2), n)
    if kind is TransformKind.DCT5:
        return _four_value_entries(RadicalSum.rational(Fraction(1, 4)), n)
    if kind is TransformKind.DST8:
        center = Fraction(1, 4) if n % 2 == 1 else Fraction(-1, 4)
        return _four_value_entries(RadicalSum.rational(center), n)
    # DCT1
    half_root = RadicalSum.sqrt(Fraction(n - 1, 2))
    if n % 2 == 1:
        outer = RadicalSum.sqrt(Fraction(n - 1))
        wide = RadicalSum.sqrt(Fraction(4 * n - 3, 4))
        half = RadicalSum.rational(Fraction(1, 2))
        return [
            (-outer, 1),
            (half - wide, 1),
            (-half_root, (n - 5) // 2),
            (half_root, (n - 3) // 2),
            (outer, 1),
            (half + wide, 1),
        ]
    shift = RadicalSum.sqrt(Fraction(1, 8))  # sqrt(2)/4
    wide = RadicalSum.sqrt(Fraction(8 * n - 7, 8))
    return [
        (-shift - wide, 1),
        (shift - wide, 1),
        (-half_root, n // 2 - 2),
        (half_root, n // 2 - 2),
        (-shift + wide, 1),
        (shift + wide, 1),
    ]


def analytic_spectrum(kind: TransformKind, n: int) -> SpectrumSpec:
    """Merged, validated spectrum of ``build_matrix(kind, n)``."""
    check_size(kind, n)
    merged: dict[RadicalSum, int] = {}
    for value, mult in _raw_entries(kind, n):
        merged[value] = merged.get(value, 0) + mult
    pairs = []
    total = 0
    for value, mult in merged.items():
        if mult == 0:
            continue
        if mult < 0:
            raise DegenerateSpectrum(
                f"{kind.cli_name} n={n}: merged multiplicity {mult} < 0"
            )
        pairs.append(EigenPair(value=value.value(), multiplicity=mult))
        total += mult
    if total != n:
        raise DegenerateSpectrum(
            f"{kind.cli_name} n={n}: multiplicities sum to {total}, expected {n}"
        )
    pairs.sort(key=lambda p: p.value)
    return SpectrumSpec(kind=kind, n=n, pairs=tuple(pairs))


def distinct_eigenvalue_count(kind: TransformKind, n: int) -> int:
    return len(analytic_spectrum(kind, n).pairs)
