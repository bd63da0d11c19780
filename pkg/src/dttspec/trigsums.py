"""Closed-form trigonometric sum identities with direct-summation oracles.

Six cosine-sum identities derived from Lagrange's trigonometric identity
(free integer parameter ``a`` or ``b``, structural parameter ``n``):

    Lag1  sum_{m=0}^{n}   cos(m*a*pi/n)          = (1 + (-1)^a)/2,  2n   not | a
    Lag2  sum_{m=0}^{n}   cos(2*m*b*pi/(2n+1))   = 1/2,             2n+1 not | b
    Id1   sum_{m=0}^{n-1} cos((2m+1)*a*pi/(2n))  = 0,               2n   not | a
    Id2   sum_{m=0}^{n-1} cos((2m+1)*a*pi/(2n+1))= (-1)^(a+1)/2,    2n+1 not | a
    Id3   sum_{m=1}^{n}   cos(m*a*pi/(n+1))      = -((-1)^a + 1)/2, 2n+2 not | a
    Id4   sum_{m=0}^{n-1} cos(2(m+1)*a*pi/(2n+1))= -1/2,            2n+1 not | a

plus the two quadratic Gauss-type sums (structural parameter ``m``):

    GaussCos  sum_{k=0}^{m-1} cos(2*k^2*pi/m) = (sqrt(m)/2)(1 + cos(m*pi/2) + sin(m*pi/2))
    GaussSin  sum_{k=0}^{m-1} sin(2*k^2*pi/m) = (sqrt(m)/2)(1 + cos(m*pi/2) - sin(m*pi/2))

cos(m*pi/2) and sin(m*pi/2) are selected exactly from m mod 4, never from
floating-point trig of large arguments.

The direct-summation oracle evaluates each term at its exactly-reduced angle
(integer numerator taken modulo twice the denominator before multiplying by
pi/denominator) and accumulates term by term.  Consequences used by the test
suite: the oracle value depends on the free parameter only through its
residue modulo twice the denominator, is even in the parameter, and is
mirror-symmetric in the residue.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisibilityViolation


class IdentityId(enum.Enum):
    LAG1 = "lag1"
    LAG2 = "lag2"
    ID1 = "id1"
    ID2 = "id2"
    ID3 = "id3"
    ID4 = "id4"
    GAUSS_COS = "gauss_cos"
    GAUSS_SIN = "gauss_sin"

    @property
    def takes_free_parameter(self) -> bool:
        return self not in (IdentityId.GAUSS_COS, IdentityId.GAUSS_SIN)


@dataclass(frozen=True)
class SumParams:
    """Structural parameter (n, or m for the Gauss sums) plus free parameter."""

    n_or_m: int
    a_or_b: int | None = None


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"structural parameter must be >= 1, got {n}")


def _check_divisibility(modulus: int, a: int) -> None:
    if a % modulus == 0:
        raise DivisibilityViolation(
            f"free parameter {a} is a multiple of {modulus}"
        )


def lag1(n: int, a: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n, a)
    return 1.0 if a % 2 == 0 else 0.0


def lag2(n: int, b: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n + 1, b)
    return 0.5


def id1(n: int, a: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n, a)
    return 0.0


def id2(n: int, a: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n + 1, a)
    return 0.5 if a % 2 == 1 else -0.5


def id3(n: int, a: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n + 2, a)
    return 0.0 if a % 2 == 1 else -1.0


def id4(n: int, a: int) -> float:
    _require_positive(n)
    _check_divisibility(2 * n + 1, a)
    return -0.5


_QUARTER_TURNS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # (cos, sin) of m*pi/2 by m mod 4


def gauss_cos(m: int) -> float:
    _require_positive(m)
    c, s = _QUARTER_TURNS[m % 4]
    return math.sqrt(m) / 2.0 * (1 + c + s)


def gauss_sin(m: int) -> float:
    _require_positive(m)
    c, s = _QUARTER_TURNS[m % 4]
    return math.sqrt(m) / 2.0 * (1 + c - s)


def closed_form(ident: IdentityId, params: SumParams) -> float:
    """Closed-form value for the identity at the given parameters."""
    n, a = params.n_or_m, params.a_or_b
    if ident is IdentityId.GAUSS_COS:
        return gauss_cos(n)
    if ident is IdentityId.GAUSS_SIN:
        return gauss_sin(n)
    if a is None:
        raise ValueError(f"{ident.value} needs a free integer parameter")
    fn = {
        IdentityId.LAG1: lag1,
        IdentityId.LAG2: lag2,
        IdentityId.ID1: id1,
        IdentityId.ID2: id2,
        IdentityId.ID3: id3,
        IdentityId.ID4: id4,
    }[ident]
    return fn(n, a)


# Per-identity structure: argument denominator, forbidden modulus for the free
# parameter, number of summands, and the integer term coefficients that the
# free parameter multiplies inside the numerator.

def denominator(ident: IdentityId, n: int) -> int:
    return {
        IdentityId.LAG1: n,
        IdentityId.LAG2: 2 * n + 1,
        IdentityId.ID1: 2 * n,
        IdentityId.ID2: 2 * n + 1,
        IdentityId.ID3: n + 1,
        IdentityId.ID4: 2 * n + 1,
        IdentityId.GAUSS_COS: n,
        IdentityId.GAUSS_SIN: n,
    }[ident]


def forbidden_modulus(ident: IdentityId, n: int) -> int:
    return {
        IdentityId.LAG1: 2 * n,
        IdentityId.LAG2: 2 * n + 1,
        IdentityId.ID1: 2 * n,
        IdentityId.ID2: 2 * n + 1,
        IdentityId.ID3: 2 * n + 2,
        IdentityId.ID4: 2 * n + 1,
    }[ident]


def term_count(ident: IdentityId, n: int) -> int:
    if ident in (IdentityId.LAG1, IdentityId.LAG2):
        return n + 1
    return n  # Id1..Id4 sum n terms, the Gauss sums m terms


def _term_coefficients(ident: IdentityId, n: int) -> np.ndarray:
    m = np.arange(term_count(ident, n), dtype=np.int64)
    return {
        IdentityId.LAG1: m,
        IdentityId.LAG2: 2 * m,
        IdentityId.ID1: 2 * m + 1,
        IdentityId.ID2: 2 * m + 1,
        IdentityId.ID3: m + 1,
        IdentityId.ID4: 2 * (m + 1),
    }[ident]


def _angle_table(ident: IdentityId, n: int) -> np.ndarray:
    """cos (or sin) of j*pi/den for j = 0..2*den-1, built mirror-symmetric.

    The upper half is filled from the lower half (cos(2*pi - x) = cos(x),
    sin(2*pi - x) = -sin(x)), so table symmetry is exact to the bit.
    """
    den = denominator(ident, n)
    half = np.arange(den + 1, dtype=np.int64) * (np.pi / den)
    tbl = np.empty(2 * den, dtype=np.float64)
    if ident is IdentityId.GAUSS_SIN:
        tbl[: den + 1] = np.sin(half)
        tbl[den + 1:] = -tbl[1:den][::-1]
    else:
        tbl[: den + 1] = np.cos(half)
        tbl[den + 1:] = tbl[1:den][::-1]
    return tbl


def direct_sum(ident: IdentityId, params: SumParams) -> float:
    """Term-by-term summation of the identity's left-hand side (the oracle)."""
    n = params.n_or_m
    _require_positive(n)
    tbl = _angle_table(ident, n)
    period = tbl.size
    if ident.takes_free_parameter:
        a = params.a_or_b
        if a is None:
            raise ValueError(f"{ident.value} needs a free integer parameter")
        _check_divisibility(forbidden_modulus(ident, n), a)
        nums = _term_coefficients(ident, n) * (a % period)
    else:
        k = np.arange(n, dtype=np.int64)
        nums = 2 * k * k
    return float(tbl[nums % period].sum())


def max_abs_deviation(ident: IdentityId, n: int) -> float:
    """Max |closed form - direct sum| over every admissible residue class.

    For the Gauss sums there is nothing to sweep and the single deviation at
    ``m = n`` is returned.  For the others, residues g = 1 .. period/2 of the
    free parameter are summed in one vectorized pass; the remaining residues
    and all values beyond one period reduce to these bit-for-bit (see module
    docstring), so this deviation bounds the whole parameter range.
    """
    _require_positive(n)
    tbl = _angle_table(ident, n)
    period = tbl.size
    if not ident.takes_free_parameter:
        return abs(closed_form(ident, SumParams(n)) - direct_sum(ident, SumParams(n)))
    forbidden = forbidden_modulus(ident, n)
    residues = np.arange(1, period // 2 + 1, dtype=np.int64)
    residues = residues[residues % forbidden != 0]
    if residues.size == 0:
        return 0.0
    coeffs = _term_coefficients(ident, n).astype(np.int32).reshape(-1, 1)
    idx = (coeffs * residues.astype(np.int32)) % np.int32(period)
    sums = tbl[idx].sum(axis=0)
    # closed forms depend on the free parameter only through its parity
    expected = np.empty(residues.size, dtype=np.float64)
    for parity in (0, 1):
        mask = residues % 2 == parity
        if mask.any():
            representative = int(residues[mask][0])
            expected[mask] = closed_form(ident, SumParams(n, representative))
    return float(np.max(np.abs(sums - expected)))
