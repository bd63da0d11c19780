"""Construction of the eight symmetric DTT matrices and dense helpers.

Entry formulas, with zero-based row index k and column index l (0..n-1):

    DCT1  cos(k*l*pi / (n-1))            DST1  sin((k+1)(l+1)*pi / (n+1))
    DCT4  cos((2k+1)(2l+1)*pi / 4n)      DST4  sin((2k+1)(2l+1)*pi / 4n)
    DCT5  cos(2*k*l*pi / (2n-1))         DST5  sin(2(k+1)(l+1)*pi / (2n+1))
    DCT8  cos((2k+1)(2l+1)*pi / (4n+2))  DST8  sin((2k+1)(2l+1)*pi / (4n-2))

The integer numerator is reduced modulo twice the denominator before the
multiplication by pi/denominator, which keeps the trig argument below 2*pi
and the entry error near one ulp even for large k*l.  Because the reduced
numerator is symmetric in (k, l), the produced matrix is bitwise symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, SizeTooSmall
from .kinds import TransformKind


@dataclass(frozen=True)
class DttMatrix:
    """Dense symmetric transform matrix tagged with its kind and order."""

    kind: TransformKind
    n: int
    entries: np.ndarray

    def __post_init__(self):
        self.entries.setflags(write=False)


def _numerators_and_denominator(kind: TransformKind, n: int) -> tuple[np.ndarray, int]:
    k = np.arange(n, dtype=np.int64).reshape(-1, 1)
    l = np.arange(n, dtype=np.int64).reshape(1, -1)
    if kind is TransformKind.DCT1:
        return k * l, n - 1
    if kind is TransformKind.DCT4:
        return (2 * k + 1) * (2 * l + 1), 4 * n
    if kind is TransformKind.DCT5:
        return 2 * k * l, 2 * n - 1
    if kind is TransformKind.DCT8:
        return (2 * k + 1) * (2 * l + 1), 4 * n + 2
    if kind is TransformKind.DST1:
        return (k + 1) * (l + 1), n + 1
    if kind is TransformKind.DST4:
        return (2 * k + 1) * (2 * l + 1), 4 * n
    if kind is TransformKind.DST5:
        return 2 * (k + 1) * (l + 1), 2 * n + 1
    if kind is TransformKind.DST8:
        return (2 * k + 1) * (2 * l + 1), 4 * n - 2
    raise ValueError(f"unhandled kind {kind}")


def check_size(kind: TransformKind, n: int) -> None:
    if n < kind.min_size:
        raise SizeTooSmall(
            f"{kind.cli_name} needs n >= {kind.min_size}, got n = {n}"
        )


def build_matrix(kind: TransformKind, n: int) -> DttMatrix:
    """Evaluate the entry formula for ``kind`` at order ``n``."""
    check_size(kind, n)
    num, den = _numerators_and_denominator(kind, n)
    angles = (num % (2 * den)) * (np.pi / den)
    trig = np.cos if kind.family == "cosine" else np.sin
    return DttMatrix(kind=kind, n=n, entries=trig(angles))


def matrix_diagonal(kind: TransformKind, n: int) -> np.ndarray:
    """Diagonal of ``build_matrix(kind, n)`` without materializing the matrix.

    Uses the identical reduced-argument expression, so the result is bitwise
    equal to ``build_matrix(kind, n).entries.diagonal()``.
    """
    check_size(kind, n)
    num, den = _numerators_and_denominator(kind, n)
    diag_num = num.diagonal()
    angles = (diag_num % (2 * den)) * (np.pi / den)
    trig = np.cos if kind.family == "cosine" else np.sin
    return trig(angles)


def apply(m: DttMatrix, v: np.ndarray) -> np.ndarray:
    """Matrix-vector product in 64-bit floating point."""
    v = np.asarray(v, dtype=np.float64)
    if v.shape != (m.n,):
        raise DimensionMismatch(f"vector of length {v.shape} against order {m.n}")
    return m.entries @ v


def _as_square_array(a) -> np.ndarray:
    arr = a.entries if isinstance(a, DttMatrix) else np.asarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    return arr


def matrix_multiply(a, b) -> np.ndarray:
    """Plain dense product of two equal-order square matrices.

    No algebraic shortcuts: this is the oracle side against which the
    closed-form squares are checked.
    """
    aa, bb = _as_square_array(a), _as_square_array(b)
    if aa.shape != bb.shape:
        raise DimensionMismatch(f"orders differ: {aa.shape[0]} vs {bb.shape[0]}")
    return aa @ bb
