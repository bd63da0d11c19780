"""Closed forms for the square and the trace of each transform matrix.

Squares: five kinds square to a multiple of the identity,

    DCT4^2 = DST4^2 = (n/2) I        DST1^2 = ((n+1)/2) I
    DCT8^2 = DST5^2 = ((2n+1)/4) I

and the remaining three square to a constant-block perturbation of a
diagonal matrix:

    DCT1^2:  off-diagonal (1 + (-1)^(k+l))/2, diagonal (n+1)/2 with the two
             corners equal to n
    DCT5^2:  off-diagonal 1/2, diagonal (2n+1)/4 with the first entry n
    DST8^2:  off-diagonal (-1)^(k+l)/2, diagonal (2n+1)/4 with the last
             entry n

Traces, split by parity of n:

    kind        even n   odd n
    DCT1        0        (2 + sqrt(2n-2))/2
    DCT4, DST4  0        sqrt(n/2)
    DCT5        1/2      (1 + sqrt(2n-1))/2
    DCT8, DST5  0        sqrt(2n+1)/2
    DST1        0        sqrt((n+1)/2)
    DST8        -1/2     (1 + sqrt(2n-1))/2

The DST8 off-diagonal sign pattern is (-1)^(k+l)/2; the alternating product
form (-1)^(k*l) fails the dense-product oracle (already at k = l = 1) and is
rejected here.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .kinds import TransformKind
from .matrices import check_size


class PerturbationPattern(enum.Enum):
    """Off-diagonal structure of a squared transform matrix.

    NONE             zero off the diagonal
    ALL_ONES_HALF    1/2 everywhere, diagonal included
    PARITY           (1 + (-1)^(k+l))/2 everywhere, diagonal included
    ALTERNATING_HALF (-1)^(k+l)/2 strictly off the diagonal; the matching
                     diagonal contribution is folded into the diagonal vector
    """

    NONE = "none"
    ALL_ONES_HALF = "all_ones_half"
    PARITY = "parity"
    ALTERNATING_HALF = "alternating_half"


@dataclass(frozen=True)
class SquareClosedForm:
    """Structured description of A^2: stored diagonal plus a perturbation.

    ``diagonal`` holds whatever part of the squared matrix's diagonal the
    perturbation pattern does not contribute.
    """

    kind: TransformKind
    n: int
    diagonal: np.ndarray
    perturbation: PerturbationPattern

    def __post_init__(self):
        self.diagonal.setflags(write=False)


def square_closed_form(kind: TransformKind, n: int) -> SquareClosedForm:
    check_size(kind, n)
    if kind is TransformKind.DCT1:
        diag = np.full(n, (n - 1) / 2.0)
        diag[0] = diag[-1] = float(n - 1)
        return SquareClosedForm(kind, n, diag, PerturbationPattern.PARITY)
    if kind is TransformKind.DCT5:
        diag = np.full(n, (2 * n - 1) / 4.0)
        diag[0] = (2 * n - 1) / 2.0
        return SquareClosedForm(kind, n, diag, PerturbationPattern.ALL_ONES_HALF)
    if kind is TransformKind.DST8:
        diag = np.full(n, (2 * n + 1) / 4.0)
        diag[-1] = float(n)
        return SquareClosedForm(kind, n, diag, PerturbationPattern.ALTERNATING_HALF)
    constant = {
        TransformKind.DCT4: n / 2.0,
        TransformKind.DST4: n / 2.0,
        TransformKind.DST1: (n + 1) / 2.0,
        TransformKind.DCT8: (2 * n + 1) / 4.0,
        TransformKind.DST5: (2 * n + 1) / 4.0,
    }[kind]
    return SquareClosedForm(kind, n, np.full(n, constant), PerturbationPattern.NONE)


def materialize(form: SquareClosedForm) -> np.ndarray:
    """Dense n x n matrix described by the closed form."""
    n = form.n
    if form.perturbation is PerturbationPattern.NONE:
        out = np.zeros((n, n))
    elif form.perturbation is PerturbationPattern.ALL_ONES_HALF:
        out = np.full((n, n), 0.5)
    else:
        k = np.arange(n).reshape(-1, 1)
        l = np.arange(n).reshape(1, -1)
        signs = np.where((k + l) % 2 == 0, 1.0, -1.0)
        if form.perturbation is PerturbationPattern.PARITY:
            out = (1.0 + signs) / 2.0
        else:  # ALTERNATING_HALF: diagonal already folded into the vector
            out = signs / 2.0
            np.fill_diagonal(out, 0.0)
    out[np.arange(n), np.arange(n)] += form.diagonal
    return out


@dataclass(frozen=True)
class TraceValue:
    kind: TransformKind
    n: int
    value: float


def trace_closed_form(kind: TransformKind, n: int) -> TraceValue:
    check_size(kind, n)
    odd = n % 2 == 1
    if kind is TransformKind.DCT1:
        value = (2.0 + math.sqrt(2 * n - 2)) / 2.0 if odd else 0.0
    elif kind in (TransformKind.DCT4, TransformKind.DST4):
        value = math.sqrt(n / 2.0) if odd else 0.0
    elif kind is TransformKind.DCT5:
        value = (1.0 + math.sqrt(2 * n - 1)) / 2.0 if odd else 0.5
    elif kind in (TransformKind.DCT8, TransformKind.DST5):
        value = math.sqrt(2 * n + 1) / 2.0 if odd else 0.0
    elif kind is TransformKind.DST1:
        value = math.sqrt((n + 1) / 2.0) if odd else 0.0
    else:  # DST8
        value = (1.0 + math.sqrt(2 * n - 1)) / 2.0 if odd else -0.5
    return TraceValue(kind=kind, n=n, value=value)
