"""Invariant subspaces and analytic eigenvectors for DCT1, DCT5 and DST8.

These are the three kinds whose square is not a multiple of the identity.
For each, R^n splits into a high-multiplicity constraint subspace V1 on
which A^2 acts as a constant, plus one or two 2-dimensional subspaces
spanned by generator pairs (q1, q2) on which A acts by

    A q1 = a q1 + b q2        A q2 = c q1 + d q2.

Solving A (q1 + x q2) = lambda (q1 + x q2) on such a pair yields the
simple (multiplicity-1) eigenvalues together with explicit eigenvectors.

Constraint subspaces (coordinates are zero-based):

    DCT5  v[0] = 0 and sum(v) = 0;                  A^2 v = (2n-1)/4 v
    DST8  v[n-1] = 0 and alternating sum = 0;       A^2 v = (2n-1)/4 v
    DCT1  v[0] = v[n-1] = 0, even-indexed sum = 0,
          odd-indexed sum = 0;                      A^2 v = (n-1)/2 v

Generator pairs and their exact action coefficients (a, b, c, d):

    dct5          q1 = e0, q2 = (0, 1, ..., 1)
                  (1, 1, n-1, -1/2)
    dst8          q1 = e_{n-1}, q2 = (+1, -1, ..., (-1)^n, 0)
                  ((-1)^(n-1), 1, n-1, (-1)^n/2)
    dct1_odd_V2   q1 = e0 - e_{n-1}, q2 = ones at odd indices
                  (0, 2, (n-1)/2, 0)
    dct1_odd_V3   q1 = e0 + e_{n-1}, q2 = ones at even interior indices
                  (2, 2, (n-3)/2, -1)
    dct1_even_V2  q1 = e0 + (sqrt(2)-1) e_{n-1},
                  q2 interior: sqrt(2)+1 at even indices, 1 at odd
                  (sqrt(2), 2-sqrt(2), (n-2)(1+sqrt(2)/2), -sqrt(2)/2)
    dct1_even_V3  q1 = e0 - (sqrt(2)+1) e_{n-1},
                  q2 interior: 1-sqrt(2) at even indices, 1 at odd
                  (-sqrt(2), 2+sqrt(2), (n-2)(1-sqrt(2)/2), sqrt(2)/2)

Every coefficient above is re-derived at runtime by projecting A q1 and
A q2 onto span{q1, q2} (a 2x2 Gram system), so the table doubles as an
oracle-checked claim rather than an assumption.  Several published variants
of the even-order generators (last component sqrt(2)+1 on the V2 side, the
sqrt(2) adjustment placed on odd interior indices, and a V3 coefficient of
-(n-2) sqrt(2)/2) fail that projection with O(n) residuals and are
deliberately not used; the constructions here leave residuals at the
rounding level for every admissible order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSystem, NotInvariant, SizeTooSmall
from .kinds import TransformKind
from .matrices import DttMatrix, build_matrix

_SQRT2 = math.sqrt(2.0)


class QCase(enum.Enum):
    DCT5 = "dct5"
    DST8 = "dst8"
    DCT1_ODD_V2 = "dct1_odd_V2"
    DCT1_ODD_V3 = "dct1_odd_V3"
    DCT1_EVEN_V2 = "dct1_even_V2"
    DCT1_EVEN_V3 = "dct1_even_V3"

    @property
    def kind(self) -> TransformKind:
        if self is QCase.DCT5:
            return TransformKind.DCT5
        if self is QCase.DST8:
            return TransformKind.DST8
        return TransformKind.DCT1


@dataclass(frozen=True)
class QPair:
    kind: TransformKind
    n: int
    case: QCase
    q1: np.ndarray
    q2: np.ndarray


@dataclass(frozen=True)
class ActionCoeffs:
    """Coefficients of A q1 = a q1 + b q2, A q2 = c q1 + d q2.

    ``residual`` is the larger max-norm reconstruction error of the two
    projections (zero for the analytic expectation table).
    """

    a: float
    b: float
    c: float
    d: float
    residual: float = 0.0


@dataclass(frozen=True)
class V1Basis:
    kind: TransformKind
    n: int
    vectors: tuple[np.ndarray, ...]


def v1_action_constant(kind: TransformKind, n: int) -> float:
    """Constant c with A^2 v = c v on the constraint subspace."""
    if kind is TransformKind.DCT1:
        return (n - 1) / 2.0
    if kind in (TransformKind.DCT5, TransformKind.DST8):
        return (2 * n - 1) / 4.0
    raise ValueError(f"{kind.cli_name} has no constraint subspace")


def v1_basis(kind: TransformKind, n: int) -> V1Basis:
    """Difference-vector basis of the constraint subspace."""
    eye = np.eye(n)
    if kind is TransformKind.DCT5:
        if n < 3:
            raise SizeTooSmall(f"dct5 constraint subspace needs n >= 3, got {n}")
        vectors = tuple(eye[j] - eye[j + 1] for j in range(1, n - 1))
    elif kind is TransformKind.DST8:
        if n < 3:
            raise SizeTooSmall(f"dst8 constraint subspace needs n >= 3, got {n}")
        # consecutive sums cancel in the alternating-sign constraint
        vectors = tuple(eye[j] + eye[j + 1] for j in range(0, n - 2))
    elif kind is TransformKind.DCT1:
        if n < 5:
            raise SizeTooSmall(f"dct1 constraint subspace needs n >= 5, got {n}")
        # skip-one differences stay inside one parity class
        vectors = tuple(eye[j] - eye[j + 2] for j in range(1, n - 3))
    else:
        raise ValueError(f"{kind.cli_name} has no constraint subspace")
    return V1Basis(kind=kind, n=n, vectors=vectors)


def _require(condition: bool, case: QCase, n: int, why: str) -> None:
    if not condition:
        raise SizeTooSmall(f"{case.value} is undefined for n = {n}: {why}")


def q_pair(case: QCase, n: int) -> QPair:
    """Generator pair of the 2-dimensional invariant subspace for ``case``."""
    eye = np.eye(n) if n >= 1 else None
    if case is QCase.DCT5:
        _require(n >= 2, case, n, "q2 would be the zero vector")
        q1 = eye[0]
        q2 = np.ones(n)
        q2[0] = 0.0
    elif case is QCase.DST8:
        _require(n >= 2, case, n, "q2 would be the zero vector")
        q1 = eye[n - 1]
        q2 = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
        q2[n - 1] = 0.0
    elif case is QCase.DCT1_ODD_V2:
        _require(n >= 3 and n % 2 == 1, case, n, "needs odd n >= 3")
        q1 = eye[0] - eye[n - 1]
        q2 = np.zeros(n)
        q2[1:n - 1:2] = 1.0
    elif case is QCase.DCT1_ODD_V3:
        _require(n >= 5 and n % 2 == 1, case, n, "needs odd n >= 5")
        q1 = eye[0] + eye[n - 1]
        q2 = np.zeros(n)
        q2[2:n - 2:2] = 1.0
    elif case is QCase.DCT1_EVEN_V2:
        _require(n >= 4 and n % 2 == 0, case, n, "needs even n >= 4")
        q1 = eye[0] + (_SQRT2 - 1.0) * eye[n - 1]
        q2 = np.ones(n)
        q2[0] = q2[n - 1] = 0.0
        q2[2:n - 1:2] += _SQRT2
    else:  # DCT1_EVEN_V3
        _require(n >= 4 and n % 2 == 0, case, n, "needs even n >= 4")
        q1 = eye[0] - (_SQRT2 + 1.0) * eye[n - 1]
        q2 = np.ones(n)
        q2[0] = q2[n - 1] = 0.0
        q2[2:n - 1:2] -= _SQRT2
    return QPair(kind=case.kind, n=n, case=case, q1=q1, q2=q2)


def q_cases_for(kind: TransformKind, n: int) -> tuple[QCase, ...]:
    """Generator-pair cases admissible for (kind, n); empty if none."""
    if kind is TransformKind.DCT5:
        return (QCase.DCT5,) if n >= 2 else ()
    if kind is TransformKind.DST8:
        return (QCase.DST8,) if n >= 2 else ()
    if kind is TransformKind.DCT1:
        if n % 2 == 1 and n >= 5:
            return (QCase.DCT1_ODD_V2, QCase.DCT1_ODD_V3)
        if n % 2 == 0 and n >= 4:
            return (QCase.DCT1_EVEN_V2, QCase.DCT1_EVEN_V3)
    return ()


def expected_action_coeffs(case: QCase, n: int) -> ActionCoeffs:
    """Analytic (a, b, c, d) for ``case`` at order ``n``."""
    if case is QCase.DCT5:
        return ActionCoeffs(1.0, 1.0, n - 1.0, -0.5)
    if case is QCase.DST8:
        sign = -1.0 if n % 2 == 0 else 1.0
        return ActionCoeffs(sign, 1.0, n - 1.0, -sign / 2.0)
    if case is QCase.DCT1_ODD_V2:
        return ActionCoeffs(0.0, 2.0, (n - 1) / 2.0, 0.0)
    if case is QCase.DCT1_ODD_V3:
        return ActionCoeffs(2.0, 2.0, (n - 3) / 2.0, -1.0)
    if case is QCase.DCT1_EVEN_V2:
        return ActionCoeffs(_SQRT2, 2.0 - _SQRT2, (n - 2) * (1.0 + _SQRT2 / 2.0), -_SQRT2 / 2.0)
    return ActionCoeffs(-_SQRT2, 2.0 + _SQRT2, (n - 2) * (1.0 - _SQRT2 / 2.0), _SQRT2 / 2.0)


def _project_onto_pair(q1: np.ndarray, q2: np.ndarray, y: np.ndarray) -> tuple[float, float, float]:
    """Least-squares coefficients (u, w) with y ~ u q1 + w q2, plus residual."""
    g11, g12, g22 = q1 @ q1, q1 @ q2, q2 @ q2
    det = g11 * g22 - g12 * g12
    r1, r2 = q1 @ y, q2 @ y
    u = (g22 * r1 - g12 * r2) / det
    w = (g11 * r2 - g12 * r1) / det
    residual = float(np.max(np.abs(y - u * q1 - w * q2)))
    return float(u), float(w), residual


def action_coeffs(pair: QPair, matrix: DttMatrix | None = None) -> ActionCoeffs:
    """Measure how the transform acts on span{q1, q2}.

    Projects A q1 and A q2 onto the span through the 2x2 Gram system, so the
    returned coefficients are evidence, independent of the analytic table in
    :func:`expected_action_coeffs`.  Raises :class:`NotInvariant` when either
    image leaves the span by more than 1e-9 * n in max norm.
    """
    if matrix is None:
        matrix = build_matrix(pair.kind, pair.n)
    a, b, res1 = _project_onto_pair(pair.q1, pair.q2, matrix.entries @ pair.q1)
    c, d, res2 = _project_onto_pair(pair.q1, pair.q2, matrix.entries @ pair.q2)
    residual = max(res1, res2)
    if residual > 1e-9 * pair.n:
        raise NotInvariant(
            f"{pair.case.value} n={pair.n}: span leak {residual:.3e}"
        )
    return ActionCoeffs(a=a, b=b, c=c, d=d, residual=residual)


def reduced_eigen(coeffs: ActionCoeffs) -> tuple[tuple[float, float], tuple[float, float]]:
    """Eigenvalues of the 2x2 action with eigenvectors q1 + x q2.

    Returns two (eigenvalue, x) pairs in ascending eigenvalue order.
    """
    a, b, c, d = coeffs.a, coeffs.b, coeffs.c, coeffs.d
    scale = max(abs(a), abs(b), abs(c), abs(d), 1.0)
    disc = (a - d) * (a - d) + 4.0 * b * c
    if disc < 0.0 or (disc <= (1e-12 * scale) ** 2 and (abs(b) > 1e-12 * scale or abs(c) > 1e-12 * scale)):
        raise DegenerateSystem(f"2x2 action is defective: disc = {disc:.3e}")
    root = math.sqrt(max(disc, 0.0))
    out = []
    for lam in ((a + d - root) / 2.0, (a + d + root) / 2.0):
        if abs(c) > 1e-15 * scale:
            x = (lam - a) / c
        elif abs(lam - d) > 1e-15 * scale:
            x = b / (lam - d)
        else:
            x = 0.0  # diagonal action: q1 itself is the eigenvector
        out.append((lam, x))
    return out[0], out[1]


def analytic_eigenvectors(kind: TransformKind, n: int) -> list[tuple[float, np.ndarray]]:
    """All multiplicity-1 eigenpairs (lambda, q1 + x q2), ascending in lambda."""
    cases = q_cases_for(kind, n)
    if not cases:
        raise SizeTooSmall(
            f"{kind.cli_name} has no generator pairs at n = {n}"
        )
    matrix = build_matrix(kind, n)
    out = []
    for case in cases:
        pair = q_pair(case, n)
        for lam, x in reduced_eigen(action_coeffs(pair, matrix)):
            out.append((lam, pair.q1 + x * pair.q2))
    out.sort(key=lambda item: item[0])
    return out
