"""Reconciliation engine: sweep (kind, n) cells and check every closed form.

Each check is recorded as a Claim carrying the measured residual and its
tolerance even when it passes, so reports double as regression artifacts.
A failed claim is data, not an exception.  Everything here is deterministic:
equal arguments produce byte-identical reports.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import closedforms, jacobi, spectra, subspaces, trigsums
from .kinds import ALL_KINDS, TransformKind
from .matrices import build_matrix, matrix_multiply


class ClaimId(enum.Enum):
    SQUARE_FORM = "SquareForm"
    TRACE_FORM = "TraceForm"
    SPECTRUM = "Spectrum"
    MULTIPLICITIES = "Multiplicities"
    V1_ACTION = "V1Action"
    Q_INVARIANCE = "QInvariance"
    EIGVEC_RESIDUAL = "EigvecResidual"
    IDENTITY_SUM = "IdentitySum"


@dataclass(frozen=True)
class Claim:
    id: ClaimId
    kind: str  # transform cli name, or identity tag for IdentitySum claims
    n: int
    measured: float
    tolerance: float
    passed: bool

    @staticmethod
    def make(cid: ClaimId, kind: str, n: int, measured: float, tolerance: float) -> "Claim":
        return Claim(cid, kind, n, measured, tolerance, measured <= tolerance)


@dataclass(frozen=True)
class Tolerances:
    square_scale: float = 1e-9      # * n, max-abs deviation of the squared matrix
    trace_scale: float = 1e-10      # * n
    spectrum_rel: float = 1e-9      # relative to max(1, |eigenvalue|)
    v1_scale: float = 1e-9          # * n
    action_scale: float = 1e-9      # * n; coefficient deviations enter scaled by n
    eigvec_scale: float = 1e-9      # * n, relative to the eigenvector max norm
    identity_scale: float = 1e-10   # * number of summands
    cluster_abs_scale: float = 1e-8  # * sqrt(n)
    cluster_rel: float = 1e-8

    def as_dict(self) -> dict:
        return {
            "square_scale": self.square_scale,
            "trace_scale": self.trace_scale,
            "spectrum_rel": self.spectrum_rel,
            "v1_scale": self.v1_scale,
            "action_scale": self.action_scale,
            "eigvec_scale": self.eigvec_scale,
            "identity_scale": self.identity_scale,
            "cluster_abs_scale": self.cluster_abs_scale,
            "cluster_rel": self.cluster_rel,
        }


@dataclass(frozen=True)
class SkipNote:
    kind: str
    n: int
    reason: str


@dataclass(frozen=True)
class VerificationReport:
    claims: tuple[Claim, ...]
    skipped: tuple[SkipNote, ...]
    config: dict = field(compare=False)

    @property
    def failures(self) -> tuple[Claim, ...]:
        return tuple(c for c in self.claims if not c.passed)

    def summary(self) -> dict:
        by_id: dict[str, dict[str, int]] = {}
        by_kind: dict[str, dict[str, int]] = {}
        for claim in self.claims:
            for bucket, key in ((by_id, claim.id.value), (by_kind, claim.kind)):
                row = bucket.setdefault(key, {"passed": 0, "failed": 0})
                row["passed" if claim.passed else "failed"] += 1
        return {
            "total": len(self.claims),
            "passed": sum(1 for c in self.claims if c.passed),
            "failed": len(self.failures),
            "by_id": by_id,
            "by_kind": by_kind,
        }

    def as_dict(self) -> dict:
        return {
            "claims": [
                {
                    "id": c.id.value,
                    "kind": c.kind,
                    "n": c.n,
                    "measured": c.measured,
                    "tolerance": c.tolerance,
                    "passed": c.passed,
                }
                for c in self.claims
            ],
            "skipped": [
                {"kind": s.kind, "n": s.n, "reason": s.reason} for s in self.skipped
            ],
            "summary": self.summary(),
            "config": self.config,
        }


def _spectrum_claims(kind: TransformKind, n: int, matrix, tol: Tolerances) -> list[Claim]:
    analytic = spectra.analytic_spectrum(kind, n).pairs
    solved = jacobi.jacobi_eigen(matrix.entries)
    tol_abs, tol_rel = jacobi.default_cluster_tolerances(n)
    clusters = jacobi.cluster_eigenvalues(solved.eigenvalues, tol_abs, tol_rel).clusters
    name = kind.cli_name
    if len(clusters) != len(analytic):
        # count mismatch: report both claims as failed with infinite residual
        return [
            Claim.make(ClaimId.SPECTRUM, name, n, math.inf, tol.spectrum_rel),
            Claim.make(ClaimId.MULTIPLICITIES, name, n, math.inf, 0.0),
        ]
    value_dev = max(
        abs(cl[0] - an.value) / max(1.0, abs(an.value))
        for cl, an in zip(clusters, analytic)
    )
    mult_dev = max(abs(cl[1] - an.multiplicity) for cl, an in zip(clusters, analytic))
    return [
        Claim.make(ClaimId.SPECTRUM, name, n, value_dev, tol.spectrum_rel),
        Claim.make(ClaimId.MULTIPLICITIES, name, n, float(mult_dev), 0.0),
    ]


_SUBSPACE_KINDS = (TransformKind.DCT1, TransformKind.DCT5, TransformKind.DST8)


def _subspace_claims(kind: TransformKind, n: int, matrix, tol: Tolerances) -> list[Claim]:
    if kind not in _SUBSPACE_KINDS:
        return []
    claims: list[Claim] = []
    name = kind.cli_name
    entries = matrix.entries

    v1_min = 5 if kind is TransformKind.DCT1 else 3
    if n >= v1_min:
        basis = subspaces.v1_basis(kind, n)
        c = subspaces.v1_action_constant(kind, n)
        residual = max(
            float(np.max(np.abs(entries @ (entries @ v) - c * v)))
            for v in basis.vectors
        )
        claims.append(Claim.make(ClaimId.V1_ACTION, name, n, residual, tol.v1_scale * n))

    cases = subspaces.q_cases_for(kind, n)
    if cases:
        worst = 0.0
        eig_worst = 0.0
        for case in cases:
            pair = subspaces.q_pair(case, n)
            measured = subspaces.action_coeffs(pair, matrix)
            expected = subspaces.expected_action_coeffs(case, n)
            coeff_dev = max(
                abs(measured.a - expected.a),
                abs(measured.b - expected.b),
                abs(measured.c - expected.c),
                abs(measured.d - expected.d),
            )
            # coefficient deviations scaled by n so one tolerance bounds both
            worst = max(worst, measured.residual, coeff_dev * n)
            for lam, x in subspaces.reduced_eigen(measured):
                vec = pair.q1 + x * pair.q2
                res = float(np.max(np.abs(entries @ vec - lam * vec)))
                eig_worst = max(eig_worst, res / float(np.max(np.abs(vec))))
        claims.append(Claim.make(ClaimId.Q_INVARIANCE, name, n, worst, tol.action_scale * n))
        claims.append(Claim.make(ClaimId.EIGVEC_RESIDUAL, name, n, eig_worst, tol.eigvec_scale * n))
    return claims


def verify_kind(kind: TransformKind, n: int, tol: Tolerances = Tolerances()) -> list[Claim]:
    """One claim per applicable check for a single (kind, n) cell."""
    matrix = build_matrix(kind, n)
    name = kind.cli_name

    squared = matrix_multiply(matrix, matrix)
    closed = closedforms.materialize(closedforms.square_closed_form(kind, n))
    square_dev = float(np.max(np.abs(closed - squared)))

    trace_dev = abs(
        closedforms.trace_closed_form(kind, n).value - float(matrix.entries.trace())
    )

    claims = [
        Claim.make(ClaimId.SQUARE_FORM, name, n, square_dev, tol.square_scale * n),
        Claim.make(ClaimId.TRACE_FORM, name, n, trace_dev, tol.trace_scale * n),
    ]
    claims.extend(_spectrum_claims(kind, n, matrix, tol))
    claims.extend(_subspace_claims(kind, n, matrix, tol))
    return claims


def identity_claims(n_max: int, tol: Tolerances = Tolerances()) -> list[Claim]:
    """One claim per trigonometric identity over a fixed parameter lattice.

    Free-parameter identities sweep structural parameters 2..n_max (all
    admissible residues at each), the Gauss sums sweep 1..n_max.
    """
    claims = []
    for ident in trigsums.IdentityId:
        start = 2 if ident.takes_free_parameter else 1
        worst = 0.0
        max_terms = 0
        for n in range(start, n_max + 1):
            worst = max(worst, trigsums.max_abs_deviation(ident, n))
            max_terms = max(max_terms, trigsums.term_count(ident, n))
        if max_terms == 0:
            continue
        claims.append(
            Claim.make(
                ClaimId.IDENTITY_SUM, ident.value, n_max, worst,
                tol.identity_scale * max_terms,
            )
        )
    return claims


def sweep(
    kinds: Iterable[TransformKind],
    n_min: int,
    n_max: int,
    tol: Tolerances = Tolerances(),
    fail_fast: bool = False,
) -> VerificationReport:
    """Deterministic concatenation of verify_kind over the (kind, n) grid.

    Inadmissible cells are recorded as skipped, never as errors.  With
    ``fail_fast`` the grid walk stops after the first cell that produced a
    failing claim.
    """
    if n_min > n_max:
        raise ValueError(f"empty range: n_min = {n_min} > n_max = {n_max}")
    if n_min < 1:
        raise ValueError(f"n_min must be >= 1, got {n_min}")
    kinds = sorted(set(kinds), key=lambda k: ALL_KINDS.index(k))
    claims: list[Claim] = []
    skipped: list[SkipNote] = []
    failed = False
    for kind in kinds:
        for n in range(n_min, n_max + 1):
            if failed and fail_fast:
                break
            if n < kind.min_size:
                skipped.append(
                    SkipNote(kind.cli_name, n, f"below minimum order {kind.min_size}")
                )
                continue
            cell = verify_kind(kind, n, tol)
            claims.extend(cell)
            failed = failed or any(not c.passed for c in cell)
    if kinds and not (failed and fail_fast):
        claims.extend(identity_claims(n_max, tol))
    config = {
        "kinds": [k.cli_name for k in kinds],
        "n_min": n_min,
        "n_max": n_max,
        "fail_fast": fail_fast,
        "tolerances": tol.as_dict(),
    }
    return VerificationReport(claims=tuple(claims), skipped=tuple(skipped), config=config)
