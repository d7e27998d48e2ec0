"""Model matrices and the resolvent/inverse norm bounds they certify.

For a zero multiset {l_1, ..., l_m} in the closed unit disk, the associated
model matrix is the lower-triangular contraction

    M[i][j] = 0                                           for i < j
    M[i][i] = l_i
    M[i][j] = sqrt(1-|l_i|^2) sqrt(1-|l_j|^2) prod_{mu=j+1}^{i-1} (-conj(l_mu))
                                                          for i > j.

It has operator norm at most 1, spectrum exactly {l_i}, and maximizes
||psi(X)|| among contractions X whose minimal polynomial is
prod (z - l_i), for any rational psi with poles off the spectrum. Two
closed-form consequences are exposed directly: the inverse-norm bound
prod 1/|l_i| and the Moebius-resolvent bound prod |1 - conj(l_i) z|/|z - l_i|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidInputs,
    InvalidSpectrum,
    NotAContraction,
    PoleEvaluation,
)
from .linalg import as_matrix, op_norm

_NORM_SLACK = 1e-12
_POLE_MARGIN = 1e-6
_DEN_COND_CAP = 1e12


def _check_zeros(zeros) -> list[complex]:
    zs = [complex(z) for z in zeros]
    if not zs:
        raise InvalidSpectrum("zero multiset must be nonempty")
    for z in zs:
        if abs(z) > 1.0 + 1e-14:
            raise InvalidSpectrum(f"zero {z} lies outside the closed unit disk")
    return zs


@dataclass(frozen=True)
class ModelMatrix:
    zeros: tuple[complex, ...]
    matrix: np.ndarray


def build_model_matrix(zeros) -> ModelMatrix:
    """Lower-triangular model matrix for a zero multiset."""
    zs = _check_zeros(zeros)
    m = len(zs)
    defect = [math.sqrt(max(1.0 - abs(z) ** 2, 0.0)) for z in zs]
    M = np.zeros((m, m), dtype=complex)
    for i in range(m):
        M[i, i] = zs[i]
        run = 1.0 + 0.0j  # prod_{mu=j+1}^{i-1}(-conj(l_mu)), built up as j decreases
        for j in range(i - 1, -1, -1):
            M[i, j] = defect[i] * defect[j] * run
            run *= -zs[j].conjugate()
    return ModelMatrix(zeros=tuple(zs), matrix=M)


def inverse_norm_bound(zeros) -> float:
    """prod 1/|l_i|; +inf when any zero vanishes.

    Certifies ||X^{-1}|| <= bound for every contraction X with minimal
    polynomial prod (z - l_i).
    """
    zs = _check_zeros(zeros)
    bound = 1.0
    for z in zs:
        if z == 0:
            return math.inf
        bound /= abs(z)
    return bound


def mobius_resolvent_bound(zeros, z: complex) -> float:
    """prod |1 - conj(l_i) z| / |z - l_i| for |z| <= 1 off the zero set.

    Certifies ||(zI - A)^{-1} (I - conj(z) A)|| <= bound for contractions A
    with those zeros; each factor is unimodular when |z| = 1.
    """
    zs = _check_zeros(zeros)
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise InvalidInputs(f"evaluation point {z} lies outside the closed unit disk")
    bound = 1.0
    for lam in zs:
        gap = abs(z - lam)
        if gap < 1e-14:
            raise PoleEvaluation(f"evaluation point {z} coincides with zero {lam}")
        bound *= abs(1.0 - lam.conjugate() * z) / gap
    return bound


def polyval_matrix(coeffs, M: np.ndarray) -> np.ndarray:
    """Evaluate a polynomial (highest-degree coefficient first) at a matrix."""
    M = as_matrix(M)
    eye = np.eye(M.shape[0], dtype=complex)
    coeffs = [complex(c) for c in coeffs]
    if not coeffs:
        return np.zeros_like(M)
    X = coeffs[0] * eye
    for c in coeffs[1:]:
        X = X @ M + c * eye
    return X


@dataclass(frozen=True)
class DominanceReport:
    lhs_norm: float
    rhs_norm: float
    verdict: bool


def rational_dominance_check(A, zeros, num_coeffs, den_coeffs, tol: float = 1e-8) -> DominanceReport:
    """Compare ||psi(A)|| against ||psi(M)|| for the model matrix of ``zeros``.

    ``psi`` is given by numerator/denominator coefficient lists (highest
    degree first). The caller guarantees that the minimal polynomial of A
    divides prod (z - l_i); the check then verifies
    ||psi(A)|| <= ||psi(M)|| + tol.
    """
    A = as_matrix(A)
    zs = _check_zeros(zeros)
    if op_norm(A) > 1.0 + _NORM_SLACK:
        raise NotAContraction(f"op_norm(A) = {op_norm(A)} exceeds 1")
    den = [complex(c) for c in den_coeffs]
    if not den or all(c == 0 for c in den):
        raise InvalidInputs("denominator polynomial must be nonzero")
    if len(den) > 1:
        poles = np.roots(den)
        for p in poles:
            if min(abs(p - z) for z in zs) < _POLE_MARGIN:
                raise PoleEvaluation(f"pole {p} within {_POLE_MARGIN} of the zero set")

    model = build_model_matrix(zs).matrix

    def psi_of(M: np.ndarray) -> np.ndarray:
        den_mat = polyval_matrix(den, M)
        if np.linalg.cond(den_mat) > _DEN_COND_CAP:
            raise PoleEvaluation("denominator evaluation is too ill-conditioned")
        return np.linalg.solve(den_mat, polyval_matrix(num_coeffs, M))

    lhs = op_norm(psi_of(A))
    rhs = op_norm(psi_of(model))
    return DominanceReport(lhs_norm=lhs, rhs_norm=rhs, verdict=lhs <= rhs + tol)
