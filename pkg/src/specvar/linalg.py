"""Dense complex matrix arithmetic: norms, spectra, minimal-polynomial degree.

All routines operate on square ``numpy.complex128`` arrays of dimension at
most ``MAX_DIM``. Matrices are kept dense; there is no sparse path.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InvalidMatrix, SizeMismatch, SolverFailure

MAX_DIM = 64

# eigenvalues of hyperbolic-pipeline inputs may exceed the closed disk by this much
TOL_EIG = 1e-9


def as_matrix(entries) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    M = np.asarray(entries, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidMatrix(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        raise InvalidMatrix("empty matrix")
    if not np.all(np.isfinite(M.view(float))):
        raise InvalidMatrix("matrix contains NaN or Inf entries")
    return M


def op_norm(M) -> float:
    """Operator (spectral) norm: the largest singular value."""
    M = as_matrix(M)
    try:
        return float(np.linalg.norm(M, 2))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK SVD failure
        raise SolverFailure(f"SVD did not converge: {exc}") from exc


def eigenvalues(M) -> np.ndarray:
    """Eigenvalue multiset of ``M`` (with algebraic multiplicity), as a 1-d array."""
    M = as_matrix(M)
    if M.shape[0] > MAX_DIM:
        raise InvalidMatrix(f"dimension {M.shape[0]} exceeds supported maximum {MAX_DIM}")
    try:
        return np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise SolverFailure(f"eigenvalue iteration did not converge: {exc}") from exc


def spectral_radius(M) -> float:
    """Largest eigenvalue modulus."""
    return float(np.max(np.abs(eigenvalues(M))))


def min_poly_degree(M, tol: float = 1e-8) -> int:
    """Estimate the degree of the minimal polynomial of ``M``.

    Returns the smallest ``d`` such that the vectorized powers
    ``{I, M, ..., M**d}`` are linearly dependent, judged by the relative
    singular-value threshold ``tol`` after normalizing each power to unit
    Frobenius norm. Falls back to ``n`` when no dependency is detected.

    The estimate is ill-conditioned for nearly-derogatory matrices; the
    bounds pipeline therefore defaults to ``|m| = n`` and treats this
    routine as an opt-in sharpening.
    """
    M = as_matrix(M)
    if tol <= 0:
        raise InvalidMatrix("tol must be positive")
    n = M.shape[0]
    power = np.eye(n, dtype=complex)
    cols = [power.ravel() / np.sqrt(n)]
    for d in range(1, n + 1):
        power = power @ M
        nrm = np.linalg.norm(power.ravel())
        if nrm == 0.0:
            return d  # M**d vanished: the zero vector makes the family dependent
        cols.append(power.ravel() / nrm)
        sv = np.linalg.svd(np.column_stack(cols), compute_uv=False)
        if sv[-1] <= tol * sv[0]:
            return d
    return n


def check_size_match(sa, sb) -> tuple[np.ndarray, np.ndarray]:
    """Coerce two spectra to arrays and require equal sizes."""
    sa = np.atleast_1d(np.asarray(sa, dtype=complex))
    sb = np.atleast_1d(np.asarray(sb, dtype=complex))
    if sa.shape != sb.shape or sa.ndim != 1:
        raise SizeMismatch(f"spectra sizes differ: {sa.shape} vs {sb.shape}")
    return sa, sb


# ---------------------------------------------------------------------------
# Canonical matrix JSON: {"n": int, "entries": [[re, im], ...]} row-major.
# Floats are emitted in shortest-repr decimal, so write/read round-trips are
# bit-exact.
# ---------------------------------------------------------------------------

def matrix_to_json(M) -> str:
    M = as_matrix(M)
    n = M.shape[0]
    flat = M.ravel()
    entries = [[float(v.real), float(v.imag)] for v in flat]
    return json.dumps({"n": n, "entries": entries})


def matrix_from_json(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidMatrix(
            f"malformed matrix JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise InvalidMatrix('matrix JSON must be an object with keys "n" and "entries"')
    n = doc["n"]
    entries = doc["entries"]
    if not isinstance(n, int) or n <= 0:
        raise InvalidMatrix('"n" must be a positive integer')
    if not isinstance(entries, list) or len(entries) != n * n:
        raise InvalidMatrix(f'"entries" must hold n*n = {n * n} [re, im] pairs')
    flat = np.empty(n * n, dtype=complex)
    for idx, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InvalidMatrix(f"entry {idx} is not an [re, im] pair")
        flat[idx] = complex(float(pair[0]), float(pair[1]))
    return as_matrix(flat.reshape(n, n))


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_json(fh.read())


def save_matrix(M, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(matrix_to_json(M))
        fh.write("\n")
