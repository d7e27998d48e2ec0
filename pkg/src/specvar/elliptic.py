"""Jacobi theta series and the elliptic modulus k(q).

Only real nomes q in [0, 1] are supported:

    theta2(q) = sum_{k in Z} q^((k + 1/2)^2)
    theta3(q) = sum_{k in Z} q^(k^2)
    k(q)      = (theta2(q) / theta3(q))^2,  k(0) := 0,  k(1) := 1

k is strictly increasing on [0, 1], so it has a well-defined inverse. An
independent infinite-product representation of k is provided for
cross-validation, together with the two sides of the power inequality

    sqrt(k(q^n)) >= 2^(1-n) * k(q)^(n/2).

Series are summed to the double-precision floor. Beyond Q_MAX = 1 - 1e-8 the
term count explodes and precision silently degrades, so evaluation there is
refused rather than approximated. Note that in double precision k(q) rounds
to exactly 1.0 for q >~ 0.77; callers inverting k should stay below that
saturation point.
"""

from __future__ import annotations

import math

from .errors import DomainOverflow, InvalidInputs, SolverFailure

Q_MAX = 1.0 - 1e-8
_TERM_EPS = 1e-17
_TERM_CAP = 100_000

# below this, k(q) = 4 sqrt(q) holds to full double precision
_ASYMPTOTIC_X = 4e-150


def _check_nome(q: float, allow_one: bool = False) -> float:
    q = float(q)
    if not 0.0 <= q <= 1.0 or math.isnan(q):
        raise InvalidInputs(f"nome {q} outside [0, 1]")
    if q > Q_MAX and not (allow_one and q == 1.0):
        raise DomainOverflow(f"nome {q} exceeds Q_MAX = {Q_MAX}: series precision exhausted")
    return q


def theta2(q: float) -> float:
    """theta2 series; exponents (k + 1/2)^2."""
    q = _check_nome(q)
    if q == 0.0:
        return 0.0
    total = 0.0
    for k in range(_TERM_CAP):
        term = q ** ((k + 0.5) ** 2)
        total += term
        if term < _TERM_EPS:
            return 2.0 * total
    raise SolverFailure("theta2 series did not converge", iterations=_TERM_CAP)


def theta3(q: float) -> float:
    """theta3 series; exponents k^2."""
    q = _check_nome(q)
    total = 1.0
    for k in range(1, _TERM_CAP):
        term = q ** (k * k)
        total += 2.0 * term
        if term < _TERM_EPS:
            return total
    raise SolverFailure("theta3 series did not converge", iterations=_TERM_CAP)


def modulus_k(q: float) -> float:
    """Elliptic modulus k(q) = (theta2/theta3)^2, extended by k(0)=0, k(1)=1."""
    q = _check_nome(q, allow_one=True)
    if q == 0.0:
        return 0.0
    if q == 1.0:
        return 1.0
    return min((theta2(q) / theta3(q)) ** 2, 1.0)


def modulus_k_product(q: float) -> float:
    """k(q) via its infinite product 4 sqrt(q) prod_k ((1+q^{2k})/(1+q^{2k-1}))^4."""
    q = _check_nome(q)
    if q == 0.0:
        return 0.0
    prod = 1.0
    for k in range(1, _TERM_CAP):
        factor = ((1.0 + q ** (2 * k)) / (1.0 + q ** (2 * k - 1))) ** 4
        prod *= factor
        if abs(factor - 1.0) < _TERM_EPS:
            return min(4.0 * math.sqrt(q) * prod, 1.0)
    raise SolverFailure("modulus product did not converge", iterations=_TERM_CAP)


def inverse_k(x: float) -> float:
    """The unique q in [0, 1] with k(q) = x.

    Monotone bisection, terminated at relative width 1e-14 (which also meets
    an absolute width of 1e-14 since q <= 1). Relative accuracy matters:
    downstream bounds raise the result to powers like 1/(2m), so an absolute
    floor near q = 0 would destroy them. For x below the asymptotic
    threshold, k(q) = 4 sqrt(q) is exact to double precision and is inverted
    directly.
    """
    x = float(x)
    if not 0.0 <= x <= 1.0 or math.isnan(x):
        raise InvalidInputs(f"modulus value {x} outside [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    if x < _ASYMPTOTIC_X:
        return (x / 4.0) ** 2
    lo, hi = 0.0, Q_MAX
    for _ in range(2000):
        if hi - lo <= 1e-14 * hi:
            break
        mid = 0.5 * (lo + hi)
        if modulus_k(mid) < x:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def modulus_power_pair(q: float, n: int) -> tuple[float, float]:
    """Both sides of sqrt(k(q^n)) >= 2^(1-n) * k(q)^(n/2).

    Returns (lhs, rhs); equality holds at n = 1 and lhs >= rhs throughout.
    """
    if n < 1:
        raise InvalidInputs(f"power n must be a positive integer, got {n}")
    q = _check_nome(q)
    lhs = math.sqrt(modulus_k(q ** n))
    rhs = 2.0 ** (1 - n) * modulus_k(q) ** (n / 2.0)
    return lhs, rhs
