"""Finite Blaschke products and interval minimax values.

A finite Blaschke product with zeros {l_i} in the closed unit disk is

    B(z) = prod_i (z - l_i) / (1 - conj(l_i) z).

It maps the closed disk to itself and is unimodular on the unit circle when
all zeros are interior. Over all degree-n products with interior zeros, the
smallest achievable maximum modulus on the symmetric interval
[-sqrt(k(q)), sqrt(k(q))] equals sqrt(k(q^n)); ``blaschke_minimax`` returns
that value. The classical polynomial counterpart (monic, degree n, any
curve joining a to b) is |b - a|^n / 2^(2n-1), see ``cheb_poly_lower_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import modulus_k
from .errors import InvalidInputs, InvalidSpectrum, PoleEvaluation

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GRID_POINTS = 2049  # resolves the oscillation of products up to degree ~6
_REFINE_PEAKS = 8


@dataclass(frozen=True)
class BlaschkeProduct:
    zeros: tuple[complex, ...]

    def __post_init__(self):
        zs = tuple(complex(z) for z in self.zeros)
        if any(abs(z) > 1.0 + 1e-14 for z in zs):
            raise InvalidSpectrum("Blaschke zeros must lie in the closed unit disk")
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z: complex) -> complex:
        return blaschke_eval(self, z)


def blaschke_eval(bp: BlaschkeProduct, z: complex) -> complex:
    """Evaluate the product at ``z``; the empty product is 1."""
    z = complex(z)
    out = 1.0 + 0.0j
    for lam in bp.zeros:
        den = 1.0 - lam.conjugate() * z
        if abs(den) < 1e-15:
            raise PoleEvaluation(f"evaluation point {z} hits the pole of zero {lam}")
        out *= (z - lam) / den
    return out


def _abs_on_grid(zeros: np.ndarray, t: np.ndarray) -> np.ndarray:
    if len(zeros) == 0:
        return np.ones_like(t)
    num = t[None, :] - zeros[:, None]
    den = 1.0 - np.conj(zeros)[:, None] * t[None, :]
    return np.prod(np.abs(num / den), axis=0)


def max_abs_on_segment(bp: BlaschkeProduct, lo: float, hi: float) -> float:
    """Maximum of |B(t)| for real t in [lo, hi] within the closed disk.

    Dense 2049-point scan plus golden-section refinement around the best
    grid peaks; absolute accuracy ~1e-10. Accepts endpoints at +-1 (where
    products with interior zeros are unimodular); poles of interior zeros
    cannot fall on the real segment.
    """
    lo, hi = float(lo), float(hi)
    if not -1.0 <= lo <= hi <= 1.0:
        raise InvalidInputs(f"segment [{lo}, {hi}] must be ordered inside [-1, 1]")
    zeros = np.asarray(bp.zeros, dtype=complex)
    if lo == hi:
        return float(_abs_on_grid(zeros, np.array([lo]))[0])
    t = np.linspace(lo, hi, _GRID_POINTS)
    vals = _abs_on_grid(zeros, t)
    best = float(vals.max())

    interior = np.zeros(len(t), dtype=bool)
    interior[1:-1] = (vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])
    interior[0] = vals[0] >= vals[1]
    interior[-1] = vals[-1] >= vals[-2]
    peaks = np.flatnonzero(interior)
    peaks = peaks[np.argsort(vals[peaks])[::-1][:_REFINE_PEAKS]]

    def neg_abs(x: float) -> float:
        return -float(_abs_on_grid(zeros, np.array([x]))[0])

    for idx in peaks:
        a = t[max(idx - 1, 0)]
        b = t[min(idx + 1, len(t) - 1)]
        x1 = b - _GOLDEN * (b - a)
        x2 = a + _GOLDEN * (b - a)
        f1, f2 = neg_abs(x1), neg_abs(x2)
        while b - a > 1e-12:
            if f1 <= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - _GOLDEN * (b - a)
                f1 = neg_abs(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + _GOLDEN * (b - a)
                f2 = neg_abs(x2)
        best = max(best, -min(f1, f2))
    return best


def blaschke_minimax(q: float, n: int) -> float:
    """Smallest maximum modulus over degree-n products on [-sqrt(k(q)), sqrt(k(q))].

    Equals sqrt(k(q^n)); at n = 1 the optimum is the single zero at the
    origin with value sqrt(k(q)).
    """
    if n < 1:
        raise InvalidInputs(f"degree n must be a positive integer, got {n}")
    return math.sqrt(modulus_k(float(q) ** n))


def cheb_poly_lower_bound(a: complex, b: complex, n: int) -> float:
    """Minimax floor |b - a|^n / 2^(2n-1) for monic degree-n polynomials."""
    if n < 1:
        raise InvalidInputs(f"degree n must be a positive integer, got {n}")
    return abs(complex(b) - complex(a)) ** n / 2.0 ** (2 * n - 1)
