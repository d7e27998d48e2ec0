"""Pseudo-hyperbolic geometry of the unit disk.

Distance, disk conversion, geodesics through two interior points, and
perpendicular projection onto a geodesic. The pseudo-hyperbolic distance

    p(a, b) = |a - b| / |1 - conj(a) * b|

is Moebius-invariant and takes values in [0, 1]. A hyperbolic disk
{z : p(a, z) < r} is also a Euclidean disk; ``to_euclidean`` returns its
Euclidean center and radius.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateInput, OutOfDomain

# points with |z| >= 1 - BOUNDARY_TOL are treated as boundary points
BOUNDARY_TOL = 1e-14

# inputs may exceed the closed disk by this much (eigensolver round-off)
_DISK_SLACK = 1e-9

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _require_in_disk(z: complex, what: str = "point") -> complex:
    z = complex(z)
    if abs(z) > 1.0 + _DISK_SLACK:
        raise DegenerateInput(f"{what} {z} lies outside the closed unit disk")
    return z


def pseudo_distance(a: complex, b: complex) -> float:
    """Pseudo-hyperbolic distance between two points of the closed disk."""
    a = _require_in_disk(a)
    b = _require_in_disk(b)
    den = 1.0 - a.conjugate() * b
    if abs(den) < 1e-15:
        raise DegenerateInput("conj(a)*b = 1: distance undefined for this boundary pair")
    return min(abs((a - b) / den), 1.0)


@dataclass(frozen=True)
class HyperbolicDisk:
    """Disk {z : p(center, z) < radius} with pseudo-hyperbolic radius in [0, 1]."""

    center: complex
    radius: float

    def __post_init__(self):
        _require_in_disk(self.center, "disk center")
        if not 0.0 <= self.radius <= 1.0:
            raise DegenerateInput(f"hyperbolic radius {self.radius} outside [0, 1]")


def to_euclidean(disk: HyperbolicDisk) -> tuple[complex, float]:
    """Euclidean (center, radius) of a hyperbolic disk.

    C = a (1 - r^2) / (1 - r^2 |a|^2),  R = r (1 - |a|^2) / (1 - r^2 |a|^2).
    """
    a, r = complex(disk.center), float(disk.radius)
    den = 1.0 - r * r * abs(a) ** 2
    if den <= 0.0:
        raise DegenerateInput("radius 1 disk centered on the boundary has no Euclidean form")
    return a * (1.0 - r * r) / den, r * (1.0 - abs(a) ** 2) / den


class Geodesic:
    """Geodesic through two distinct interior points ``a`` and ``b``.

    Parametrized by s -> (s*C + a) / (1 + s*conj(a)*C) with
    C = (b - a)/(1 - conj(a)*b), on the open domain |s| < 1/|C|; s=0 and s=1
    give the endpoints.
    """

    def __init__(self, a: complex, b: complex):
        a, b = complex(a), complex(b)
        if abs(a) >= 1.0 - BOUNDARY_TOL or abs(b) >= 1.0 - BOUNDARY_TOL:
            raise DegenerateInput("geodesic endpoints must lie in the open unit disk")
        if a == b:
            raise DegenerateInput("geodesic endpoints must be distinct")
        self.a = a
        self.b = b
        self.coeff = (b - a) / (1.0 - a.conjugate() * b)
        self.domain = (-1.0 / abs(self.coeff), 1.0 / abs(self.coeff))

    def point(self, s: float) -> complex:
        if not self.domain[0] < s < self.domain[1]:
            raise OutOfDomain(f"parameter {s} outside open domain {self.domain}")
        c = self.coeff
        return (s * c + self.a) / (1.0 + s * self.a.conjugate() * c)


def _golden_min(f, lo: float, hi: float, xtol: float) -> float:
    """Golden-section minimizer of a unimodal function on [lo, hi]."""
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > xtol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    return 0.5 * (lo + hi)


def _polish_foot(w: complex, t0: float) -> float:
    """Sharpen the segment foot point by bisecting the stationarity condition.

    Value comparisons alone cannot locate a smooth minimum beyond ~sqrt(eps)
    in position; the sign of d/dt p(w, t)^2 can. The squared distance is
    N/D with N = (x-t)^2 + y^2 and D = (1-tx)^2 + (ty)^2, so the sign we
    bisect is that of N'D - ND'.
    """
    x, y = w.real, w.imag

    def slope(t: float) -> float:
        N = (x - t) ** 2 + y * y
        D = (1.0 - t * x) ** 2 + (t * y) ** 2
        dN = -2.0 * (x - t)
        dD = -2.0 * x * (1.0 - t * x) + 2.0 * t * y * y
        return dN * D - N * dD

    width = 4e-6
    lo = max(t0 - width / 2.0, -1.0 + 1e-12)
    hi = min(t0 + width / 2.0, 1.0 - 1e-12)
    while (slope(lo) > 0.0 or slope(hi) < 0.0) and width < 4.0:
        width *= 8.0
        lo = max(t0 - width / 2.0, -1.0 + 1e-12)
        hi = min(t0 + width / 2.0, 1.0 - 1e-12)
    if slope(lo) > 0.0 or slope(hi) < 0.0:
        return t0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if slope(mid) < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15:
            break
    return 0.5 * (lo + hi)


def project(g: Geodesic, z: complex) -> complex:
    """Perpendicular projection of an interior point onto a geodesic.

    The geodesic is Moebius-mapped onto the real diameter (-1, 1); the
    hyperbolically closest real point to the image of ``z`` is located by a
    bracketed golden-section search with a stationarity-bisection polish,
    then mapped back. Points already on the geodesic project to themselves.
    The pseudo-hyperbolic distance contracts under this map.
    """
    z = complex(z)
    if abs(z) >= 1.0 - BOUNDARY_TOL:
        raise DegenerateInput("projection requires an interior point")
    u = g.coeff / abs(g.coeff)  # rotate so the image segment is real
    w = u.conjugate() * (z - g.a) / (1.0 - g.a.conjugate() * z)
    if abs(w.imag) <= 1e-14:
        t = min(max(w.real, -1.0 + 1e-14), 1.0 - 1e-14)  # already on the geodesic
    else:
        def dist_to(t: float) -> float:
            return abs((w - t) / (1.0 - t * w.conjugate()))

        t = _golden_min(dist_to, -1.0 + 1e-12, 1.0 - 1e-12, 1e-6)
        t = _polish_foot(w, t)
    return (u * t + g.a) / (1.0 + g.a.conjugate() * u * t)


def mobius(z: complex, c: complex, theta: float = 0.0) -> complex:
    """Disk automorphism e^{i theta} (z - c)/(1 - conj(c) z), |c| < 1."""
    c = complex(c)
    if abs(c) >= 1.0:
        raise DegenerateInput("Moebius center must lie in the open disk")
    return cmath.exp(1j * theta) * (z - c) / (1.0 - c.conjugate() * z)
