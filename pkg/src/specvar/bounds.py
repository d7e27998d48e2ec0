"""Spectral-variation bounds and eigenvalue localization disks.

Three bound families are evaluated from the scalar inputs
(||A||, ||B||, rho(B), ||A - B||, |m|, n):

* Euclidean:   d_E <= 2^(2-1/m) (||A||+||B||)^(1-1/m) ||A-B||^(1/m)
* hyperbolic:  d_H <= k( k^{-1}( ||A-B||^2 / (1 - rho(B)||A||)^2 )^(1/(2m)) )
               <=    2^(2-1/m) ||A-B||^(1/m) / (1 - rho(B)||A||)^(1/m)
* Krause-type: d_E <= (1/alpha_n) (2 M2)^(1-1/n) ||A-B||^(1/n), valid when
               ||A-B|| is below the admissibility threshold tied to the
               smallest nonzero eigenvalue modulus of A.

Here m is the degree of the minimal polynomial of A (defaulting to n, which
is always sound), M2 = max(||A||, ||B||), and

    alpha_n = 1/2 * (2 / sqrt(n^2 - 1))^(1/n) * sqrt((n-1)/(n+1)),

with 1/alpha_1 = 2 by convention since the closed form is indeterminate at
n = 1. The sequence 1/alpha_n decreases toward 2 for n >= 2.

A hyperbolic bound r_h yields, around each eigenvalue a of A, a hyperbolic
disk that converts to a Euclidean disk guaranteed to contain an eigenvalue
of B; near the boundary these disks shrink, which is where the hyperbolic
localization beats the Euclidean one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .elliptic import inverse_k, modulus_k
from .errors import InvalidInputs
from .hypgeo import HyperbolicDisk, to_euclidean

#: named constants usable in the Euclidean localization radius
#: C_n (||A||+||B||)^(1-1/n) ||A-B||^(1/n)
CN_REGISTRY = {
    "bek": lambda n: 2.0 ** (2.0 - 1.0 / n),
    "best": lambda n: 16.0 / (3.0 * math.sqrt(3.0)),
}

#: published sharper constant for n = 12, used in the comparison figures
KRAUSE_C12 = 2.6543


def cn_value(selector, n: int) -> float:
    """Resolve a C_n selector: a registry name, or a numeric literal."""
    if isinstance(selector, str):
        if selector in CN_REGISTRY:
            return float(CN_REGISTRY[selector](n))
        try:
            return float(selector)
        except ValueError:
            raise InvalidInputs(
                f"unknown constant {selector!r}; choose from {sorted(CN_REGISTRY)} or a number"
            ) from None
    return float(selector)


@dataclass(frozen=True)
class BoundInputs:
    """Scalar inputs shared by all bound formulas."""

    norm_a: float
    norm_b: float
    rho_b: float
    diff_norm: float
    m: int
    n: int

    def __post_init__(self):
        for name in ("norm_a", "norm_b", "rho_b", "diff_norm"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise InvalidInputs(f"{name} must be finite and nonnegative, got {v}")
        if self.rho_b > self.norm_b + 1e-9:
            raise InvalidInputs(f"rho_b = {self.rho_b} exceeds norm_b = {self.norm_b}")
        if not 1 <= self.m <= self.n:
            raise InvalidInputs(f"need 1 <= m <= n, got m = {self.m}, n = {self.n}")


def euclid_bound(bi: BoundInputs) -> float:
    """Euclidean matching-distance bound from norms and |m|."""
    m = bi.m
    return (
        2.0 ** (2.0 - 1.0 / m)
        * (bi.norm_a + bi.norm_b) ** (1.0 - 1.0 / m)
        * bi.diff_norm ** (1.0 / m)
    )


def _require_strict_contractions(bi: BoundInputs) -> None:
    if not (bi.norm_a < 1.0 and bi.norm_b < 1.0):
        raise InvalidInputs("hyperbolic bounds require ||A|| < 1 and ||B|| < 1")


def hyper_bound_exact(bi: BoundInputs, rho: float | None = None) -> float:
    """Sharp hyperbolic matching-distance bound, clamped to [0, 1].

    Returns 1.0 (vacuous: d_H never exceeds 1) when the squared ratio
    handed to the modulus inverse exceeds 1.
    """
    _require_strict_contractions(bi)
    rho = bi.rho_b if rho is None else rho
    x = (bi.diff_norm / (1.0 - rho * bi.norm_a)) ** 2
    if x > 1.0:
        return 1.0
    q0 = inverse_k(x)
    return min(modulus_k(q0 ** (1.0 / (2.0 * bi.m))), 1.0)


def hyper_bound_simple(bi: BoundInputs, rho: float | None = None) -> float:
    """Closed-form relaxation of the hyperbolic bound (an upper bound for it)."""
    rho = bi.rho_b if rho is None else rho
    if bi.norm_a >= 1.0 or rho * bi.norm_a >= 1.0:
        raise InvalidInputs("simplified hyperbolic bound needs ||A|| < 1 and rho ||A|| < 1")
    m = bi.m
    return 2.0 ** (2.0 - 1.0 / m) * (bi.diff_norm / (1.0 - rho * bi.norm_a)) ** (1.0 / m)


def krause_alpha(n: int) -> float:
    """alpha_n of the Krause-type bound; alpha_1 = 1/2 by convention."""
    if n < 1:
        raise InvalidInputs(f"n must be a positive integer, got {n}")
    if n == 1:
        return 0.5
    return 0.5 * (2.0 / math.sqrt(n * n - 1.0)) ** (1.0 / n) * math.sqrt((n - 1.0) / (n + 1.0))


def krause_condition(bi: BoundInputs, min_nonzero_eig: float) -> bool:
    """Admissibility gate for the Krause-type bound.

    True iff ||A-B|| <= (1/(2 M2))^(n-1) ((n+1)/(n-1))^n alpha_n^n e^n with
    e the smallest nonzero eigenvalue modulus of A. Undefined at n = 1.
    """
    if bi.n < 2:
        raise InvalidInputs("the admissibility condition is undefined at n = 1")
    if min_nonzero_eig <= 0:
        raise InvalidInputs("min_nonzero_eig must be positive")
    if bi.diff_norm == 0.0:
        return True
    n = bi.n
    m2 = max(bi.norm_a, bi.norm_b)
    if m2 == 0.0:
        return False  # nonzero distance between two zero-norm matrices is impossible anyway
    threshold = (
        (1.0 / (2.0 * m2)) ** (n - 1)
        * ((n + 1.0) / (n - 1.0)) ** n
        * krause_alpha(n) ** n
        * min_nonzero_eig ** n
    )
    return bi.diff_norm <= threshold


def krause_bound(bi: BoundInputs) -> float:
    """(1/alpha_n)(2 M2)^(1-1/n) ||A-B||^(1/n); advisory unless the condition holds."""
    n = bi.n
    m2 = max(bi.norm_a, bi.norm_b)
    return (1.0 / krause_alpha(n)) * (2.0 * m2) ** (1.0 - 1.0 / n) * bi.diff_norm ** (1.0 / n)


def containment_condition(a: complex, r_h: float, r_e: float) -> bool:
    """Whether the hyperbolic disk (a, r_h) fits inside the Euclidean disk (a, r_e).

    Equivalent form: 1 - |a|^2 <= (r_e / r_h)(1 - r_h |a|). Near the
    boundary this can hold even when r_h > r_e. A zero hyperbolic radius is
    contained by convention.
    """
    if not 0.0 <= r_h < 1.0:
        raise InvalidInputs(f"need 0 <= r_h < 1, got {r_h}")
    if r_h == 0.0:
        return True
    mod_a = abs(complex(a))
    return 1.0 - mod_a ** 2 <= (r_e / r_h) * (1.0 - r_h * mod_a)


@dataclass(frozen=True)
class Disk:
    """Euclidean localization disk emitted for one eigenvalue of A."""

    center: complex
    radius: float
    mode: str  # "euclid" or "hyper"
    vacuous: bool

    def to_json_dict(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
            "mode": self.mode,
            "vacuous": self.vacuous,
        }


def localization_disks(
    spec_a,
    bi: BoundInputs,
    mode: str,
    cn="bek",
    use_norm_b: bool = False,
) -> list[Disk]:
    """Per-eigenvalue localization disks in one of the two geometries.

    ``euclid``: disk (a, r_e) with r_e = C_n (||A||+||B||)^(1-1/n) ||A-B||^(1/n).
    ``hyper``:  hyperbolic disk (a, r_h) with r_h from the simplified
    hyperbolic bound, converted to Euclidean form. ``use_norm_b`` replaces
    rho(B) by ||B|| in r_h (the convention of the comparison figures).
    Vacuous disks (r_h >= 1, or r_e at least the spectra's diameter bound)
    are flagged but still emitted.
    """
    spec_a = np.atleast_1d(np.asarray(spec_a, dtype=complex))
    disks: list[Disk] = []
    if mode == "euclid":
        r_e = cn_value(cn, bi.n) * (bi.norm_a + bi.norm_b) ** (1.0 - 1.0 / bi.n) * bi.diff_norm ** (
            1.0 / bi.n
        )
        vac = r_e >= bi.norm_a + bi.norm_b and r_e > 0.0
        for a in spec_a:
            disks.append(Disk(center=complex(a), radius=r_e, mode="euclid", vacuous=vac))
    elif mode == "hyper":
        _require_strict_contractions(bi)
        rho = bi.norm_b if use_norm_b else bi.rho_b
        r_h = hyper_bound_simple(bi, rho=rho)
        vac = r_h >= 1.0
        r_h_eff = min(r_h, 1.0)
        for a in spec_a:
            center, radius = to_euclidean(HyperbolicDisk(center=complex(a), radius=r_h_eff))
            disks.append(Disk(center=center, radius=radius, mode="hyper", vacuous=vac))
    else:
        raise InvalidInputs(f"unknown localization mode {mode!r}")
    return disks


@dataclass
class BoundReport:
    """Measured distances, bound values, and per-bound verdicts for one pair."""

    inputs: BoundInputs
    cn_name: str
    euclid: float
    hyper_exact: float | None = None
    hyper_simple: float | None = None
    krause: float | None = None
    krause_applicable: bool = False
    d_e: float | None = None
    d_h: float | None = None
    bound_tol: float = 1e-9
    chain_tol: float = 1e-12
    verdicts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(self.verdicts.values())

    def to_json_dict(self) -> dict:
        return {
            "inputs": {
                "norm_a": self.inputs.norm_a,
                "norm_b": self.inputs.norm_b,
                "rho_b": self.inputs.rho_b,
                "diff_norm": self.inputs.diff_norm,
                "m": self.inputs.m,
                "n": self.inputs.n,
            },
            "constants": {"cn": self.cn_name},
            "bounds": {
                "euclid": self.euclid,
                "hyper_exact": self.hyper_exact,
                "hyper_simple": self.hyper_simple,
                "krause": self.krause,
                "krause_applicable": self.krause_applicable,
            },
            "distances": {"d_euclid": self.d_e, "d_hyper": self.d_h},
            "tolerances": {"bound": self.bound_tol, "chain": self.chain_tol},
            "verdicts": self.verdicts,
            "notes": self.notes,
        }


BOUND_SLACK = 1e-9
CHAIN_SLACK = 1e-12


def assemble_report(
    bi: BoundInputs,
    d_e: float | None = None,
    d_h: float | None = None,
    min_nonzero_eig: float | None = None,
    cn="bek",
    bound_tol: float = BOUND_SLACK,
    chain_tol: float = CHAIN_SLACK,
) -> BoundReport:
    """Evaluate every applicable bound and compare against measured distances."""
    report = BoundReport(
        inputs=bi, cn_name=str(cn), euclid=euclid_bound(bi), bound_tol=bound_tol, chain_tol=chain_tol
    )
    if d_e is not None:
        report.d_e = d_e
        report.verdicts["euclid"] = d_e <= report.euclid + bound_tol

    if bi.norm_a < 1.0 and bi.norm_b < 1.0:
        report.hyper_exact = hyper_bound_exact(bi)
        report.hyper_simple = hyper_bound_simple(bi)
        report.verdicts["hyper_chain"] = report.hyper_exact <= report.hyper_simple + chain_tol
        if d_h is not None:
            report.d_h = d_h
            report.verdicts["hyper_exact"] = d_h <= report.hyper_exact + bound_tol
            report.verdicts["hyper_simple"] = d_h <= report.hyper_simple + bound_tol
    else:
        report.notes.append("hyperbolic bounds inapplicable: a norm is not below 1")

    if bi.n >= 2 and min_nonzero_eig is not None and min_nonzero_eig > 0:
        report.krause = krause_bound(bi)
        report.krause_applicable = krause_condition(bi, min_nonzero_eig)
        if report.krause_applicable and d_e is not None:
            report.verdicts["krause"] = d_e <= report.krause + bound_tol
    elif bi.n == 1:
        report.notes.append("Krause-type bound skipped: admissibility condition undefined at n = 1")
    return report
