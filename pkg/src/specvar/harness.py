"""Randomized experiment engine: ensembles, eigenvalue curves, suites, figures.

Matrices are drawn from the complex Ginibre ensemble (i.i.d. standard
complex normal entries) rescaled to a prescribed operator norm, or built
upper-triangular with a prescribed spectrum and then unitarily disguised.
Per-trial random streams are derived from (master seed, suite index, trial)
so trials are order-independent and reports are reproducible bit for bit.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import blaschke, bounds, matching, modelop
from .elliptic import inverse_k, modulus_k, modulus_k_product, modulus_power_pair
from .errors import ConfigError, CurveResolutionFailure, NotAContraction, SizeMismatch
from .hypgeo import Geodesic, HyperbolicDisk, mobius, project, pseudo_distance, to_euclidean
from .linalg import as_matrix, eigenvalues, min_poly_degree, op_norm, spectral_radius

#: perturbations below this are invisible in double precision next to A;
#: radii are then computed analytically and sigma(B) is taken to be sigma(A)
EPS_FLOOR = 1e-12


# ---------------------------------------------------------------------------
# seeding and matrix ensembles
# ---------------------------------------------------------------------------

def seeded_rng(*entropy: int) -> np.random.Generator:
    """Independent generator for a (master seed, ...path) tuple."""
    return np.random.default_rng([int(e) & 0xFFFFFFFFFFFFFFFF for e in entropy])


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return seeded_rng(int(seed))


def ginibre(n: int, rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)


def random_contraction(n: int, target_norm: float, seed) -> np.ndarray:
    """Ginibre draw rescaled so the operator norm equals ``target_norm``."""
    if not 0.0 < target_norm <= 1.0:
        raise ConfigError(f"target norm must lie in (0, 1], got {target_norm}")
    rng = _as_rng(seed)
    G = ginibre(n, rng)
    return G * (target_norm / op_norm(G))


def random_perturbation(n: int, eps: float, seed) -> np.ndarray:
    """Ginibre direction with operator norm exactly ``eps``."""
    if eps < 0:
        raise ConfigError(f"perturbation norm must be nonnegative, got {eps}")
    if eps == 0.0:
        return np.zeros((n, n), dtype=complex)
    rng = _as_rng(seed)
    G = ginibre(n, rng)
    return G * (eps / op_norm(G))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    Q, R = np.linalg.qr(ginibre(n, rng))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_prescribed_contraction(zeros, seed, margin: float = 1e-10) -> np.ndarray:
    """Random contraction whose spectrum is exactly the given multiset.

    Upper-triangular with the prescribed diagonal and a Ginibre strict upper
    part rescaled by the largest factor keeping the operator norm at most
    1 - margin, then conjugated by a random unitary. Requires every zero to
    have modulus below 1 - margin.
    """
    rng = _as_rng(seed)
    zs = np.asarray(list(zeros), dtype=complex)
    if zs.size == 0:
        raise ConfigError("zero multiset must be nonempty")
    if np.max(np.abs(zs)) > 1.0 - margin:
        raise NotAContraction("prescribed spectrum too close to the unit circle")
    m = zs.size
    D = np.diag(zs)
    N = np.triu(ginibre(m, rng), k=1)
    if op_norm(D + N) <= 1.0 - margin:
        T = D + N
    else:
        lo, hi = 0.0, 1.0  # op_norm(D + beta N) is convex in beta and feasible at 0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if op_norm(D + mid * N) <= 1.0 - margin:
                lo = mid
            else:
                hi = mid
        T = D + lo * N
    Q = random_unitary(m, rng)
    return Q @ T @ Q.conj().T


# ---------------------------------------------------------------------------
# eigenvalue curves of the homotopy (1-t) A + t B
# ---------------------------------------------------------------------------

@dataclass
class CurveFamily:
    """Eigenvalue curves on a refined grid; row i of ``curves`` is one curve."""

    ts: np.ndarray
    curves: np.ndarray
    delta: float
    max_gap: float


def _default_delta(spec_a: np.ndarray, spec_b: np.ndarray) -> float:
    pts = np.concatenate([spec_a, spec_b])
    diameter = float(np.max(np.abs(pts[:, None] - pts[None, :])))
    return max(0.01 * diameter, 1e-6)


def trace_curves(A, B, delta: float | None = None, max_steps: int = 2 ** 16) -> CurveFamily:
    """Trace the n eigenvalue curves connecting sigma(A) to sigma(B).

    Starts from 64 uniform steps and bisects any interval whose endpoint
    spectra are farther than ``delta`` apart in bottleneck distance, up to
    ``max_steps`` intervals. Consecutive spectra are then linked by the
    bottleneck-optimal permutation.
    """
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise SizeMismatch(f"matrix shapes differ: {A.shape} vs {B.shape}")

    def spectrum_at(t: float) -> np.ndarray:
        return eigenvalues((1.0 - t) * A + t * B)

    ts = list(np.linspace(0.0, 1.0, 65))
    specs = [spectrum_at(t) for t in ts]
    if delta is None:
        delta = _default_delta(specs[0], specs[-1])

    def gap(i: int) -> float:
        cost = np.abs(specs[i][:, None] - specs[i + 1][None, :])
        return matching.bottleneck_assignment(cost)[1]

    gaps = [gap(i) for i in range(len(ts) - 1)]
    while True:
        offenders = [i for i, g in enumerate(gaps) if g > delta]
        if not offenders:
            break
        if len(ts) - 1 + len(offenders) > max_steps:
            worst = max(offenders, key=lambda i: gaps[i])
            raise CurveResolutionFailure(
                f"refinement cap {max_steps} reached; worst interval "
                f"[{ts[worst]}, {ts[worst + 1]}] has gap {gaps[worst]:.3e} > delta {delta:.3e}",
                interval=(ts[worst], ts[worst + 1]),
            )
        for i in reversed(offenders):
            mid = 0.5 * (ts[i] + ts[i + 1])
            ts.insert(i + 1, mid)
            specs.insert(i + 1, spectrum_at(mid))
            left = gap(i)
            right = gap(i + 1)
            gaps[i:i + 1] = [left, right]

    n = A.shape[0]
    curves = np.empty((n, len(ts)), dtype=complex)
    curves[:, 0] = specs[0]
    prev = specs[0]
    for k in range(1, len(ts)):
        cost = np.abs(prev[:, None] - specs[k][None, :])
        perm, _ = matching.bottleneck_assignment(cost)
        prev = specs[k][perm]
        curves[:, k] = prev
    return CurveFamily(ts=np.asarray(ts), curves=curves, delta=delta, max_gap=max(gaps))


@dataclass
class CurveCheckReport:
    """Per-curve interpolation lower-bound results along traced eigenvalue curves."""

    per_curve: list
    violations: int
    skipped_samples: int


def curve_interpolation_check(
    family: CurveFamily, zeros_a, m: int | None = None, tol: float = 1e-8
) -> CurveCheckReport:
    """Check each curve's maximal zero-product against its geodesic floor.

    For a curve with endpoints a, b and q solving k(q) = p(a, b), the
    maximum over the curve of prod_i p(z(t), l_i) must reach at least
    sqrt(k(q^{2m})). Samples that touch the unit circle are skipped and
    counted.
    """
    lam = np.asarray(list(zeros_a), dtype=complex)
    if m is None:
        m = lam.size
    per_curve = []
    violations = 0
    skipped = 0
    for row in family.curves:
        a, b = complex(row[0]), complex(row[-1])
        keep = np.abs(row) < 1.0 - 1e-14
        skipped += int(np.sum(~keep))
        samples = row[keep]
        p_ab = pseudo_distance(a, b)
        q = inverse_k(p_ab)
        target = math.sqrt(modulus_k(q ** (2 * m)))
        factors = np.abs(
            (samples[None, :] - lam[:, None]) / (1.0 - np.conj(lam)[:, None] * samples[None, :])
        )
        achieved = float(np.max(np.prod(factors, axis=0))) if samples.size else 0.0
        slack = achieved - target
        if slack < -tol:
            violations += 1
        per_curve.append(
            {
                "a": [a.real, a.imag],
                "b": [b.real, b.imag],
                "p_ab": p_ab,
                "target": target,
                "achieved": achieved,
                "slack": slack,
            }
        )
    return CurveCheckReport(per_curve=per_curve, violations=violations, skipped_samples=skipped)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExperimentConfig:
    suite: str = "all"
    trials: int = 100
    master_seed: int = 0
    dimension: int = 6
    perturbation_norm: float = 1e-10
    target_norm_a: float = 0.9
    cn: str = "bek"
    use_norm_b: bool = False
    threads: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")
        if self.perturbation_norm < 0:
            raise ConfigError("perturbation norm must be nonnegative")
        if not 0.0 < self.target_norm_a < 1.0:
            raise ConfigError("target norm for A must lie in (0, 1)")
        if self.master_seed < 0:
            raise ConfigError("master seed must be nonnegative")


class _Check:
    """Aggregates slack samples and violations for one named property."""

    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.count = 0
        self.slacks: list[float] = []
        self.violations: list[dict] = []

    def add(self, trial: int, slack: float, detail=None):
        self.count += 1
        self.slacks.append(float(slack))
        if slack < -self.tol:
            record = {"trial": trial, "slack": float(slack)}
            if detail is not None:
                record["detail"] = detail
            if len(self.violations) < 20:  # keep reports bounded
                self.violations.append(record)

    def to_json_dict(self) -> dict:
        out = {
            "name": self.name,
            "tolerance": self.tol,
            "evaluations": self.count,
            "violations": len(self.violations),
            "violation_examples": self.violations,
        }
        if self.slacks:
            arr = np.asarray(self.slacks)
            counts, edges = np.histogram(arr, bins=20)
            out["slack"] = {
                "min": float(arr.min()),
                "max": float(arr.max()),
                "histogram_counts": [int(c) for c in counts],
                "histogram_edges": [float(e) for e in edges],
            }
        return out


def _serial(mat: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in np.asarray(mat, complex).ravel()]


def _check(events: list, name: str, slack: float, tol: float, detail=None):
    events.append((name, slack, tol, detail))


def _ok(events: list, name: str, passed: bool, detail=None):
    _check(events, name, 0.0 if passed else -1.0, 0.5, detail)


# --- per-suite trial bodies -------------------------------------------------

def _trial_linalg(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    n = int(rng.integers(2, 7))
    A = ginibre(n, rng)
    B = ginibre(n, rng)
    _check(ev, "op_norm_submultiplicative", op_norm(A) * op_norm(B) - op_norm(A @ B), 1e-9)

    svals = rng.uniform(0.1, 1.0, n)
    S = random_unitary(n, rng) @ np.diag(svals) @ random_unitary(n, rng)
    moved = np.linalg.solve(S, A @ S)
    drift = matching.d_euclid(eigenvalues(A), eigenvalues(moved))
    _check(ev, "eigenvalues_similarity_invariant", 1e-6 - drift, 0.0, {"drift": drift})

    _ok(ev, "ginibre_nonderogatory", min_poly_degree(A) == n, {"n": n})
    return ev


def _random_disk_point(rng, rmax: float = 0.98) -> complex:
    return rng.uniform(0.0, rmax) * np.exp(2j * np.pi * rng.uniform())


def _trial_hypgeo(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    a, b, c = (_random_disk_point(rng) for _ in range(3))

    theta = 2.0 * np.pi * rng.uniform()
    center = _random_disk_point(rng, 0.95)
    moved = abs(
        pseudo_distance(mobius(a, center, theta), mobius(b, center, theta)) - pseudo_distance(a, b)
    )
    _check(ev, "mobius_invariance", 1e-12 - moved, 0.0)

    pab, pbc, pac = pseudo_distance(a, b), pseudo_distance(b, c), pseudo_distance(a, c)
    _check(ev, "strong_triangle", (pab + pbc) / (1.0 + pab * pbc) - pac, 1e-12)

    r = rng.uniform(0.02, 0.95)
    center2 = _random_disk_point(rng, 0.9)
    C, R = to_euclidean(HyperbolicDisk(center=center2, radius=r))
    phis = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
    worst = max(abs(pseudo_distance(center2, C + R * np.exp(1j * phi)) - r) for phi in phis)
    _check(ev, "disk_equivalence", 1e-10 - worst, 0.0, {"center": [C.real, C.imag], "r": r})

    g = Geodesic(_random_disk_point(rng, 0.9), _random_disk_point(rng, 0.9))
    z, w = _random_disk_point(rng, 0.97), _random_disk_point(rng, 0.97)
    _check(
        ev,
        "projection_contracts",
        pseudo_distance(z, w) - pseudo_distance(project(g, z), project(g, w)),
        1e-10,
    )
    return ev


def _trial_elliptic(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    q = rng.uniform(1e-6, 0.99)
    _check(
        ev,
        "representation_agreement",
        1e-12 - abs(modulus_k(q) - modulus_k_product(q)),
        0.0,
        {"q": q},
    )

    q2 = rng.uniform(0.0, 0.6)
    _check(ev, "inverse_round_trip", 1e-9 - abs(inverse_k(modulus_k(q2)) - q2), 0.0, {"q": q2})

    q3 = float(rng.choice([0.5, 0.05, 0.005]))
    n = int(rng.integers(1, 101))
    lhs, rhs = modulus_power_pair(q3, n)
    _check(ev, "power_inequality", lhs - rhs, 1e-12, {"q": q3, "n": n})
    return ev


def _fixed_elliptic(cfg: ExperimentConfig) -> list:
    ev: list = []
    # strictly increasing until double precision saturates k at 1.0 (q ~ 0.77);
    # past saturation the series ratio wobbles within a few ulps of 1
    grid = np.linspace(0.0, 0.7, 10_000)
    vals = [modulus_k(q) for q in grid]
    _ok(ev, "strictly_increasing_below_saturation", all(x < y for x, y in zip(vals, vals[1:])))
    sat = [modulus_k(q) for q in np.linspace(0.7, 1.0 - 1e-8, 100)]
    _ok(ev, "monotone_at_saturation_up_to_ulps", all(y >= x - 5e-15 for x, y in zip(sat, sat[1:])))
    _ok(ev, "saturates_at_one", all(abs(v - 1.0) <= 1e-13 for v in sat[30:]))
    return ev


def _poly_max_on_segment(coeffs: np.ndarray, a: complex, b: complex) -> float:
    t = np.linspace(0.0, 1.0, 4097)
    z = a + t * (b - a)
    vals = np.abs(np.polyval(coeffs, z))
    best = float(vals.max())
    for idx in np.argsort(vals)[::-1][:4]:
        lo, hi = t[max(idx - 1, 0)], t[min(idx + 1, len(t) - 1)]
        for _ in range(80):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            if abs(np.polyval(coeffs, a + m1 * (b - a))) < abs(np.polyval(coeffs, a + m2 * (b - a))):
                lo = m1
            else:
                hi = m2
        best = max(best, float(abs(np.polyval(coeffs, a + 0.5 * (lo + hi) * (b - a)))))
    return best


def _trial_blaschke(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    q = rng.uniform(0.05, 0.9)
    n = int(rng.integers(1, 4))
    edge = math.sqrt(modulus_k(q))
    zeros = rng.uniform(-0.999, 0.999, n)
    achieved = blaschke.max_abs_on_segment(blaschke.BlaschkeProduct(tuple(zeros)), -edge, edge)
    _check(
        ev,
        "segment_minimax_floor",
        achieved - blaschke.blaschke_minimax(q, n),
        1e-9,
        {"q": q, "n": n, "zeros": list(zeros)},
    )

    lhs = math.sqrt(modulus_k(q ** (2 * n)))
    rhs = modulus_k(q) ** n / 2.0 ** (2 * n - 1)
    _check(ev, "blaschke_beats_polynomial_floor", lhs - rhs, 1e-12, {"q": q, "n": n})

    deg = int(rng.integers(1, 5))
    roots = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
    coeffs = np.poly(roots)  # monic
    a = rng.standard_normal() + 1j * rng.standard_normal()
    b = rng.standard_normal() + 1j * rng.standard_normal()
    _check(
        ev,
        "chebyshev_polynomial_floor",
        _poly_max_on_segment(coeffs, a, b) - blaschke.cheb_poly_lower_bound(a, b, deg),
        1e-9,
        {"deg": deg},
    )
    return ev


def _random_zero_set(rng, lo_mod: float, hi_mod: float, size: int) -> np.ndarray:
    return rng.uniform(lo_mod, hi_mod, size) * np.exp(2j * np.pi * rng.uniform(0, 1, size))


def _trial_modelop(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    zs = _random_zero_set(rng, 0.0, 0.999, int(rng.integers(1, 9)))
    model = modelop.build_model_matrix(zs)
    _check(ev, "model_norm_le_1", 1.0 - op_norm(model.matrix), 1e-9)
    spec_gap = matching.d_euclid(eigenvalues(model.matrix), zs)
    _check(ev, "model_spectrum_matches", 1e-8 - spec_gap, 0.0, {"gap": spec_gap})

    m = int(rng.integers(1, 6))
    zs2 = _random_zero_set(rng, 0.1, 0.95, m)
    A = random_prescribed_contraction(zs2, rng)
    inv_gap = modelop.inverse_norm_bound(zs2) - op_norm(np.linalg.inv(A))
    _check(ev, "inverse_norm_bound", inv_gap, 1e-8, {"zeros": _serial(zs2)})

    z = _random_disk_point(rng, 1.0)
    if min(abs(z - w) for w in zs2) > 1e-3:
        direct = op_norm(
            np.linalg.solve(z * np.eye(m) - A, np.eye(m) - np.conj(z) * A)
        )
        _check(
            ev,
            "mobius_resolvent_bound",
            modelop.mobius_resolvent_bound(zs2, z) - direct,
            1e-8,
            {"z": [z.real, z.imag]},
        )

    num = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    poles = _random_zero_set(rng, 1.05, 2.0, 2)
    den = np.poly(poles)
    rep = modelop.rational_dominance_check(A, zs2, num, den)
    _check(
        ev,
        "rational_dominance",
        rep.rhs_norm - rep.lhs_norm,
        1e-8,
        {"zeros": _serial(zs2), "lhs": rep.lhs_norm, "rhs": rep.rhs_norm},
    )

    # Hadamard-type determinant bound, the resolvent strengthening, and their chain
    n = int(rng.integers(2, 7))
    X = random_contraction(n, rng.uniform(0.3, 1.0), rng)
    Y = X + random_perturbation(n, rng.uniform(1e-3, 0.5), rng)
    diff = op_norm(X - Y)
    lam = eigenvalues(X)
    for z in eigenvalues(Y):
        det_val = abs(np.linalg.det(z * np.eye(n) - X))
        _check(
            ev,
            "hadamard_determinant_bound",
            diff * (op_norm(X) + op_norm(Y)) ** (n - 1) - det_val,
            1e-8,
        )
        res = op_norm(np.linalg.inv(z * np.eye(n) - X))
        _check(ev, "bauer_fike", res - 1.0 / diff, 1e-8)
        strengthened = op_norm(z * np.eye(n) - X) ** (n - 1) / float(np.prod(np.abs(z - lam)))
        _check(ev, "resolvent_product_bound", strengthened - res, 1e-8)
    return ev


def _trial_matching(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    n = int(rng.integers(2, 8))
    cost = rng.uniform(0.0, 1.0, (n, n))
    _, value = matching.bottleneck_assignment(cost)
    perms = np.array(list(itertools.permutations(range(n))))
    brute = float(cost[np.arange(n)[None, :], perms].max(axis=1).min())
    _ok(ev, "bottleneck_exact", value == brute, {"value": value, "brute": brute})

    sa = np.array([_random_disk_point(rng) for _ in range(n)])
    sb = np.array([_random_disk_point(rng) for _ in range(n)])
    _check(ev, "d_euclid_symmetric", 1e-14 - abs(matching.d_euclid(sa, sb) - matching.d_euclid(sb, sa)), 0.0)
    _check(ev, "d_hyper_symmetric", 1e-14 - abs(matching.d_hyper(sa, sb) - matching.d_hyper(sb, sa)), 0.0)

    phase = np.exp(1j * 2.0 * np.pi * rng.uniform())
    _check(
        ev,
        "rotation_invariance",
        1e-12
        - max(
            abs(matching.d_euclid(phase * sa, phase * sb) - matching.d_euclid(sa, sb)),
            abs(matching.d_hyper(phase * sa, phase * sb) - matching.d_hyper(sa, sb)),
        ),
        0.0,
    )
    _ok(ev, "distance_ranges", matching.d_euclid(sa, sb) <= 2.0 and matching.d_hyper(sa, sb) <= 1.0)
    return ev


def _theorem1_instance(rng) -> tuple:
    n = int(rng.integers(2, 9))
    A = random_contraction(n, rng.uniform(0.2, 1.0), rng)
    if rng.uniform() < 0.5:
        B = A + random_perturbation(n, 10.0 ** rng.uniform(-8, -0.3), rng)
    else:
        B = random_contraction(n, rng.uniform(0.2, 1.0), rng)
    return n, A, B


def _trial_bounds(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []

    n, A, B = _theorem1_instance(rng)
    bi = bounds.BoundInputs(
        norm_a=op_norm(A),
        norm_b=op_norm(B),
        rho_b=min(spectral_radius(B), op_norm(B)),
        diff_norm=op_norm(A - B),
        m=n,
        n=n,
    )
    d_e = matching.d_euclid(eigenvalues(A), eigenvalues(B))
    _check(
        ev,
        "euclid_bound_holds",
        bounds.euclid_bound(bi) - d_e,
        1e-9,
        {"A": _serial(A), "B": _serial(B)},
    )

    n2 = int(rng.integers(2, 9))
    A2 = random_contraction(n2, rng.uniform(0.2, 0.95), rng)
    B2 = A2 + random_perturbation(n2, 10.0 ** rng.uniform(-10, -2), rng)
    if op_norm(B2) < 1.0:
        bi2 = bounds.BoundInputs(
            norm_a=op_norm(A2),
            norm_b=op_norm(B2),
            rho_b=min(spectral_radius(B2), op_norm(B2)),
            diff_norm=op_norm(A2 - B2),
            m=n2,
            n=n2,
        )
        d_h = matching.d_hyper(eigenvalues(A2), eigenvalues(B2))
        exact = bounds.hyper_bound_exact(bi2)
        simple = bounds.hyper_bound_simple(bi2)
        _check(ev, "hyper_bound_holds", exact - d_h, 1e-9, {"A": _serial(A2), "B": _serial(B2)})
        _check(ev, "hyper_chain", simple - exact, 1e-12)

    # Krause-type bound on an admissible instance (n >= 2)
    n3 = int(rng.integers(2, 5))
    zeros = _random_zero_set(rng, 0.35, 0.85, n3)
    A3 = random_prescribed_contraction(zeros, rng)
    min_eig = float(np.min(np.abs(zeros)))
    strict = bounds.krause_alpha(n3) ** n3 * 0.5 ** (n3 - 1) * min_eig ** n3
    B3 = A3 + random_perturbation(n3, 0.5 * strict, rng)
    bi3 = bounds.BoundInputs(
        norm_a=op_norm(A3),
        norm_b=op_norm(B3),
        rho_b=min(spectral_radius(B3), op_norm(B3)),
        diff_norm=op_norm(A3 - B3),
        m=n3,
        n=n3,
    )
    if bounds.krause_condition(bi3, min_eig):
        d_e3 = matching.d_euclid(eigenvalues(A3), eigenvalues(B3))
        _check(
            ev,
            "krause_bound_holds",
            bounds.krause_bound(bi3) - d_e3,
            1e-9,
            {"A": _serial(A3), "B": _serial(B3)},
        )

    a = _random_disk_point(rng, 0.95)
    r_h = rng.uniform(0.01, 0.95)
    r_e = rng.uniform(0.01, 1.5)
    if bounds.containment_condition(a, r_h, r_e):
        C, R = to_euclidean(HyperbolicDisk(center=a, radius=r_h))
        _check(ev, "containment_geometry", r_e - (abs(a - C) + R), 1e-10)

    # monotonicity in the distance argument
    d1, d2 = sorted(rng.uniform(0.0, 0.5, 2))
    lo = bounds.BoundInputs(norm_a=0.7, norm_b=0.7, rho_b=0.5, diff_norm=float(d1), m=3, n=3)
    hi = bounds.BoundInputs(norm_a=0.7, norm_b=0.7, rho_b=0.5, diff_norm=float(d2), m=3, n=3)
    mono = (
        bounds.euclid_bound(hi) - bounds.euclid_bound(lo),
        bounds.hyper_bound_exact(hi) - bounds.hyper_bound_exact(lo),
        bounds.hyper_bound_simple(hi) - bounds.hyper_bound_simple(lo),
        bounds.krause_bound(hi) - bounds.krause_bound(lo),
    )
    _check(ev, "bounds_monotone_in_distance", min(mono), 1e-12)
    return ev


def _fixed_bounds(cfg: ExperimentConfig) -> list:
    ev: list = []
    ns = np.arange(2, 10_001)
    inv_alpha = 2.0 * (np.sqrt(ns * ns - 1.0) / 2.0) ** (1.0 / ns) * np.sqrt((ns + 1.0) / (ns - 1.0))
    _ok(ev, "inv_alpha_decreasing_to_2", bool(np.all(np.diff(inv_alpha) < 0)) and inv_alpha[-1] > 2.0)
    return ev


def _trial_curves(cfg: ExperimentConfig, rng, trial: int) -> list:
    ev: list = []
    n = 4
    A = random_contraction(n, rng.uniform(0.3, 0.9), rng)
    B = A + random_perturbation(n, 10.0 ** rng.uniform(-4, -0.7), rng)
    B = B * min(1.0, 0.999 / op_norm(B))
    family = trace_curves(A, B)
    spec_a, spec_b = eigenvalues(A), eigenvalues(B)
    end_gap = max(
        matching.d_euclid(family.curves[:, 0], spec_a),
        matching.d_euclid(family.curves[:, -1], spec_b),
    )
    _check(ev, "curve_endpoints_match_spectra", 1e-8 - end_gap, 0.0)
    report = curve_interpolation_check(family, spec_a)
    worst = min((c["slack"] for c in report.per_curve), default=0.0)
    _check(ev, "curve_interpolation_floor", worst, 1e-8, {"A": _serial(A), "B": _serial(B)})
    return ev


_SUITES = {
    "linalg": (_trial_linalg, None),
    "hypgeo": (_trial_hypgeo, None),
    "elliptic": (_trial_elliptic, _fixed_elliptic),
    "blaschke": (_trial_blaschke, None),
    "modelop": (_trial_modelop, None),
    "matching": (_trial_matching, None),
    "bounds": (_trial_bounds, _fixed_bounds),
    "curves": (_trial_curves, None),
}
SUITE_NAMES = tuple(_SUITES) + ("all",)


@dataclass
class SuiteResult:
    name: str
    trials: int
    checks: list
    elapsed_seconds: float

    @property
    def violation_count(self) -> int:
        return sum(len(c.violations) for c in self.checks)

    def to_json_dict(self) -> dict:
        # wall time intentionally omitted: reports must be byte-identical across runs
        return {
            "suite": self.name,
            "trials": self.trials,
            "checks": [c.to_json_dict() for c in self.checks],
        }


@dataclass
class SuiteReport:
    config: ExperimentConfig
    suites: list
    elapsed_seconds: float

    @property
    def total_violations(self) -> int:
        return sum(s.violation_count for s in self.suites)

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "suite": self.config.suite,
                "trials": self.config.trials,
                "master_seed": self.config.master_seed,
                "random_model": "ginibre-rescaled",
            },
            "suites": [s.to_json_dict() for s in self.suites],
            "total_violations": self.total_violations,
        }


def _run_one_suite(name: str, cfg: ExperimentConfig) -> SuiteResult:
    trial_fn, fixed_fn = _SUITES[name]
    suite_index = list(_SUITES).index(name)
    start = time.perf_counter()
    checks: dict[str, _Check] = {}

    def absorb(trial: int, events: list):
        for check_name, slack, tol, detail in events:
            chk = checks.setdefault(check_name, _Check(check_name, tol))
            chk.add(trial, slack, detail)

    if fixed_fn is not None:
        absorb(-1, fixed_fn(cfg))

    def run_trial(trial: int) -> list:
        rng = seeded_rng(cfg.master_seed, suite_index, trial)
        return trial_fn(cfg, rng, trial)

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            results = list(pool.map(run_trial, range(cfg.trials)))
    else:
        results = [run_trial(t) for t in range(cfg.trials)]
    for trial, events in enumerate(results):
        absorb(trial, events)
    return SuiteResult(
        name=name,
        trials=cfg.trials,
        checks=list(checks.values()),
        elapsed_seconds=time.perf_counter() - start,
    )


def run_suite(cfg: ExperimentConfig) -> SuiteReport:
    """Run one named verification suite (or ``all``) and aggregate results."""
    if cfg.suite not in SUITE_NAMES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from {SUITE_NAMES}")
    names = list(_SUITES) if cfg.suite == "all" else [cfg.suite]
    start = time.perf_counter()
    results = [_run_one_suite(name, cfg) for name in names]
    return SuiteReport(config=cfg, suites=results, elapsed_seconds=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# figure and table datasets
# ---------------------------------------------------------------------------

TABLE_ALPHA_DEFAULT_NS = tuple(range(1, 13)) + (100, 1000)
FIGURE_K_DEFAULT_QS = (0.5, 0.05, 0.005)


@dataclass
class FigureData:
    name: str
    columns: list
    rows: list

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join(_csv_cell(v) for v in row))
        return "\n".join(lines) + "\n"


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def table_alpha_data(ns=TABLE_ALPHA_DEFAULT_NS) -> FigureData:
    rows = [(int(n), 1.0 / bounds.krause_alpha(int(n))) for n in ns]
    return FigureData(name="table-alpha", columns=["n", "inv_alpha"], rows=rows)


def figure_k_data(qs=FIGURE_K_DEFAULT_QS, n_max: int = 20) -> FigureData:
    if not qs:
        raise ConfigError("at least one nome value is required")
    if n_max < 1:
        raise ConfigError("n_max must be at least 1")
    rows = []
    for q in qs:
        for n in range(1, n_max + 1):
            lhs, rhs = modulus_power_pair(float(q), n)
            rows.append((float(q), n, lhs, rhs))
    return FigureData(
        name="figure-k", columns=["q", "n", "sqrt_k_qn", "chebyshev_rhs"], rows=rows
    )


@dataclass
class LocalizationData:
    """Eigenvalues of A and B plus localization disks, ready to render."""

    norm_a: float
    norm_b: float
    rho_b: float
    eps: float
    n: int
    m: int
    cn: str
    use_norm_b: bool
    eps_floored: bool
    spec_a: np.ndarray
    spec_b: np.ndarray
    disks: list

    def to_json_dict(self) -> dict:
        return {
            "inputs": {
                "norm_a": self.norm_a,
                "norm_b": self.norm_b,
                "rho_b": self.rho_b,
                "eps": self.eps,
                "n": self.n,
                "m": self.m,
                "cn": self.cn,
                "use_norm_b": self.use_norm_b,
                "eps_floored": self.eps_floored,
            },
            "eigenvalues_a": [[z.real, z.imag] for z in self.spec_a],
            "eigenvalues_b": [[z.real, z.imag] for z in self.spec_b],
            "disks": [d.to_json_dict() for d in self.disks],
        }


def localization_dataset(
    A,
    eps: float,
    seed,
    modes=("euclid", "hyper"),
    cn="bek",
    use_norm_b: bool = False,
    m: int | None = None,
) -> LocalizationData:
    """Disks localizing sigma(A + E) around sigma(A) for a random ||E|| = eps.

    Below EPS_FLOOR the perturbation is invisible at working precision:
    B is not formed, sigma(B) is reported as sigma(A), and radii are
    computed analytically from eps.
    """
    A = as_matrix(A)
    n = A.shape[0]
    norm_a = op_norm(A)
    spec_a = eigenvalues(A)
    floored = eps < EPS_FLOOR
    if floored:
        spec_b = spec_a.copy()
        norm_b = norm_a
        rho_b = float(np.max(np.abs(spec_a)))
    else:
        B = A + random_perturbation(n, eps, seed)
        spec_b = eigenvalues(B)
        norm_b = op_norm(B)
        rho_b = min(spectral_radius(B), norm_b)
    bi = bounds.BoundInputs(
        norm_a=norm_a,
        norm_b=norm_b,
        rho_b=rho_b,
        diff_norm=eps,
        m=m if m is not None else n,
        n=n,
    )
    disks = []
    for mode in modes:
        disks.extend(bounds.localization_disks(spec_a, bi, mode, cn=cn, use_norm_b=use_norm_b))
    return LocalizationData(
        norm_a=norm_a,
        norm_b=norm_b,
        rho_b=rho_b,
        eps=eps,
        n=n,
        m=bi.m,
        cn=str(cn),
        use_norm_b=use_norm_b,
        eps_floored=floored,
        spec_a=spec_a,
        spec_b=spec_b,
        disks=disks,
    )


def disk_contains_eigenvalue(disk: bounds.Disk, spectrum) -> bool:
    spectrum = np.atleast_1d(np.asarray(spectrum, dtype=complex))
    return bool(np.min(np.abs(spectrum - disk.center)) <= disk.radius + 1e-12)


def localization_figure_data(which: str, cfg: ExperimentConfig) -> FigureData:
    """Disk datasets behind the two localization figures.

    ``fig1``: n = 6, eps = 1e-10, panels ||A|| in {0.3, 0.9}, Euclidean
    constant 2^(2-1/n). ``fig3``: n = 12, eps = 1e-18 (below the working-
    precision floor), panels ||A|| in {0.5, 0.95}, Euclidean constant
    2.6543.
    """
    if which == "fig1":
        n, eps, panels, cn = 6, 1e-10, (0.3, 0.9), "bek"
    elif which == "fig3":
        n, eps, panels, cn = 12, 1e-18, (0.5, 0.95), bounds.KRAUSE_C12
    else:
        raise ConfigError(f"unknown localization figure {which!r}")
    rows = []
    for panel_idx, norm_a in enumerate(panels):
        rng = seeded_rng(cfg.master_seed, 1000 + panel_idx, 0)
        A = random_contraction(n, norm_a, rng)
        data = localization_dataset(A, eps, rng, cn=cn, use_norm_b=cfg.use_norm_b)
        for z in data.spec_a:
            rows.append((norm_a, "eig_a", "", z.real, z.imag, 0.0, False))
        for z in data.spec_b:
            rows.append((norm_a, "eig_b", "", z.real, z.imag, 0.0, False))
        for d in data.disks:
            rows.append((norm_a, "disk", d.mode, d.center.real, d.center.imag, d.radius, d.vacuous))
    return FigureData(
        name=which,
        columns=["panel_norm_a", "kind", "mode", "re", "im", "radius", "vacuous"],
        rows=rows,
    )


def figure_data(which: str, cfg: ExperimentConfig | None = None) -> FigureData:
    """Dispatch to the dataset builders for the paper-style figures/tables."""
    cfg = cfg or ExperimentConfig()
    if which == "table1":
        return table_alpha_data()
    if which == "fig2":
        return figure_k_data()
    if which in ("fig1", "fig3"):
        return localization_figure_data(which, cfg)
    raise ConfigError(f"unknown figure dataset {which!r}")
