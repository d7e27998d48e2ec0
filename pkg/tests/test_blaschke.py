import cmath
import math

import numpy as np
import pytest

from specvar.blaschke import (
    BlaschkeProduct,
    blaschke_eval,
    blaschke_minimax,
    cheb_poly_lower_bound,
    max_abs_on_segment,
)
from specvar.elliptic import modulus_k
from specvar.errors import InvalidInputs, InvalidSpectrum, PoleEvaluation


def brute_segment_max(zeros, lo, hi, points=1_000_000):
    t = np.linspace(lo, hi, points)
    vals = np.ones_like(t)
    for lam in zeros:
        vals *= np.abs((t - lam) / (1.0 - np.conj(lam) * t))
    return float(vals.max())


class TestEval:
    def test_single_zero_at_origin(self):
        assert blaschke_eval(BlaschkeProduct((0.0,)), 0.3) == pytest.approx(0.3, abs=1e-15)

    def test_zero_hit(self):
        assert blaschke_eval(BlaschkeProduct((0.5,)), 0.5) == 0.0

    def test_boundary_unimodular(self):
        bp = BlaschkeProduct((0.5, -0.5))
        for t in np.linspace(0.0, 2 * np.pi, 17):
            assert abs(abs(blaschke_eval(bp, cmath.exp(1j * t))) - 1.0) <= 1e-12

    def test_empty_product_is_one(self):
        assert blaschke_eval(BlaschkeProduct(()), 0.7j) == 1.0

    def test_pole(self):
        with pytest.raises(PoleEvaluation):
            blaschke_eval(BlaschkeProduct((0.5,)), 2.0)

    def test_zeros_must_be_in_disk(self):
        with pytest.raises(InvalidSpectrum):
            BlaschkeProduct((1.5,))

    def test_maps_disk_to_disk(self):
        rng = np.random.default_rng(0)
        bp = BlaschkeProduct(tuple(rng.uniform(0, 1, 3) * np.exp(2j * np.pi * rng.uniform(0, 1, 3))))
        for _ in range(50):
            z = rng.uniform(0, 1) * np.exp(2j * np.pi * rng.uniform())
            assert abs(blaschke_eval(bp, z)) <= 1.0 + 1e-12


class TestSegmentMax:
    def test_single_zero_maximized_at_endpoint(self):
        assert max_abs_on_segment(BlaschkeProduct((0.0,)), -0.5, 0.5) == pytest.approx(0.5, abs=1e-12)

    def test_degree_zero(self):
        assert max_abs_on_segment(BlaschkeProduct(()), -0.5, 0.5) == 1.0

    def test_against_dense_grid_oracle(self):
        rng = np.random.default_rng(21)
        for _ in range(5):
            zeros = tuple(rng.uniform(-0.95, 0.95, 3))
            got = max_abs_on_segment(BlaschkeProduct(zeros), -0.8, 0.8)
            assert got == pytest.approx(brute_segment_max(zeros, -0.8, 0.8), abs=1e-8)

    def test_closed_endpoints_accepted(self):
        # saturated moduli push segment ends to +-1.0 where |B| = 1 exactly
        assert max_abs_on_segment(BlaschkeProduct((0.3,)), -1.0, 1.0) == pytest.approx(1.0, abs=1e-12)

    def test_segment_must_be_ordered(self):
        with pytest.raises(InvalidInputs):
            max_abs_on_segment(BlaschkeProduct((0.0,)), 0.5, -0.5)


class TestMinimax:
    def test_value_formula(self):
        for q in (0.3, 0.6):
            for n in (1, 2, 3):
                assert blaschke_minimax(q, n) == pytest.approx(math.sqrt(modulus_k(q ** n)), abs=0)

    def test_degenerate_interval(self):
        assert blaschke_minimax(0.0, 3) == 0.0

    def test_n1_attained_by_zero_at_origin(self):
        for q in (0.3, 0.6):
            edge = math.sqrt(modulus_k(q))
            achieved = max_abs_on_segment(BlaschkeProduct((0.0,)), -edge, edge)
            assert achieved == pytest.approx(blaschke_minimax(q, 1), abs=1e-10)

    def test_random_candidates_never_beat_floor(self):
        rng = np.random.default_rng(33)
        for q in (0.3, 0.6):
            edge = math.sqrt(modulus_k(q))
            for n in (1, 2, 3):
                floor = blaschke_minimax(q, n)
                for _ in range(50):
                    zeros = tuple(rng.uniform(-0.999, 0.999, n))
                    achieved = max_abs_on_segment(BlaschkeProduct(zeros), -edge, edge)
                    assert achieved >= floor - 1e-9

    def test_beats_polynomial_floor(self):
        # degree-2n minimax from the modulus dominates the classical n-th power route
        for q in (0.1, 0.3, 0.6, 0.9):
            for n in (1, 2, 3, 5):
                assert math.sqrt(modulus_k(q ** (2 * n))) >= modulus_k(q) ** n / 2.0 ** (2 * n - 1) - 1e-12


class TestChebPolyBound:
    def test_coincident_endpoints(self):
        assert cheb_poly_lower_bound(0.3 + 0.1j, 0.3 + 0.1j, 4) == 0.0

    def test_unit_interval_degree_1(self):
        assert cheb_poly_lower_bound(-1.0, 1.0, 1) == pytest.approx(1.0, abs=0)

    def test_degree_3(self):
        assert cheb_poly_lower_bound(0.0, 1.0, 3) == pytest.approx(1.0 / 32.0, abs=0)

    def test_random_monic_polynomials_respect_floor(self):
        rng = np.random.default_rng(44)
        for _ in range(200):
            deg = int(rng.integers(1, 5))
            roots = rng.standard_normal(deg) + 1j * rng.standard_normal(deg)
            coeffs = np.poly(roots)
            a = rng.standard_normal() + 1j * rng.standard_normal()
            b = rng.standard_normal() + 1j * rng.standard_normal()
            t = np.linspace(0.0, 1.0, 20_001)
            seg_max = float(np.abs(np.polyval(coeffs, a + t * (b - a))).max())
            assert seg_max >= cheb_poly_lower_bound(a, b, deg) - 1e-9
