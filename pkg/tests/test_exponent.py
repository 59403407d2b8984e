import logging
import unittest
from unittest.mock import patch

import numpy as np

from polarscaling import (
    ExponentResult,
    GridFunction,
    ResourceCapError,
    Side,
    Variant,
    curve_frame,
    eps_bounds,
    get_settings,
    is_submultiplicative,
    lk_sup,
    make_f0,
    make_g0,
    print_exponent_report,
    rho_series,
    series_frame,
    step_fk,
    step_gk,
    tail_limit_rates,
    tail_step,
)

logging.basicConfig(level=logging.WARNING)


def assert_non_decreasing(case: unittest.TestCase, results, tol: float = 1e-4):
    rates = np.array([r.rho_k for r in results])
    case.assertTrue(np.all(np.diff(rates) >= -tol), msg=f"rates: {rates}")


class TestBaseFunctions(unittest.TestCase):
    def test_f0_samples(self):
        """Test the closed form and zero endpoints of f_0."""
        f0 = make_f0(0.7, 0.6, 1 << 10)
        self.assertEqual(f0.size, 1 << 10)
        self.assertEqual(f0.samples[0], 0.0)
        self.assertEqual(f0.samples[-1], 0.0)
        self.assertAlmostEqual(f0(0.5), 0.5**1.3, places=12)
        self.assertAlmostEqual(float(f0.base(0.25)), 0.25**0.7 * 0.75**0.6, places=12)

    def test_f0_concave(self):
        """Test f_0 = z^0.7 (1 - z)^0.6 by grid second differences."""
        f0 = make_f0(0.7, 0.6, 1 << 14)
        self.assertTrue(np.all(np.diff(f0.samples, 2) <= 1e-12))

    def test_g0_concave(self):
        """Test the mutual-information base function by grid second differences."""
        g0 = make_g0(1 << 14)
        self.assertTrue(np.all(np.diff(g0.samples, 2) <= 1e-12))
        self.assertAlmostEqual(g0.left_exponent, 0.804)
        self.assertAlmostEqual(g0.right_exponent, 0.604)

    def test_invalid_parameters(self):
        """Test rejection of out-of-range exponents and small grids."""
        with self.assertRaises(ValueError):
            make_f0(1.2, 0.6, 1 << 10)
        with self.assertRaises(ValueError):
            make_f0(0.7, 0.6, 1 << 8)
        with self.assertRaises(ValueError):
            GridFunction(np.ones(5), 0.7, 0.6, 0, Variant.BHATTACHARYYA)

    def test_spread_bounds(self):
        """Test ε_l <= ε_h with ε_h = x - x² and both zero at the ends."""
        x = np.linspace(0.0, 1.0, 101)
        low, high = eps_bounds(x)
        np.testing.assert_allclose(high, x - x * x)
        self.assertTrue(np.all(low <= high))
        self.assertTrue(np.all(low >= 0.0))
        self.assertAlmostEqual(float(low[0]), 0.0)
        self.assertAlmostEqual(float(high[-1]), 0.0)
        with self.assertRaises(ValueError):
            eps_bounds(1.5)

    def test_spread_bounds_at_half(self):
        """Test ε_l(0.5) = 0.2135 and ε_h(0.5) = 0.25."""
        low, high = eps_bounds(0.5)
        self.assertAlmostEqual(float(low), 0.2135, delta=1e-3)
        self.assertAlmostEqual(float(high), 0.25, places=12)


class TestIterations(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.f0 = make_f0(0.7, 0.6, 1 << 12)
        cls.f1 = step_fk(cls.f0)

    def test_supremum_at_right_end_in_increasing_region(self):
        """Test f_1(z) = (f_0(z²) + f_0(2z - z²)) / 2 where f_0 increases."""
        j = 410
        z = j / self.f0.size
        expected = 0.5 * (self.f0.base(z * z) + self.f0.base(2 * z - z * z))
        self.assertAlmostEqual(self.f1.samples[j] / expected, 1.0, delta=1e-4)

    def test_first_iterate_at_half(self):
        """Test f_1(0.5) = (f_0(0.25) + f_0(0.5·sqrt(1.75))) / 2 = 0.3549."""
        self.assertAlmostEqual(self.f1(0.5), 0.354905, delta=1e-5)

    def test_supremum_matches_dense_scan(self):
        """Test the range-maximum supremum against a dense scan of the interval."""
        rng = np.random.default_rng(5)
        for f, f_next in ((self.f0, self.f1), (self.f1, step_fk(self.f1))):
            grid = f.grid
            for j in rng.integers(1, f.size, size=100):
                z = grid[j]
                lower, upper = z * np.sqrt(2.0 - z * z), z * (2.0 - z)
                inside = grid[(grid >= lower) & (grid <= upper)]
                candidates = np.concatenate([np.linspace(lower, upper, 2001), inside])
                expected = 0.5 * (f(z * z) + f(candidates).max())
                self.assertAlmostEqual(f_next.samples[j], expected, delta=1e-9)

    def test_monotone_tail_bands(self):
        """Test that f_k rises on the left band and falls on the right band."""
        f = make_f0(0.7, 0.6, 1 << 14)
        width = int(np.ceil(2.0 * get_settings().tail_band * f.size))
        for _ in range(10):
            f = step_fk(f)
            with self.subTest(k=f.k):
                self.assertTrue(np.all(np.diff(f.samples[: width + 1]) >= -1e-15))
                self.assertTrue(np.all(np.diff(f.samples[-width - 1 :]) <= 1e-15))

    def test_iterate_metadata(self):
        """Test iteration index and lineage."""
        f2 = step_fk(self.f1)
        self.assertEqual(f2.k, 2)
        self.assertEqual([g.k for g in f2.lineage()], [2, 1, 0])

    def test_wrong_variant(self):
        """Test that each step function accepts only its own variant."""
        with self.assertRaises(ValueError):
            step_gk(self.f0)
        with self.assertRaises(ValueError):
            step_fk(make_g0(1 << 10))

    def test_tail_step_matches_grid(self):
        """Test that the boundary recursion agrees with the grid near the band edge."""
        f3 = step_fk(step_fk(self.f1))
        z = 1e-3
        self.assertAlmostEqual(
            tail_step(f3, [z], Side.LEFT)[0] / f3(z), 1.0, delta=0.03
        )
        self.assertAlmostEqual(
            tail_step(f3, [z], Side.RIGHT)[0] / f3(1.0 - z), 1.0, delta=0.03
        )

    def test_tail_step_validation(self):
        """Test out-of-band points, broken chains and the node cap."""
        with self.assertRaises(ValueError):
            tail_step(self.f1, [0.5], Side.LEFT)
        orphan = GridFunction(self.f1.samples, 0.7, 0.6, 1, Variant.BHATTACHARYYA)
        with self.assertRaises(ValueError):
            tail_step(orphan, [1e-4], Side.LEFT)
        f4 = step_fk(step_fk(step_fk(self.f1)))
        with self.assertRaises(ResourceCapError):
            tail_step(f4, np.geomspace(1e-9, 1e-4, 10), Side.LEFT, node_cap=10)

    def test_lk_sup_keeps_curve(self):
        """Test the ratio supremum and its curve."""
        result = lk_sup(self.f1, self.f0)
        self.assertIsInstance(result, ExponentResult)
        self.assertEqual(result.k, 1)
        self.assertAlmostEqual(result.rho_k, -np.log2(result.L_k))
        z, values = result.curve
        self.assertEqual(z.shape, values.shape)
        self.assertAlmostEqual(float(values.max()), result.L_k)
        frame = curve_frame(result)
        self.assertEqual(list(frame.columns), ["z", "log2_L_k_over_k"])
        bare = lk_sup(self.f1, self.f0, keep_curve=False)
        with self.assertRaises(ValueError):
            curve_frame(bare)


class TestMutualInformationStep(unittest.TestCase):
    def test_never_below_dense_scan(self):
        """Test step_gk against a dense scan of the spread interval."""
        g = make_g0(1 << 10)
        x = g.grid
        low, high = eps_bounds(x)
        spreads = np.linspace(0.0, 1.0, 4001)[:, None] * (high - low)[None, :] + low[None, :]
        for _ in range(3):
            g_next = step_gk(g)
            pairs = g(np.clip(x + spreads, 0.0, 1.0)) + g(np.clip(x - spreads, 0.0, 1.0))
            dense = 0.5 * pairs.max(axis=0)
            dense[0] = dense[-1] = 0.0
            with self.subTest(k=g.k):
                self.assertTrue(np.all(g_next.samples >= dense - 1e-9))
                self.assertTrue(np.all(g_next.samples <= dense + 2e-3))
            g = g_next


class TestGridRefinement(unittest.TestCase):
    def test_doubling_grid_keeps_rates(self):
        """Test that doubling M moves ρ_k by less than 1e-4."""
        coarse = rho_series(Variant.BHATTACHARYYA, 0.7, 0.6, k_max=5, M=1 << 14)
        fine = rho_series(Variant.BHATTACHARYYA, 0.7, 0.6, k_max=5, M=1 << 15)
        for a, b in zip(coarse, fine):
            with self.subTest(k=a.k):
                self.assertAlmostEqual(a.rho_k, b.rho_k, delta=1e-4)


class TestTailRates(unittest.TestCase):
    def test_limit_rates(self):
        """Test that the boundary rates approach α - 1 and β - 1."""
        f = make_f0(0.7, 0.6, 1 << 14)
        for _ in range(10):
            f = step_fk(f)
            left, right = tail_limit_rates(f)
            self.assertAlmostEqual(left, -0.3, delta=0.01)
            self.assertAlmostEqual(right, -0.4, delta=0.01)

    def test_base_function_rates(self):
        """Test that the rates of f_0 are zero."""
        self.assertEqual(tail_limit_rates(make_f0(0.7, 0.6, 1 << 10)), (0.0, 0.0))


class TestBhattacharyyaSeries(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.results = rho_series(Variant.BHATTACHARYYA, 0.7, 0.6, k_max=50, M=1 << 17)

    def test_first_rate(self):
        """Test ρ_1 = 0.1498."""
        self.assertAlmostEqual(self.results[0].rho_k, 0.1498, delta=5e-4)

    def test_fiftieth_rate(self):
        """Test ρ_50 = 0.2097 and the implied μ <= 5.78."""
        rho_50 = self.results[-1].rho_k
        self.assertAlmostEqual(rho_50, 0.2097, delta=5e-4)
        self.assertLessEqual(1.0 + 1.0 / rho_50, 5.78)

    def test_rates_non_decreasing(self):
        """Test that ρ_k does not decrease with k."""
        assert_non_decreasing(self, self.results)

    def test_series_settles(self):
        """Test |ρ_50 - ρ_49| < 5e-4."""
        self.assertLess(abs(self.results[-1].rho_k - self.results[-2].rho_k), 5e-4)

    def test_submultiplicative(self):
        """Test L_k^(1/k) <= L_1 over the series."""
        self.assertTrue(is_submultiplicative(self.results))

    def test_kept_curves(self):
        """Test that curves are kept for k = 1 and k_max only."""
        kept = [r.k for r in self.results if r.curve is not None]
        self.assertEqual(kept, [1, 50])

    def test_series_frame_and_report(self):
        """Test the series table and the printed report."""
        frame = series_frame(self.results)
        self.assertEqual(len(frame), 50)
        np.testing.assert_allclose(frame["log2_L_k_over_k"], -frame["rho_k"])
        with patch("builtins.print") as mock_print:
            print_exponent_report(self.results)
        printed = " ".join(str(c.args[0]) for c in mock_print.call_args_list)
        self.assertIn("mu", printed)


class TestMutualInformationSeries(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.results = rho_series(Variant.MUTUAL_INFORMATION, k_max=50, M=1 << 17)

    def test_first_rate(self):
        """Test ρ'_1 = 0.1708."""
        self.assertAlmostEqual(self.results[0].rho_k, 0.1708, delta=1e-3)

    def test_fiftieth_rate(self):
        """Test ρ'_50 >= 0.1786."""
        self.assertGreaterEqual(self.results[-1].rho_k, 0.1786)

    def test_rates_non_decreasing(self):
        """Test that ρ'_k does not decrease with k."""
        assert_non_decreasing(self, self.results)

    def test_curves_stay_inside(self):
        """Test that the mutual-information curve excludes the tail bands."""
        z, _ = self.results[0].curve
        self.assertGreater(z.min(), 1e-3)
        self.assertLess(z.max(), 1.0 - 1e-3)


class TestSubmultiplicativeCheck(unittest.TestCase):
    def test_detects_violation(self):
        """Test that a series with L_2 > L_1² is rejected."""
        results = [
            ExponentResult(1, 0.9, 0.152, 0.5, Variant.BHATTACHARYYA),
            ExponentResult(2, 0.85, 0.117, 0.5, Variant.BHATTACHARYYA),
        ]
        self.assertFalse(is_submultiplicative(results))
        with self.assertRaises(ValueError):
            is_submultiplicative(results[1:])


if __name__ == "__main__":
    unittest.main()
