import logging
import unittest

import numpy as np

from polarscaling import (
    binary_entropy,
    inverse_binary_entropy,
    bit_reversal_permutation,
    RangeMaxQuery,
    trial_generator,
)

logging.basicConfig(level=logging.WARNING)


class TestBinaryEntropy(unittest.TestCase):
    def test_known_values(self):
        """Test h2 at its fixed points and a textbook value."""
        self.assertAlmostEqual(binary_entropy(0.5), 1.0, places=12)
        self.assertEqual(binary_entropy(0.0), 0.0)
        self.assertEqual(binary_entropy(1.0), 0.0)
        self.assertAlmostEqual(binary_entropy(0.11), 0.4999, places=3)
        self.assertAlmostEqual(binary_entropy(0.25), 0.8113, places=4)

    def test_vectorized(self):
        """Test that arrays keep their shape and scalars return floats."""
        values = binary_entropy(np.array([0.1, 0.2, 0.3]))
        self.assertEqual(values.shape, (3,))
        self.assertIsInstance(binary_entropy(0.3), float)

    def test_invalid_probability(self):
        """Test that probabilities outside [0, 1] are rejected."""
        with self.assertRaises(ValueError):
            binary_entropy(1.5)
        with self.assertRaises(ValueError):
            binary_entropy([-0.1, 0.5])


class TestInverseBinaryEntropy(unittest.TestCase):
    def test_reference_value(self):
        """Test h2^-1(0.5), the distortion-rate value at R = 0.5."""
        self.assertAlmostEqual(inverse_binary_entropy(0.5), 0.1100, places=4)

    def test_endpoints(self):
        """Test the inverse at 0 and 1."""
        self.assertAlmostEqual(inverse_binary_entropy(0.0), 0.0, places=12)
        self.assertAlmostEqual(inverse_binary_entropy(1.0), 0.5, places=12)

    def test_round_trip(self):
        """Test h2(h2^-1(h)) = h on random entropies."""
        rng = np.random.default_rng(7)
        h = rng.uniform(0.0, 1.0, size=200)
        recovered = binary_entropy(inverse_binary_entropy(h))
        np.testing.assert_allclose(recovered, h, atol=1e-10)

    def test_invalid_inputs(self):
        """Test rejection of out-of-range entropies and tolerances."""
        with self.assertRaises(ValueError):
            inverse_binary_entropy(1.2)
        with self.assertRaises(ValueError):
            inverse_binary_entropy(0.5, tol=0.0)


class TestBitReversal(unittest.TestCase):
    def test_small_permutations(self):
        """Test the permutations for two and three address bits."""
        np.testing.assert_array_equal(bit_reversal_permutation(2), [0, 2, 1, 3])
        np.testing.assert_array_equal(
            bit_reversal_permutation(3), [0, 4, 2, 6, 1, 5, 3, 7]
        )
        np.testing.assert_array_equal(bit_reversal_permutation(0), [0])

    def test_involution(self):
        """Test that applying the permutation twice is the identity."""
        perm = bit_reversal_permutation(6)
        np.testing.assert_array_equal(perm[perm], np.arange(64))

    def test_negative_bits(self):
        """Test that a negative bit count is rejected."""
        with self.assertRaises(ValueError):
            bit_reversal_permutation(-1)


class TestRangeMaxQuery(unittest.TestCase):
    def test_against_brute_force(self):
        """Test random range queries against numpy maxima."""
        rng = np.random.default_rng(3)
        data = rng.normal(size=257)
        query = RangeMaxQuery(data)
        starts = rng.integers(0, 257, size=500)
        stops = starts + rng.integers(1, 100, size=500)
        stops = np.minimum(stops, 257)
        expected = np.array([data[a:b].max() for a, b in zip(starts, stops)])
        np.testing.assert_array_equal(query(starts, stops), expected)

    def test_scalar_and_empty_queries(self):
        """Test scalar results and -inf for empty ranges."""
        query = RangeMaxQuery([3.0, 1.0, 4.0, 1.0, 5.0])
        self.assertEqual(query(0, 5), 5.0)
        self.assertEqual(query(1, 2), 1.0)
        self.assertEqual(query(3, 3), -np.inf)
        self.assertEqual(query(4, 2), -np.inf)

    def test_two_dimensional_data(self):
        """Test that only one-dimensional data is accepted."""
        with self.assertRaises(ValueError):
            RangeMaxQuery(np.zeros((2, 2)))


class TestTrialGenerator(unittest.TestCase):
    def test_reproducible_streams(self):
        """Test that a (seed, trial) pair always yields the same draws."""
        first = trial_generator(5, 12).random(8)
        second = trial_generator(5, 12).random(8)
        np.testing.assert_array_equal(first, second)

    def test_distinct_streams(self):
        """Test that different trials and seeds give different draws."""
        base = trial_generator(5, 12).random(8)
        self.assertFalse(np.array_equal(base, trial_generator(5, 13).random(8)))
        self.assertFalse(np.array_equal(base, trial_generator(6, 12).random(8)))

    def test_negative_indices(self):
        """Test that negative seeds and trial indices are rejected."""
        with self.assertRaises(ValueError):
            trial_generator(-1, 0)
        with self.assertRaises(ValueError):
            trial_generator(0, -1)


if __name__ == "__main__":
    unittest.main()
