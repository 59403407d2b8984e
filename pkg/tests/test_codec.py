import json
import logging
import os
import tempfile
import unittest
from unittest.mock import patch

import numpy as np

from polarscaling import (
    BmsChannel,
    ChannelSimulation,
    DecoderState,
    PolarCode,
    SpectrumMode,
    SuccessiveCancellation,
    construct_code,
    distortion,
    encode,
    error_bound,
    evolve_spectrum,
    load_code,
    polar_transform,
    print_simulation_report,
    save_code,
    sc_decode,
    sc_source_encode,
    select_channel,
    simulate_channel,
    simulate_source,
)
from polarscaling.codec import code_document

logging.basicConfig(level=logging.WARNING)

ERASED = 1


class TestEncoder(unittest.TestCase):
    def test_small_examples(self):
        """Test codewords of unit vectors at N = 4."""
        np.testing.assert_array_equal(encode([0, 1, 0, 0]), [1, 0, 1, 0])
        np.testing.assert_array_equal(encode([1, 0, 0, 0]), [1, 0, 0, 0])
        np.testing.assert_array_equal(encode([0, 0, 0, 1]), [1, 1, 1, 1])
        np.testing.assert_array_equal(encode([1, 1]), [0, 1])

    def test_linearity(self):
        """Test encode(u ^ v) = encode(u) ^ encode(v)."""
        rng = np.random.default_rng(11)
        u = rng.integers(0, 2, size=(20, 64))
        v = rng.integers(0, 2, size=(20, 64))
        np.testing.assert_array_equal(encode(u ^ v), encode(u) ^ encode(v))

    def test_batch_rows(self):
        """Test that a batch encodes row by row."""
        rng = np.random.default_rng(12)
        u = rng.integers(0, 2, size=(5, 32))
        batch = encode(u)
        for row in range(5):
            np.testing.assert_array_equal(batch[row], encode(u[row]))

    def test_transform_is_involution(self):
        """Test that G_2^{⊗n} is its own inverse over GF(2)."""
        rng = np.random.default_rng(13)
        u = rng.integers(0, 2, size=128)
        np.testing.assert_array_equal(polar_transform(polar_transform(u)), u)

    def test_invalid_inputs(self):
        """Test rejection of non-power-of-two lengths and non-bits."""
        with self.assertRaises(ValueError):
            encode([0, 1, 0])
        with self.assertRaises(ValueError):
            encode([0, 2, 0, 1])


class TestConstruction(unittest.TestCase):
    def test_erasure_information_sets(self):
        """Test the information sets of erasure(0.5) at N = 4."""
        channel = BmsChannel.erasure(0.5)
        code = construct_code(channel, 2, 0.25, SpectrumMode.EXACT_ERASURE)
        np.testing.assert_array_equal(code.info_set, [3])
        self.assertEqual(code.rate, 0.25)
        code = construct_code(channel, 2, 0.5, "exact-erasure")
        np.testing.assert_array_equal(code.info_set, [2, 3])
        np.testing.assert_array_equal(code.frozen_set, [0, 1])

    def test_ties_freeze_lower_indices(self):
        """Test that equal estimates freeze the lower indices first."""
        code = construct_code(select_channel("noiseless"), 2, 0.5)
        np.testing.assert_array_equal(code.frozen_set, [0, 1])

    def test_dimension_and_bound(self):
        """Test |F^c| = round(R·N) and the union bound over F^c."""
        code = construct_code(BmsChannel.erasure(0.3), 8, 0.3, "exact-erasure")
        self.assertEqual(code.dimension, round(0.3 * 256))
        self.assertAlmostEqual(code.rate, code.dimension / 256)
        expected = evolve_spectrum(0.3, 8).values[code.info_set].sum()
        self.assertAlmostEqual(error_bound(code), expected, places=12)
        worst = np.max(code.z_estimates.values[code.info_set])
        best_frozen = np.min(code.z_estimates.values[code.frozen_set])
        self.assertLessEqual(worst, best_frozen)

    def test_construction_methods(self):
        """Test the explicit and bound-tracked constructions of a crossover channel."""
        channel = BmsChannel.crossover(0.11)
        explicit = construct_code(channel, 4, 0.5, "explicit")
        self.assertIs(explicit.z_estimates.mode, SpectrumMode.EXPLICIT)
        upper = construct_code(channel, 4, 0.5)
        self.assertGreaterEqual(error_bound(upper), error_bound(explicit) - 1e-12)
        with self.assertRaises(ValueError):
            construct_code(channel, 4, 0.5, "exact-erasure")
        with self.assertRaises(ValueError):
            construct_code(channel, 4, 1.5)

    def test_upper_bound_construction_is_conservative(self):
        """Test upper-bound estimates >= explicit values for every level up to 8."""
        erasure_like = BmsChannel.explicit([[0.7, 0.3, 0.0], [0.0, 0.3, 0.7]])
        cases = [(erasure_like, n) for n in range(1, 9)]
        cases += [(BmsChannel.crossover(0.11), n) for n in range(1, 6)]
        for channel, n in cases:
            explicit = construct_code(channel, n, 0.5, "explicit")
            upper = construct_code(channel, n, 0.5, "upper-bound")
            with self.subTest(channel=channel.name, n=n):
                self.assertTrue(
                    np.all(upper.z_estimates.values >= explicit.z_estimates.values - 1e-12)
                )
                self.assertGreaterEqual(error_bound(upper), error_bound(explicit) - 1e-10)

    def test_code_validation(self):
        """Test PolarCode consistency checks."""
        spectrum = evolve_spectrum(0.5, 2)
        with self.assertRaises(ValueError):
            PolarCode(2, np.array([0, 1]), np.zeros(2), spectrum, 0.75)
        with self.assertRaises(ValueError):
            PolarCode(2, np.array([0, 0]), np.zeros(2), spectrum, 0.5)
        with self.assertRaises(ValueError):
            PolarCode(3, np.array([0, 1]), np.zeros(2), spectrum, 0.75)
        with self.assertRaises(ValueError):
            PolarCode(2, np.array([0, 1]), np.zeros(3), spectrum, 0.5)

    def test_assemble(self):
        """Test that information bits land on F^c and frozen bits on F."""
        spectrum = evolve_spectrum(0.5, 2)
        code = PolarCode(2, np.array([1, 0]), np.array([1, 0]), spectrum, 0.5)
        np.testing.assert_array_equal(code.frozen_set, [0, 1])
        np.testing.assert_array_equal(code.frozen_bits, [0, 1])
        np.testing.assert_array_equal(code.assemble([1, 1]), [0, 1, 1, 1])
        with self.assertRaises(ValueError):
            code.assemble([1, 1, 1])


class TestDecoder(unittest.TestCase):
    def test_noiseless_round_trip(self):
        """Test that SC decoding recovers u over a noiseless channel."""
        channel = select_channel("noiseless")
        rng = np.random.default_rng(21)
        for n in (1, 4, 8, 12):
            code = construct_code(channel, n, 0.5)
            u = code.assemble(rng.integers(0, 2, size=(3, code.dimension)))
            y = channel.transmit(encode(u), rng.random(u.shape))
            np.testing.assert_array_equal(sc_decode(y, code, channel), u)

    def test_erasure_ties_decide_one(self):
        """Test that an undetermined bit is decided as 1."""
        channel = BmsChannel.erasure(0.5)
        code = construct_code(channel, 1, 1.0, "exact-erasure")
        decoded = sc_decode([ERASED, 2], code, channel)
        np.testing.assert_array_equal(decoded, [1, 1])
        decoded = sc_decode([ERASED, 0], code, channel)
        np.testing.assert_array_equal(decoded, [1, 0])

    def test_frozen_bits_are_copied(self):
        """Test that frozen positions take the code's frozen values."""
        channel = BmsChannel.erasure(1.0)
        spectrum = evolve_spectrum(1.0, 2)
        code = PolarCode(2, np.arange(4), np.array([1, 0, 1, 1]), spectrum, 0.0)
        decoded = sc_decode(np.full(4, ERASED), code, channel)
        np.testing.assert_array_equal(decoded, [1, 0, 1, 1])

    def test_erasure_algebra_matches_llr(self):
        """Test that the erasure algebra and the LLR decoder fail on the same blocks."""
        channel = BmsChannel.erasure(0.3)
        code = construct_code(channel, 6, 0.5, "exact-erasure")
        rng = np.random.default_rng(5)
        u = code.assemble(rng.integers(0, 2, size=(200, code.dimension)))
        y = channel.transmit(encode(u), rng.random(u.shape))
        fast = sc_decode(y, code, channel)
        explicit = BmsChannel.explicit(channel.transition)
        slow = sc_decode(y, code, explicit)
        np.testing.assert_array_equal(
            np.all(fast == u, axis=1), np.all(slow == u, axis=1)
        )

    def test_decoder_state(self):
        """Test the single-use run and the recorded likelihood ratios."""
        decoder = SuccessiveCancellation(np.array([True, False]), np.zeros(2))
        decisions = decoder.run(np.array([[2.0, 3.0]]))
        self.assertIsInstance(decoder.state, DecoderState)
        self.assertEqual(decisions.shape, (1, 2))
        self.assertEqual(decoder.state.log_ratios[0, 1], 5.0)
        self.assertAlmostEqual(decoder.state.likelihood_ratios[0, 1], np.exp(5.0))
        with self.assertRaises(RuntimeError):
            decoder.run(np.array([[2.0, 3.0]]))

    def test_received_validation(self):
        """Test rejection of wrong lengths and unknown symbols."""
        channel = BmsChannel.erasure(0.3)
        code = construct_code(channel, 2, 0.5, "exact-erasure")
        with self.assertRaises(ValueError):
            sc_decode([0, 0, 0], code, channel)
        with self.assertRaises(ValueError):
            sc_decode([0, 0, 0, 3], code, channel)


class TestChannelSimulation(unittest.TestCase):
    def test_union_bound_holds(self):
        """Test the simulated block error rate against the union bound."""
        for epsilon in (0.2, 0.3, 0.4):
            channel = BmsChannel.erasure(epsilon)
            for n in (8, 10):
                for rate in (0.25, 0.5 * (1.0 - epsilon)):
                    code = construct_code(channel, n, rate, "exact-erasure")
                    result = simulate_channel(code, channel, 5_000, seed=n)
                    with self.subTest(epsilon=epsilon, n=n, rate=rate):
                        self.assertIsInstance(result, ChannelSimulation)
                        self.assertLessEqual(
                            result.pe, result.error_bound + 3 * result.stderr
                        )
                        self.assertLessEqual(result.ci_low, result.pe)
                        self.assertGreaterEqual(result.ci_high, result.pe)

    def test_independent_of_batch_size(self):
        """Test that per-trial streams make results batch-size independent."""
        channel = BmsChannel.crossover(0.11)
        code = construct_code(channel, 6, 0.5)
        small = simulate_channel(code, channel, 300, seed=7, batch_size=64)
        large = simulate_channel(code, channel, 300, seed=7, batch_size=1000)
        self.assertEqual(small.errors, large.errors)
        self.assertEqual(small.to_dict(), large.to_dict())

    def test_errors_at_high_rate(self):
        """Test that a rate far above capacity fails almost always."""
        channel = BmsChannel.erasure(0.7)
        code = construct_code(channel, 6, 0.9, "exact-erasure")
        result = simulate_channel(code, channel, 200, seed=3)
        self.assertGreater(result.pe, 0.9)

    def test_invalid_trials(self):
        """Test that at least one trial is required."""
        channel = BmsChannel.erasure(0.3)
        code = construct_code(channel, 2, 0.5, "exact-erasure")
        with self.assertRaises(ValueError):
            simulate_channel(code, channel, 0)

    def test_print_report(self):
        """Test the printed channel report."""
        channel = BmsChannel.erasure(0.3)
        code = construct_code(channel, 4, 0.5, "exact-erasure")
        result = simulate_channel(code, channel, 50)
        with patch("builtins.print") as mock_print:
            print_simulation_report(result)
        printed = " ".join(str(c.args[0]) for c in mock_print.call_args_list)
        self.assertIn("Union bound", printed)


class TestSourceCoding(unittest.TestCase):
    def test_distortion(self):
        """Test the Hamming distortion and its validation."""
        self.assertEqual(distortion([0, 1, 1, 0], [0, 0, 1, 1]), 0.5)
        with self.assertRaises(ValueError):
            distortion([0, 1], [0, 1, 1])
        with self.assertRaises(ValueError):
            distortion([0, 1], [1, 0], measure=lambda x, y: 2.0 * (x != y), d_max=1.0)

    def test_source_encoder_output(self):
        """Test determinism, frozen zeros and x = u·G_2^{⊗n}."""
        channel = BmsChannel.crossover(0.11)
        code = construct_code(channel, 6, 0.5, "lower-bound")
        y = np.random.default_rng(8).integers(0, 2, size=64)
        u, x = sc_source_encode(y, code, channel, seed=5)
        again_u, again_x = sc_source_encode(y, code, channel, seed=5)
        np.testing.assert_array_equal(u, again_u)
        np.testing.assert_array_equal(x, again_x)
        np.testing.assert_array_equal(u[code.frozen_set], 0)
        np.testing.assert_array_equal(x, polar_transform(u))
        with self.assertRaises(ValueError):
            sc_source_encode(y[:10], code, channel)

    def test_distortion_near_rate_distortion(self):
        """Test D_N against D(R) and the analytic check."""
        for n in (4, 6):
            result = simulate_source(0.5, n, 10_000, seed=n)
            with self.subTest(n=n):
                self.assertGreaterEqual(result.d_n, 0.1100 - 4 * result.stderr)
                self.assertLessEqual(
                    result.redundancy, result.analytic_check + 3 * result.stderr
                )
                self.assertLess(result.d_n, 0.5)

    def test_unsupported_source(self):
        """Test that only the binary symmetric source is supported."""
        with self.assertRaises(ValueError):
            simulate_source(0.5, 6, 10, source="gaussian")
        with self.assertRaises(ValueError):
            simulate_source(0.5, 6, 10, measure="squared")

    def test_print_report(self):
        """Test the printed source report."""
        result = simulate_source(0.5, 6, 20)
        with patch("builtins.print") as mock_print:
            print_simulation_report(result)
        printed = " ".join(str(c.args[0]) for c in mock_print.call_args_list)
        self.assertIn("Redundancy", printed)
        self.assertEqual(result.to_dict()["trials"], 20)


class TestCodeFiles(unittest.TestCase):
    def test_save_and_load(self):
        """Test that a code survives save_code/load_code."""
        code = construct_code(BmsChannel.crossover(0.11), 5, 0.5, "lower-bound")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "code.json")
            spectrum_path = save_code(code, path)
            self.assertTrue(spectrum_path.is_file())
            loaded = load_code(path)
        np.testing.assert_array_equal(loaded.frozen_set, code.frozen_set)
        np.testing.assert_array_equal(loaded.frozen_bits, code.frozen_bits)
        np.testing.assert_array_equal(loaded.z_estimates.values, code.z_estimates.values)
        self.assertIs(loaded.z_estimates.mode, SpectrumMode.LOWER_BOUND)
        self.assertEqual(loaded.rate, code.rate)

    def test_inline_document(self):
        """Test a code file with inline estimates and one with missing keys."""
        code = construct_code(BmsChannel.erasure(0.5), 3, 0.5, "exact-erasure")
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "inline.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump(code_document(code), f)
            loaded = load_code(path)
            broken = os.path.join(tmp, "broken.json")
            with open(broken, "w", encoding="utf-8") as f:
                json.dump({"n": 3}, f)
            with self.assertRaises(ValueError):
                load_code(broken)
        np.testing.assert_array_equal(loaded.info_set, code.info_set)


if __name__ == "__main__":
    unittest.main()
