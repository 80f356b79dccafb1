"""Agreement of empirical rates with the analytic detection probabilities."""
import unittest
import numpy as np

EIGHT_BANDS_GAINS = [0.50, 0.30, 0.45, 0.65, 0.25, 0.60, 0.40, 0.70]


class TestEmpiricalRates(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        from wbsense.api.detection import NoiseModel, SubchannelParams, threshold_bounds
        from wbsense.api.simulation import OccupancyVector, make_channel, simulate_energies

        cls.noise = NoiseModel(1.0, 100)
        cls.subchannels = [SubchannelParams(gain, alpha=0.1, beta=0.5) for gain in EIGHT_BANDS_GAINS]
        cls.grids = np.array([
            np.linspace(bounds.gamma_min, bounds.gamma_max, 20)
            for bounds in [threshold_bounds(sub, cls.noise) for sub in cls.subchannels]]).T
        channel = make_channel(gain_power=EIGHT_BANDS_GAINS)
        cls.vacant = simulate_energies(channel, OccupancyVector.vacant(8), cls.noise,
                                       100000, seed=101)
        cls.occupied = simulate_energies(channel, OccupancyVector.occupied(8), cls.noise,
                                         100000, seed=202)

    def test_vacant_band_at_mean(self):
        from wbsense.api.detection import exact_false_alarm
        from wbsense.api.simulation import empirical_rates

        estimate = empirical_rates(self.vacant, np.full(8, 100.0))
        self.assertEqual(estimate.labels, ['pf'] * 8)
        # The Gaussian value is 0.5; skewness of the exact law lowers it.
        np.testing.assert_allclose(estimate.rates, 0.5, atol=0.025)
        np.testing.assert_allclose(estimate.rates, exact_false_alarm(100.0, self.noise),
                                   atol=0.007)

    def test_occupied_band_detection(self):
        from wbsense.api.simulation import empirical_rates

        estimate = empirical_rates(self.occupied, np.full(8, 124.369))
        self.assertEqual(estimate.labels, ['pd'] * 8)
        self.assertAlmostEqual(estimate.rates[0], 0.90, delta=0.01)
        self.assertLess(estimate.standard_errors[0], 0.001)

    def test_negative_threshold_always_exceeded(self):
        from wbsense.api.simulation import empirical_rates

        estimate = empirical_rates(self.vacant, -np.ones(8))
        np.testing.assert_array_equal(estimate.rates, np.ones(8))
        np.testing.assert_array_equal(estimate.standard_errors, np.zeros(8))

    def test_detection_rates_follow_gaussian_model(self):
        from wbsense.api.detection import prob_detection
        from wbsense.api.simulation import empirical_rates

        for gamma in self.grids:
            estimate = empirical_rates(self.occupied, gamma)
            analytic = [prob_detection(g, sub, self.noise) for g, sub in zip(gamma, self.subchannels)]
            self.assertLess(np.max(np.abs(estimate.rates - analytic)), 0.015)

    def test_false_alarm_rates_follow_gaussian_model(self):
        from wbsense.api.detection import prob_false_alarm
        from wbsense.api.simulation import empirical_rates

        away_from_mean = 100 + 0.7 * np.sqrt(200)
        for gamma in self.grids:
            delta = np.abs(empirical_rates(self.vacant, gamma).rates
                           - prob_false_alarm(gamma, self.noise))
            self.assertLess(np.max(delta), 0.025)
            self.assertLess(np.max(delta[gamma >= away_from_mean], initial=0), 0.015)

    def test_rates_follow_exact_law(self):
        from wbsense.api.detection import exact_detection, exact_false_alarm
        from wbsense.api.simulation import empirical_rates

        for gamma in self.grids:
            for batch in [self.vacant, self.occupied]:
                estimate = empirical_rates(batch, gamma)
                if batch is self.vacant:
                    exact = exact_false_alarm(gamma, self.noise)
                else:
                    exact = np.array([exact_detection(g, sub, self.noise)
                                      for g, sub in zip(gamma, self.subchannels)])
                bound = 5 * np.sqrt(exact * (1 - exact) / batch.trials) + 1E-4
                self.assertTrue(np.all(np.abs(estimate.rates - exact) < bound))

    def test_intervals(self):
        from wbsense.api.simulation import empirical_rates

        estimate = empirical_rates(self.vacant, np.full(8, 110.0))
        lower, upper = estimate.interval()
        np.testing.assert_allclose(upper - lower, 6 * estimate.standard_errors)

    def test_length_mismatch_rejected(self):
        from wbsense.api.simulation import empirical_rates
        from wbsense.api.utils import DomainError

        with self.assertRaises(DomainError):
            empirical_rates(self.vacant, np.ones(7))


if __name__ == '__main__':
    unittest.main()
