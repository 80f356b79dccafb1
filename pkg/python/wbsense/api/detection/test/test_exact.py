"""Tests of the exact chi-square probabilities."""
import unittest
import numpy as np


class TestExactProbabilities(unittest.TestCase):

    def setUp(self):
        from wbsense.api.detection import NoiseModel, SubchannelParams
        self._noise = NoiseModel(1.0, 100)
        self._sub = SubchannelParams(0.5, alpha=0.1, beta=0.5)

    def test_vacant_band_at_mean_is_below_one_half(self):
        from wbsense.api.detection import exact_false_alarm

        self.assertAlmostEqual(exact_false_alarm(100.0, self._noise), 0.4812, delta=5E-4)

    def test_close_to_gaussian_away_from_mean(self):
        from wbsense.api.detection import exact_false_alarm, exact_detection
        from wbsense.api.detection import prob_false_alarm, prob_detection

        gamma = np.linspace(110, 125, 16)
        self.assertLess(np.max(np.abs(exact_false_alarm(gamma, self._noise)
                                      - prob_false_alarm(gamma, self._noise))), 0.015)
        self.assertLess(np.max(np.abs(exact_detection(gamma, self._sub, self._noise)
                                      - prob_detection(gamma, self._sub, self._noise))), 0.015)

    def test_zero_gain_detection_equals_false_alarm(self):
        from wbsense.api.detection import SubchannelParams, exact_detection, exact_false_alarm

        gamma = np.linspace(80, 120, 5)
        for model in ['real', 'complex']:
            np.testing.assert_allclose(
                exact_detection(gamma, SubchannelParams(0.0), self._noise, model),
                exact_false_alarm(gamma, self._noise, model))

    def test_complex_model_has_half_the_spread(self):
        from wbsense.api.detection import exact_false_alarm

        self.assertLess(exact_false_alarm(120.0, self._noise, 'complex'),
                        exact_false_alarm(120.0, self._noise, 'real'))

    def test_unknown_model_rejected(self):
        from wbsense.api.detection import exact_false_alarm

        with self.assertRaises(ValueError):
            exact_false_alarm(100.0, self._noise, 'polar')


if __name__ == '__main__':
    unittest.main()
