"""Unit tests for the energy-detector statistics."""
import unittest
import numpy as np

EIGHT_BANDS_GAINS = [0.50, 0.30, 0.45, 0.65, 0.25, 0.60, 0.40, 0.70]


class TestParameters(unittest.TestCase):

    def test_noise_model_validation(self):
        from wbsense.api.detection import NoiseModel
        from wbsense.api.utils import DomainError

        noise = NoiseModel(1.0, 100)
        self.assertEqual(noise.sigma_v2, 1.0)
        self.assertEqual(noise.samples_m, 100)
        for args in [(0.0, 100), (-1.0, 100), (1.0, 0), (1.0, 2.5), (np.nan, 10)]:
            with self.assertRaises(DomainError):
                NoiseModel(*args)

    def test_subchannel_convexity_conditions_enforced(self):
        from wbsense.api.detection import SubchannelParams
        from wbsense.api.utils import DomainError

        SubchannelParams(0.5, 612, 1.91, alpha=0.5, beta=0.5)
        for kwargs in [dict(alpha=0.6), dict(beta=0.0), dict(alpha=-0.1), dict(beta=0.51)]:
            with self.assertRaises(DomainError):
                SubchannelParams(0.5, 612, 1.91, **kwargs)

    def test_subchannel_rejects_negative_values(self):
        from wbsense.api.detection import SubchannelParams
        from wbsense.api.utils import DomainError

        for args in [(-0.1, 1, 1), (0.1, -1, 1), (0.1, 1, -1)]:
            with self.assertRaises(DomainError):
                SubchannelParams(*args)


class TestMoments(unittest.TestCase):

    def setUp(self):
        from wbsense.api.detection import NoiseModel
        self._noise = NoiseModel(1.0, 100)

    def test_eight_bands_moments(self):
        from wbsense.api.detection import SubchannelParams, statistic_moments

        moments = statistic_moments(SubchannelParams(0.5), self._noise)
        np.testing.assert_allclose(moments.as_tuple(), (100, 200, 150, 400))

        moments = statistic_moments(SubchannelParams(0.7), self._noise)
        np.testing.assert_allclose(moments.as_tuple(), (100, 200, 170, 480))

    def test_zero_gain_moments_coincide(self):
        from wbsense.api.detection import SubchannelParams, statistic_moments

        moments = statistic_moments(SubchannelParams(0.0), self._noise)
        self.assertEqual(moments.mean_h0, moments.mean_h1)
        self.assertEqual(moments.var_h0, moments.var_h1)


class TestProbabilities(unittest.TestCase):

    def setUp(self):
        from wbsense.api.detection import NoiseModel, SubchannelParams
        self._noise = NoiseModel(1.0, 100)
        self._sub = SubchannelParams(0.5, 612, 1.91, alpha=0.1, beta=0.5)

    def test_false_alarm_values(self):
        from wbsense.api.detection import prob_false_alarm

        self.assertAlmostEqual(prob_false_alarm(100, self._noise), 0.5, places=15)
        self.assertAlmostEqual(prob_false_alarm(120, self._noise), 0.0786496, places=6)
        self.assertLess(prob_false_alarm(1E4, self._noise), 1E-300)

    def test_detection_values(self):
        from wbsense.api.detection import prob_detection, prob_miss

        self.assertAlmostEqual(prob_detection(150, self._sub, self._noise), 0.5, places=15)
        self.assertAlmostEqual(prob_detection(124.369, self._sub, self._noise), 0.9, places=4)
        self.assertAlmostEqual(prob_miss(124.369, self._sub, self._noise)
                               + prob_detection(124.369, self._sub, self._noise), 1, places=14)

    def test_zero_gain_detection_equals_false_alarm(self):
        from wbsense.api.detection import SubchannelParams, prob_detection, prob_false_alarm

        gamma = np.linspace(50, 150, 101)
        np.testing.assert_allclose(prob_detection(gamma, SubchannelParams(0.0), self._noise),
                                   prob_false_alarm(gamma, self._noise), rtol=1E-14)

    def test_monotone_tradeoff(self):
        from wbsense.api.detection import SubchannelParams, prob_false_alarm, prob_miss

        gamma = np.linspace(60, 200, 2001)
        for gain in EIGHT_BANDS_GAINS:
            sub = SubchannelParams(gain)
            self.assertTrue(np.all(np.diff(prob_false_alarm(gamma, self._noise)) < 0))
            self.assertTrue(np.all(np.diff(prob_miss(gamma, sub, self._noise)) > 0))

    def test_non_finite_threshold_rejected(self):
        from wbsense.api.detection import prob_false_alarm
        from wbsense.api.utils import DomainError

        with self.assertRaises(DomainError):
            prob_false_alarm(np.inf, self._noise)

    def test_roc_curve_passes_through_bounds(self):
        from wbsense.api.detection import roc_curve, threshold_bounds

        gamma, pd = roc_curve(self._sub, self._noise, np.array([0.5, 0.1, 0.01]))
        self.assertAlmostEqual(gamma[0], threshold_bounds(self._sub, self._noise).gamma_min)
        self.assertTrue(np.all(np.diff(pd) < 0))


class TestThresholdBounds(unittest.TestCase):

    def setUp(self):
        from wbsense.api.detection import NoiseModel
        self._noise = NoiseModel(1.0, 100)

    def test_eight_bands_bounds(self):
        from wbsense.api.detection import SubchannelParams, threshold_bounds

        bounds = threshold_bounds(SubchannelParams(0.5, alpha=0.1, beta=0.5), self._noise)
        self.assertAlmostEqual(bounds.gamma_min, 100, places=12)
        self.assertAlmostEqual(bounds.gamma_max, 124.36897, places=4)

        bounds = threshold_bounds(SubchannelParams(0.5, alpha=0.5, beta=0.5), self._noise)
        self.assertAlmostEqual(bounds.gamma_max, 150, places=12)

    def test_boundary_consistency_grid(self):
        from wbsense.api.detection import SubchannelParams, threshold_bounds
        from wbsense.api.detection import prob_false_alarm, prob_miss

        grid = np.linspace(0.05, 0.5, 10)
        for alpha in grid:
            for beta in grid:
                sub = SubchannelParams(2.0, alpha=alpha, beta=beta)
                bounds = threshold_bounds(sub, self._noise)
                self.assertAlmostEqual(prob_false_alarm(bounds.gamma_min, self._noise), beta,
                                       delta=1E-9)
                self.assertAlmostEqual(prob_miss(bounds.gamma_max, sub, self._noise), alpha,
                                       delta=1E-9)

    def test_empty_interval_raises_with_index(self):
        from wbsense.api.detection import SubchannelParams, threshold_bounds
        from wbsense.api.utils import InfeasibleSubchannelError

        with self.assertRaises(InfeasibleSubchannelError) as context:
            threshold_bounds(SubchannelParams(0.0, alpha=0.1, beta=0.5), self._noise, index=3)
        self.assertEqual(context.exception.index, 3)
        self.assertIn("subchannel 3", str(context.exception))


if __name__ == '__main__':
    unittest.main()
