"""Tests of the analytic derivatives and of the convexity of Pf and Pm."""
import unittest
import numpy as np

EIGHT_BANDS_GAINS = [0.50, 0.30, 0.45, 0.65, 0.25, 0.60, 0.40, 0.70]


def _central_difference(fun, x, step):
    return (fun(x + step) - fun(x - step)) / (2 * step)


def _second_difference(fun, x, step):
    return (fun(x + step) - 2 * fun(x) + fun(x - step)) / step ** 2


class TestDerivatives(unittest.TestCase):

    def setUp(self):
        from wbsense.api.detection import NoiseModel, SubchannelParams
        self._noise = NoiseModel(1.0, 100)
        self._sub = SubchannelParams(0.5, alpha=0.1, beta=0.5)

    def test_pf_derivatives_at_mean(self):
        from wbsense.api.detection import pf_derivatives

        first, second = pf_derivatives(100.0, self._noise)
        self.assertAlmostEqual(first, -1 / np.sqrt(4 * np.pi * 100), places=12)
        self.assertEqual(second, 0)

    def test_pf_derivatives_match_finite_differences(self):
        from wbsense.api.detection import pf_derivatives, prob_false_alarm

        pf = lambda gamma: prob_false_alarm(gamma, self._noise)
        first_of = lambda gamma: pf_derivatives(gamma, self._noise)[0]
        first, second = pf_derivatives(120.0, self._noise)
        self.assertAlmostEqual(first, _central_difference(pf, 120.0, 1E-4), delta=1E-6)
        self.assertAlmostEqual(second, _central_difference(first_of, 120.0, 1E-4), delta=1E-6)

    def test_pm_derivatives_at_mean(self):
        from wbsense.api.detection import pm_derivatives

        first, second = pm_derivatives(150.0, self._sub, self._noise)
        self.assertGreater(first, 0)
        self.assertEqual(second, 0)

    def test_pm_derivatives_match_finite_differences(self):
        from wbsense.api.detection import pm_derivatives, prob_detection

        pm = lambda gamma: 1 - prob_detection(gamma, self._sub, self._noise)
        first_of = lambda gamma: pm_derivatives(gamma, self._sub, self._noise)[0]
        first, second = pm_derivatives(124.369, self._sub, self._noise)
        self.assertAlmostEqual(first, _central_difference(pm, 124.369, 1E-4), delta=1E-6)
        self.assertAlmostEqual(second, _central_difference(first_of, 124.369, 1E-4), delta=1E-6)

    def test_zero_gain_pm_derivatives_mirror_pf(self):
        from wbsense.api.detection import SubchannelParams, pf_derivatives, pm_derivatives

        gamma = np.linspace(80, 130, 51)
        pf_first, pf_second = pf_derivatives(gamma, self._noise)
        pm_first, pm_second = pm_derivatives(gamma, SubchannelParams(0.0), self._noise)
        np.testing.assert_allclose(pm_first, -pf_first, rtol=1E-13)
        np.testing.assert_allclose(pm_second, -pf_second, rtol=1E-13, atol=1E-300)

    def test_signs_of_derivatives(self):
        from wbsense.api.detection import pf_derivatives, pm_derivatives

        gamma = np.linspace(40, 240, 2001)
        pf_first, pf_second = pf_derivatives(gamma, self._noise)
        pm_first, pm_second = pm_derivatives(gamma, self._sub, self._noise)
        self.assertTrue(np.all(pf_first < 0))
        self.assertTrue(np.all(pm_first > 0))
        np.testing.assert_array_equal(np.sign(pf_second), np.sign(gamma - 100))

    def test_relative_agreement_across_bounds(self):
        from wbsense.api.detection import SubchannelParams, threshold_bounds
        from wbsense.api.detection import pf_derivatives, pm_derivatives
        from wbsense.api.detection import prob_false_alarm, prob_miss

        for gain in EIGHT_BANDS_GAINS:
            sub = SubchannelParams(gain, alpha=0.1, beta=0.5)
            bounds = threshold_bounds(sub, self._noise)
            for gamma in np.linspace(bounds.gamma_min, bounds.gamma_max, 11):
                fd_pf = _central_difference(lambda g: prob_false_alarm(g, self._noise), gamma, 1E-3)
                fd_pm = _central_difference(lambda g: prob_miss(g, sub, self._noise), gamma, 1E-3)
                self.assertLess(abs(pf_derivatives(gamma, self._noise)[0] - fd_pf), 1E-6 * abs(fd_pf))
                self.assertLess(abs(pm_derivatives(gamma, sub, self._noise)[0] - fd_pm),
                                1E-6 * abs(fd_pm))


class TestConvexity(unittest.TestCase):
    """Pf is convex where Pf <= 1/2 and Pm is convex where Pm <= 1/2."""

    def setUp(self):
        from wbsense.api.detection import NoiseModel
        self._noise = NoiseModel(1.0, 100)

    def test_false_alarm_convex_above_mean(self):
        from wbsense.api.detection import prob_false_alarm, pf_derivatives

        gamma = np.linspace(100, 100 + 8 * np.sqrt(200), 1000)
        pf = lambda g: prob_false_alarm(g, self._noise)
        self.assertTrue(np.all(_second_difference(pf, gamma, 1E-2) >= -1E-9))
        self.assertTrue(np.all(pf_derivatives(gamma, self._noise)[1] >= 0))

    def test_miss_convex_below_mean(self):
        from wbsense.api.detection import SubchannelParams, statistic_moments
        from wbsense.api.detection import prob_miss, pm_derivatives

        for gain in EIGHT_BANDS_GAINS:
            sub = SubchannelParams(gain)
            moments = statistic_moments(sub, self._noise)
            gamma = np.linspace(moments.mean_h1 - 8 * np.sqrt(moments.var_h1), moments.mean_h1, 1000)
            pm = lambda g: prob_miss(g, sub, self._noise)
            self.assertTrue(np.all(_second_difference(pm, gamma, 1E-2) >= -1E-9))
            self.assertTrue(np.all(pm_derivatives(gamma, sub, self._noise)[1] >= 0))


if __name__ == '__main__':
    unittest.main()
