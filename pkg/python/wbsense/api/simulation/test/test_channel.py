import unittest
import numpy as np

EIGHT_BANDS_GAINS = [0.50, 0.30, 0.45, 0.65, 0.25, 0.60, 0.40, 0.70]


class TestMakeChannel(unittest.TestCase):

    def test_explicit_gains_are_reproduced(self):
        from wbsense.api.simulation import make_channel

        channel = make_channel(gain_power=EIGHT_BANDS_GAINS)
        np.testing.assert_allclose(channel.gain_power, EIGHT_BANDS_GAINS, rtol=1E-15)
        self.assertEqual(channel.num_subchannels, 8)

    def test_explicit_taps_transform_to_response(self):
        from wbsense.api.simulation import ChannelRealization, make_channel

        channel = make_channel(gain_power=EIGHT_BANDS_GAINS)
        again = ChannelRealization.from_taps(channel.taps, 8)
        np.testing.assert_allclose(again.freq_response, channel.freq_response, atol=1E-14)

    def test_all_zero_profile(self):
        from wbsense.api.simulation import make_channel

        channel = make_channel(gain_power=np.zeros(4))
        self.assertTrue(np.all(channel.freq_response == 0))
        channel = make_channel(num_subchannels=8, tap_powers=np.zeros(3), seed=1)
        self.assertTrue(np.all(channel.freq_response == 0))

    def test_negative_gain_rejected(self):
        from wbsense.api.simulation import make_channel
        from wbsense.api.utils import DomainError

        with self.assertRaises(DomainError):
            make_channel(gain_power=[0.5, -0.1])

    def test_too_many_taps_rejected(self):
        from wbsense.api.simulation import make_channel
        from wbsense.api.utils import DomainError

        with self.assertRaises(DomainError):
            make_channel(num_subchannels=4, tap_powers=np.ones(5))
        with self.assertRaises(DomainError):
            make_channel(gain_power=[1.0], tap_powers=[1.0])

    def test_response_is_normalized_dft(self):
        from wbsense.api.simulation import make_channel

        channel = make_channel(num_subchannels=16, tap_powers=[1.0, 0.5, 0.25], seed=4)
        n = np.arange(3)
        for k in [0, 5, 11]:
            expected = np.sum(channel.taps * np.exp(-2j * np.pi * n * k / 16)) / 4.0
            self.assertAlmostEqual(abs(channel.freq_response[k] - expected), 0, places=14)

    def test_parseval_over_many_seeds(self):
        from wbsense.api.simulation import make_channel

        totals = np.array([np.sum(make_channel(num_subchannels=8, tap_powers=np.ones(4),
                                               seed=seed).gain_power)
                           for seed in range(10000)])
        self.assertAlmostEqual(np.mean(totals) / 4.0, 1.0, delta=0.02)

    def test_random_channel_is_seeded(self):
        from wbsense.api.simulation import make_channel

        first = make_channel(num_subchannels=8, tap_powers=np.ones(4), seed=7)
        second = make_channel(num_subchannels=8, tap_powers=np.ones(4), seed=7)
        np.testing.assert_array_equal(first.taps, second.taps)


if __name__ == '__main__':
    unittest.main()
