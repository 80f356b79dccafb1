"""Parameter objects describing the noise and the individual subchannels."""
import numbers as _numbers

import numpy as _np


def _check_real(name, value, minimum=None, strict=False):
    """Convert value to float and check finiteness and an optional lower bound."""
    from wbsense.api.utils.exceptions import DomainError

    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError("'{0}' must be a real number.".format(name))
    if not _np.isfinite(value):
        raise DomainError("'{0}' must be finite.".format(name))
    if minimum is not None:
        if strict and not value > minimum:
            raise DomainError("'{0}' must be larger than {1}.".format(name, minimum))
        if not strict and value < minimum:
            raise DomainError("'{0}' must not be smaller than {1}.".format(name, minimum))
    return value


class NoiseModel(object):
    """Receiver noise and detection interval.

    Parameters
    ----------
    sigma_v2 : float
        Noise variance in linear power units. Must be positive.
    samples_m : int
        Number of samples M summed by the energy detector.

    """

    def __init__(self, sigma_v2, samples_m):
        from wbsense.api.utils.exceptions import DomainError

        self._sigma_v2 = _check_real('sigma_v2', sigma_v2, 0, strict=True)
        if isinstance(samples_m, bool) or not isinstance(samples_m, _numbers.Integral) \
                or samples_m < 1:
            raise DomainError("'samples_m' must be a positive integer.")
        self._samples_m = int(samples_m)

    @property
    def sigma_v2(self):
        """Return the noise variance."""
        return self._sigma_v2

    @property
    def sigma_v(self):
        """Return the noise standard deviation."""
        return _np.sqrt(self._sigma_v2)

    @property
    def samples_m(self):
        """Return the number of samples per detection interval."""
        return self._samples_m

    def __eq__(self, other):
        return isinstance(other, NoiseModel) and \
            (self.sigma_v2, self.samples_m) == (other.sigma_v2, other.samples_m)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "NoiseModel(sigma_v2={0!r}, samples_m={1!r})".format(self.sigma_v2, self.samples_m)


class SubchannelParams(object):
    """Physical and economic parameters of one subchannel.

    Parameters
    ----------
    gain_power : float
        Channel power gain :math:`|H_k|^2` (linear, >= 0).
    rate : float
        Throughput :math:`r_k` obtained by the cognitive radio if the
        band is declared vacant (kbps, >= 0).
    cost : float
        Penalty :math:`c_k` for interfering with the primary user (>= 0).
    alpha : float
        Cap on the probability of miss, in (0, 1/2].
    beta : float
        Cap on the probability of false alarm, in (0, 1/2].

    Notes
    -----
    The caps are restricted to (0, 1/2] because only there the false-alarm
    and miss probabilities are convex in the threshold. Values outside
    that range are rejected, not clipped.

    """

    def __init__(self, gain_power, rate=0.0, cost=0.0, alpha=0.5, beta=0.5):
        from wbsense.api.utils.exceptions import DomainError

        self._gain_power = _check_real('gain_power', gain_power, 0)
        self._rate = _check_real('rate', rate, 0)
        self._cost = _check_real('cost', cost, 0)
        self._alpha = _check_real('alpha', alpha)
        self._beta = _check_real('beta', beta)
        for name, value in (('alpha', self._alpha), ('beta', self._beta)):
            if not 0 < value <= 0.5:
                raise DomainError(
                    "'{0}' = {1} violates the convexity conditions 0 < {0} <= 1/2.".format(
                        name, value))

    @property
    def gain_power(self):
        """Return the channel power gain |H_k|^2."""
        return self._gain_power

    @property
    def rate(self):
        """Return the opportunistic rate r_k."""
        return self._rate

    @property
    def cost(self):
        """Return the interference cost c_k."""
        return self._cost

    @property
    def alpha(self):
        """Return the miss probability cap."""
        return self._alpha

    @property
    def beta(self):
        """Return the false-alarm probability cap."""
        return self._beta

    def as_tuple(self):
        return (self.gain_power, self.rate, self.cost, self.alpha, self.beta)

    def __eq__(self, other):
        return isinstance(other, SubchannelParams) and self.as_tuple() == other.as_tuple()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return ("SubchannelParams(gain_power={0!r}, rate={1!r}, cost={2!r}, "
                "alpha={3!r}, beta={4!r})").format(*self.as_tuple())


class StatisticMoments(object):
    """Mean and variance of the energy statistic under both hypotheses."""

    def __init__(self, mean_h0, var_h0, mean_h1, var_h1):
        self.mean_h0 = mean_h0
        self.var_h0 = var_h0
        self.mean_h1 = mean_h1
        self.var_h1 = var_h1

    def as_tuple(self):
        return (self.mean_h0, self.var_h0, self.mean_h1, self.var_h1)

    def __repr__(self):
        return "StatisticMoments(mean_h0={0!r}, var_h0={1!r}, mean_h1={2!r}, var_h1={3!r})".format(
            *self.as_tuple())


class ThresholdBounds(object):
    """Threshold interval in which the per-band caps are met."""

    def __init__(self, gamma_min, gamma_max):
        self.gamma_min = gamma_min
        self.gamma_max = gamma_max

    @property
    def width(self):
        return self.gamma_max - self.gamma_min

    def __repr__(self):
        return "ThresholdBounds(gamma_min={0!r}, gamma_max={1!r})".format(
            self.gamma_min, self.gamma_max)
