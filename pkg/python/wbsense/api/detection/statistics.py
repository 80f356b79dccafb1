# pylint: disable-msg=invalid-name
"""Closed-form statistics of the energy detector.

For each subchannel the detector sums the energy of M samples,

.. math::

    Y_k = \\sum_{m=0}^{M-1} |R_k(m)|^2,

and declares the band occupied if :math:`Y_k > \\gamma_k`. For large M the
statistic is Gaussian with

* :math:`E[Y] = M\\sigma_v^2`, :math:`Var[Y] = 2M\\sigma_v^4` if the band is vacant,
* :math:`E[Y] = M(\\sigma_v^2 + |H|^2)`,
  :math:`Var[Y] = 2M(\\sigma_v^2 + 2|H|^2)\\sigma_v^2` if it is occupied.

The transmitted signal has unit power. All functions are vectorised in the
threshold. The functions ending in ``_probability`` / ``_derivatives_array``
take numpy arrays of gain powers and are used by the optimizers to evaluate
all subchannels at once.

"""
import numpy as _np

from wbsense.api.numerics.gaussian import q as _q
from wbsense.api.numerics.gaussian import q_inv as _q_inv
from wbsense.api.numerics.gaussian import normal_pdf as _normal_pdf
from wbsense.api.detection.parameters import StatisticMoments, ThresholdBounds


def _scalar_or_array(value, result):
    if _np.ndim(value) == 0 and _np.ndim(result) == 0:
        return float(result)
    return result


def _h0_parameters(noise):
    mean = noise.samples_m * noise.sigma_v2
    std = noise.sigma_v2 * _np.sqrt(2.0 * noise.samples_m)
    return mean, std


def _h1_parameters(gain_power, noise):
    gain_power = _np.asarray(gain_power, dtype='float64')
    mean = noise.samples_m * (noise.sigma_v2 + gain_power)
    std = _np.sqrt(2.0 * noise.samples_m * (noise.sigma_v2 + 2 * gain_power) * noise.sigma_v2)
    return mean, std


def _finite(gamma):
    from wbsense.api.utils.exceptions import DomainError

    gamma_arr = _np.asarray(gamma, dtype='float64')
    if not _np.all(_np.isfinite(gamma_arr)):
        raise DomainError("Thresholds must be finite.")
    return gamma_arr


# Array kernels

def false_alarm_probability(gamma, noise):
    """Return Pf for an array of thresholds."""
    mean, std = _h0_parameters(noise)
    return _q((_finite(gamma) - mean) / std)


def detection_probability(gamma, gain_power, noise):
    """Return Pd for arrays of thresholds and gain powers (broadcast)."""
    mean, std = _h1_parameters(gain_power, noise)
    return _q((_finite(gamma) - mean) / std)


def miss_probability(gamma, gain_power, noise):
    """Return Pm = 1 - Pd, evaluated as a lower tail to keep small values accurate."""
    mean, std = _h1_parameters(gain_power, noise)
    return _q((mean - _finite(gamma)) / std)


def false_alarm_derivatives(gamma, noise):
    """Return first and second derivatives of Pf with respect to gamma."""
    mean, std = _h0_parameters(noise)
    u = (_finite(gamma) - mean) / std
    density = _normal_pdf(u)
    return -density / std, u * density / std ** 2


def miss_derivatives(gamma, gain_power, noise):
    """Return first and second derivatives of Pm with respect to gamma."""
    mean, std = _h1_parameters(gain_power, noise)
    v = (_finite(gamma) - mean) / std
    density = _normal_pdf(v)
    return density / std, -v * density / std ** 2


def lower_thresholds(beta, noise):
    """Return the thresholds at which Pf equals beta."""
    return noise.sigma_v2 * (noise.samples_m + _np.sqrt(2.0 * noise.samples_m) * _q_inv(beta))


def upper_thresholds(alpha, gain_power, noise):
    """Return the thresholds at which Pm equals alpha."""
    mean, std = _h1_parameters(gain_power, noise)
    return mean + std * _q_inv(1 - _np.asarray(alpha, dtype='float64'))


# Per-subchannel operations

def statistic_moments(sub, noise):
    """Return the Gaussian moments of the energy statistic of a subchannel.

    Parameters
    ----------
    sub : wbsense.api.detection.SubchannelParams
        The subchannel.
    noise : wbsense.api.detection.NoiseModel
        Noise variance and number of samples.

    Returns
    -------
    out : wbsense.api.detection.StatisticMoments

    """
    m = noise.samples_m
    s2 = noise.sigma_v2
    g = sub.gain_power
    return StatisticMoments(m * s2, 2 * m * s2 * s2, m * (s2 + g), 2 * m * (s2 + 2 * g) * s2)


def prob_false_alarm(gamma, noise):
    """Return the probability that the statistic of a vacant band exceeds gamma."""
    return _scalar_or_array(gamma, false_alarm_probability(gamma, noise))


def prob_detection(gamma, sub, noise):
    """Return the probability that the statistic of an occupied band exceeds gamma."""
    return _scalar_or_array(gamma, detection_probability(gamma, sub.gain_power, noise))


def prob_miss(gamma, sub, noise):
    """Return the probability 1 - Pd of missing an occupied band."""
    return _scalar_or_array(gamma, miss_probability(gamma, sub.gain_power, noise))


def threshold_bounds(sub, noise, index=None):
    """Return the threshold interval in which Pf <= beta and Pm <= alpha.

    Parameters
    ----------
    sub : wbsense.api.detection.SubchannelParams
        The subchannel.
    noise : wbsense.api.detection.NoiseModel
        Noise variance and number of samples.
    index : int
        Index of the subchannel. Only used in error messages (optional).

    Raises
    ------
    wbsense.api.utils.InfeasibleSubchannelError
        If the interval is empty.

    """
    from wbsense.api.utils.exceptions import InfeasibleSubchannelError

    gamma_min = float(lower_thresholds(sub.beta, noise))
    gamma_max = float(upper_thresholds(sub.alpha, sub.gain_power, noise))
    if gamma_min > gamma_max:
        raise InfeasibleSubchannelError(index, gamma_min, gamma_max)
    return ThresholdBounds(gamma_min, gamma_max)


def pf_derivatives(gamma, noise):
    """Return the first and second derivative of Pf at gamma.

    The first derivative is negative everywhere. The second derivative has
    the sign of :math:`\\gamma - M\\sigma_v^2`, so Pf is convex wherever
    Pf <= 1/2.

    """
    first, second = false_alarm_derivatives(gamma, noise)
    return _scalar_or_array(gamma, first), _scalar_or_array(gamma, second)


def pm_derivatives(gamma, sub, noise):
    """Return the first and second derivative of Pm at gamma.

    The first derivative is positive everywhere. The second derivative is
    non-negative wherever Pm <= 1/2.

    """
    first, second = miss_derivatives(gamma, sub.gain_power, noise)
    return _scalar_or_array(gamma, first), _scalar_or_array(gamma, second)


def roc_curve(sub, noise, pf):
    """Return the detection probabilities reachable at the given false-alarm levels.

    Parameters
    ----------
    sub : wbsense.api.detection.SubchannelParams
        The subchannel.
    noise : wbsense.api.detection.NoiseModel
        Noise variance and number of samples.
    pf : float or np.ndarray
        False-alarm probabilities in (0, 1).

    Returns
    -------
    gamma, pd : np.ndarray
        Thresholds that give the requested false-alarm levels and the
        associated probabilities of detection.

    """
    gamma = lower_thresholds(pf, noise)
    return gamma, prob_detection(gamma, sub, noise)
