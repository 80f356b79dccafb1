"""Multipath channel realizations and their discrete frequency response."""
import numpy as _np


class ChannelRealization(object):
    """Impulse response of a multipath channel and its frequency response.

    The frequency response is the normalised DFT of the zero padded taps,

    .. math::

        H_k = \\frac{1}{\\sqrt{N}} \\sum_{n=0}^{L-1} h(n) e^{-j2\\pi nk/N},

    with one DFT bin per subchannel (N = K).

    Attributes
    ----------
    taps : np.ndarray
        The L complex taps h(0), ..., h(L-1).
    freq_response : np.ndarray
        The K complex values H_k.
    gain_power : np.ndarray
        The power gains |H_k|^2.

    """

    def __init__(self, taps, freq_response):
        from wbsense.api.utils.exceptions import DomainError

        self._taps = _np.asarray(taps, dtype='complex128').ravel()
        self._freq_response = _np.asarray(freq_response, dtype='complex128').ravel()
        if len(self._taps) > len(self._freq_response):
            raise DomainError("The number of taps L must not exceed the DFT length N.")

    @classmethod
    def from_taps(cls, taps, num_subchannels):
        """Create a realization by transforming the given taps."""
        taps = _np.asarray(taps, dtype='complex128').ravel()
        if len(taps) > num_subchannels:
            from wbsense.api.utils.exceptions import DomainError
            raise DomainError("The number of taps L must not exceed the DFT length N.")
        return cls(taps, _np.fft.fft(taps, n=num_subchannels) / _np.sqrt(num_subchannels))

    @property
    def taps(self):
        return self._taps

    @property
    def freq_response(self):
        return self._freq_response

    @property
    def gain_power(self):
        return _np.abs(self._freq_response) ** 2

    @property
    def num_subchannels(self):
        return len(self._freq_response)


def make_channel(gain_power=None, num_subchannels=None, tap_powers=None, seed=None):
    """Create a channel realization.

    Exactly one of `gain_power` or `tap_powers` must be given.

    Parameters
    ----------
    gain_power : array_like
        Explicit power gains |H_k|^2. The frequency response is
        :math:`\\sqrt{|H_k|^2}` with zero phase. Phases do not affect the
        energy statistic.
    num_subchannels : int
        Number of subchannels K. Required with `tap_powers`.
    tap_powers : array_like
        Power profile of L random taps. Taps are drawn as circularly
        symmetric complex Gaussians with these variances.
    seed : int
        Seed of the random taps (optional).

    Returns
    -------
    out : wbsense.api.simulation.ChannelRealization

    """
    from wbsense.api.utils.exceptions import DomainError

    if (gain_power is None) == (tap_powers is None):
        raise DomainError("Exactly one of 'gain_power' or 'tap_powers' must be given.")

    if gain_power is not None:
        gains = _np.asarray(gain_power, dtype='float64').ravel()
        if len(gains) < 1:
            raise DomainError("At least one subchannel is required.")
        if not _np.all(_np.isfinite(gains)) or _np.any(gains < 0):
            raise DomainError("Gain powers must be finite and non-negative.")
        if num_subchannels is not None and num_subchannels != len(gains):
            raise DomainError("'num_subchannels' does not match the number of gain powers.")
        freq_response = _np.sqrt(gains).astype('complex128')
        taps = _np.sqrt(len(gains)) * _np.fft.ifft(freq_response)
        return ChannelRealization(taps, freq_response)

    powers = _np.asarray(tap_powers, dtype='float64').ravel()
    if num_subchannels is None or num_subchannels < 1:
        raise DomainError("'num_subchannels' must be a positive integer.")
    if len(powers) < 1 or len(powers) > num_subchannels:
        raise DomainError("The number of taps must satisfy 1 <= L <= N.")
    if not _np.all(_np.isfinite(powers)) or _np.any(powers < 0):
        raise DomainError("Tap powers must be finite and non-negative.")

    rng = _np.random.default_rng(seed)
    noise = rng.standard_normal((2, len(powers)))
    taps = _np.sqrt(powers / 2) * (noise[0] + 1j * noise[1])
    return ChannelRealization.from_taps(taps, num_subchannels)
