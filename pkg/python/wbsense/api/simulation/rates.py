"""Empirical false-alarm and detection rates of a simulated batch."""
import numpy as _np


class RateEstimate(object):
    """Empirical exceedance rates per subchannel.

    Attributes
    ----------
    rates : np.ndarray
        Fraction of trials with Y_k > gamma_k.
    standard_errors : np.ndarray
        Binomial standard error sqrt(p(1-p)/n) of each rate.
    labels : list of str
        'pf' for vacant and 'pd' for occupied subchannels.
    trials : int
        Number of trials the rates are based on.

    """

    def __init__(self, rates, standard_errors, labels, trials):
        self._rates = _np.asarray(rates, dtype='float64')
        self._standard_errors = _np.asarray(standard_errors, dtype='float64')
        self._labels = list(labels)
        self._trials = trials

    @property
    def rates(self):
        return self._rates

    @property
    def standard_errors(self):
        return self._standard_errors

    @property
    def labels(self):
        return self._labels

    @property
    def trials(self):
        return self._trials

    def interval(self, width=3.0):
        """Return lower and upper ends of the +/- width sigma intervals."""
        spread = width * self._standard_errors
        return self._rates - spread, self._rates + spread

    def __repr__(self):
        return "RateEstimate(trials={0}, rates={1!r})".format(self._trials, self._rates)


def empirical_rates(batch, gamma):
    """Return the fraction of trials in which each statistic exceeds its threshold.

    Parameters
    ----------
    batch : wbsense.api.simulation.TrialBatch
        Simulated energies.
    gamma : array_like or wbsense.api.optimization.ThresholdVector
        One threshold per subchannel.

    Returns
    -------
    out : wbsense.api.simulation.RateEstimate

    """
    from wbsense.api.utils.exceptions import DomainError

    gamma = _np.asarray(getattr(gamma, 'gamma', gamma), dtype='float64').ravel()
    if len(gamma) != batch.num_subchannels:
        raise DomainError("Expected {0} thresholds, got {1}.".format(
            batch.num_subchannels, len(gamma)))
    if not _np.all(_np.isfinite(gamma)):
        raise DomainError("Thresholds must be finite.")

    rates = _np.mean(batch.energies > gamma, axis=0)
    errors = _np.sqrt(rates * (1 - rates) / batch.trials)
    labels = ['pd' if bit else 'pf' for bit in batch.occupancy.bits]
    return RateEstimate(rates, errors, labels, batch.trials)
