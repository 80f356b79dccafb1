"""Exact finite-M distribution of the energy statistic.

The Gaussian expressions in :mod:`wbsense.api.detection.statistics` are the
large-M limit. For a given sample model the statistic is a scaled
(noncentral) chi-square variable:

* ``'real'``: :math:`Y/\\sigma_v^2 \\sim \\chi'^2_M(M|H|^2/\\sigma_v^2)`,
* ``'complex'``: :math:`2Y/\\sigma_v^2 \\sim \\chi'^2_{2M}(2M|H|^2/\\sigma_v^2)`.

These are used to judge Monte Carlo results independently of the
central-limit approximation.

"""
import numpy as _np


def _chi_square_parameters(noise, sample_model):
    if sample_model == 'real':
        return noise.samples_m, 1.0 / noise.sigma_v2
    if sample_model == 'complex':
        return 2 * noise.samples_m, 2.0 / noise.sigma_v2
    raise ValueError("'sample_model' must be one of: 'real', 'complex'")


def exact_false_alarm(gamma, noise, sample_model='real'):
    """Return P(Y > gamma) for a vacant band from the central chi-square law."""
    from scipy.stats import chi2

    dof, scale = _chi_square_parameters(noise, sample_model)
    result = chi2.sf(scale * _np.asarray(gamma, dtype='float64'), dof)
    return float(result) if _np.ndim(result) == 0 else result


def exact_detection(gamma, sub, noise, sample_model='real'):
    """Return P(Y > gamma) for an occupied band from the noncentral chi-square law."""
    from scipy.stats import chi2, ncx2

    dof, scale = _chi_square_parameters(noise, sample_model)
    x = scale * _np.asarray(gamma, dtype='float64')
    if sub.gain_power == 0:
        result = chi2.sf(x, dof)
    else:
        result = ncx2.sf(x, dof, scale * noise.samples_m * sub.gain_power)
    return float(result) if _np.ndim(result) == 0 else result
