"""Standard normal tail function and its inverse.

All detection probabilities of the energy detector are values of the
Gaussian tail function

.. math::

    Q(x) = P(Z > x) = \\frac{1}{2}\\operatorname{erfc}(x / \\sqrt{2}).

The functions in this module accept scalars or numpy arrays and return
objects of the same shape.

"""
import numpy as _np

_SQRT2 = _np.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / _np.sqrt(2.0 * _np.pi)


def _return_like(value, result):
    """Return a Python float for scalar input and an array otherwise."""
    if _np.ndim(value) == 0:
        return float(result)
    return result


def as_probability(value):
    """Validate that all entries of value lie in [0, 1] and return them as floats."""
    from wbsense.api.utils.exceptions import DomainError

    p = _np.asarray(value, dtype='float64')
    if not _np.all(_np.isfinite(p)) or _np.any(p < 0) or _np.any(p > 1):
        raise DomainError("Probabilities must lie in [0, 1].")
    return _return_like(value, p)


def normal_pdf(x):
    """Return the standard normal density at x."""
    x_arr = _np.asarray(x, dtype='float64')
    return _return_like(x, _INV_SQRT_2PI * _np.exp(-0.5 * x_arr * x_arr))


def q(x):
    """Return the standard normal tail probability P(Z > x).

    Parameters
    ----------
    x : float or np.ndarray
        Finite argument(s).

    Returns
    -------
    out : float or np.ndarray
        Tail probabilities in [0, 1], strictly decreasing in x.

    """
    from scipy.special import erfc
    from wbsense.api.utils.exceptions import DomainError

    x_arr = _np.asarray(x, dtype='float64')
    if not _np.all(_np.isfinite(x_arr)):
        raise DomainError("q requires finite arguments.")
    return _return_like(x, 0.5 * erfc(x_arr / _SQRT2))


def q_inv(p):
    """Return x such that q(x) = p.

    The initial value from ``scipy.special.erfcinv`` is refined by one
    Newton step on q, whose derivative is minus the normal density.

    Parameters
    ----------
    p : float or np.ndarray
        Probabilities in the open interval (0, 1).

    """
    from scipy.special import erfc, erfcinv
    from wbsense.api.utils.exceptions import DomainError

    p_arr = _np.asarray(p, dtype='float64')
    if not _np.all(_np.isfinite(p_arr)) or _np.any(p_arr <= 0) or _np.any(p_arr >= 1):
        raise DomainError("q_inv requires probabilities in the open interval (0, 1).")

    x = _SQRT2 * erfcinv(2 * p_arr)
    density = _INV_SQRT_2PI * _np.exp(-0.5 * x * x)
    x = x + (0.5 * erfc(x / _SQRT2) - p_arr) / density
    return _return_like(p, x)
