"""Common convex form of the throughput and interference programs.

Both programs are written as

.. math::

    \\min_\\gamma \\sum_k a_k F_k(\\gamma_k) \\quad \\text{s.t.} \\quad
    \\sum_{k \\in S_j} b_k G_k(\\gamma_k) \\le e_j, \\quad
    \\gamma_{\\min,k} \\le \\gamma_k \\le \\gamma_{\\max,k},

with F = Pf, G = Pm, a = r, b = c, e = epsilon for the throughput
maximization and F = Pm, G = Pf, a = c, b = r, a single group and
e = sum(r) - delta for the interference minimization. F is decreasing and
G increasing in the threshold for the former, the other way round for the
latter. Both are convex on the boxes.

"""
import numpy as _np


class StandardForm(object):
    """Arrays and derivative kernels of a problem in the common form."""

    def __init__(self, spec, problem):
        from wbsense.api.optimization.problem import normalize_problem

        self.spec = spec
        self.problem = normalize_problem(problem)
        self.lower, self.upper = spec.bounds()
        if self.problem == 'p3':
            self.objective_weights = spec.cost
            self.constraint_weights = spec.rate
            self.membership = _np.ones((1, spec.num_subchannels))
            self.limits = _np.array([_np.sum(spec.rate) - spec.delta])
            self._objective_kind, self._constraint_kind = 'pm', 'pf'
        else:
            self.objective_weights = spec.rate
            self.constraint_weights = spec.cost
            self.membership = spec.membership
            self.limits = spec.epsilon
            self._objective_kind, self._constraint_kind = 'pf', 'pm'

    @property
    def num_constraints(self):
        return len(self.limits)

    @property
    def objective_decreasing(self):
        """True if the objective decreases with the thresholds."""
        return self.problem != 'p3'

    @property
    def preferred(self):
        """Return the box corner that minimizes the objective alone."""
        return self.upper.copy() if self.objective_decreasing else self.lower.copy()

    @property
    def relieving(self):
        """Return the box corner that minimizes the constraint functions."""
        return self.lower.copy() if self.objective_decreasing else self.upper.copy()

    def _terms(self, kind, gamma, derivatives):
        from wbsense.api.detection.statistics import false_alarm_probability
        from wbsense.api.detection.statistics import false_alarm_derivatives
        from wbsense.api.detection.statistics import miss_probability
        from wbsense.api.detection.statistics import miss_derivatives

        noise = self.spec.noise
        gains = self.spec.gain_power
        if kind == 'pf':
            value = false_alarm_probability(gamma, noise) * _np.ones(len(gains))
            if not derivatives:
                return value
            first, second = false_alarm_derivatives(gamma, noise)
        else:
            value = miss_probability(gamma, gains, noise)
            if not derivatives:
                return value
            first, second = miss_derivatives(gamma, gains, noise)
        return value, first * _np.ones(len(gains)), second * _np.ones(len(gains))

    def objective_terms(self, gamma, derivatives=True):
        """Return a_k F_k and optionally its first and second derivatives."""
        terms = self._terms(self._objective_kind, gamma, derivatives)
        if not derivatives:
            return self.objective_weights * terms
        return tuple(self.objective_weights * term for term in terms)

    def constraint_terms(self, gamma, derivatives=True):
        """Return b_k G_k and optionally its first and second derivatives."""
        terms = self._terms(self._constraint_kind, gamma, derivatives)
        if not derivatives:
            return self.constraint_weights * terms
        return tuple(self.constraint_weights * term for term in terms)

    def objective(self, gamma):
        return float(_np.sum(self.objective_terms(gamma, derivatives=False)))

    def constraints(self, gamma):
        """Return the values of the J aggregate constraint functions."""
        return self.membership.dot(self.constraint_terms(gamma, derivatives=False))

    def band_slope(self, index, gamma, weight):
        """Return d/dgamma of a_k F_k + weight b_k G_k for one subchannel at scalar gamma."""
        from wbsense.api.detection.statistics import false_alarm_derivatives
        from wbsense.api.detection.statistics import miss_derivatives

        pf_first = false_alarm_derivatives(gamma, self.spec.noise)[0]
        pm_first = miss_derivatives(gamma, self.spec.gain_power[index], self.spec.noise)[0]
        if self._objective_kind == 'pf':
            objective_first, constraint_first = pf_first, pm_first
        else:
            objective_first, constraint_first = pm_first, pf_first
        return float(self.objective_weights[index] * objective_first
                     + weight * self.constraint_weights[index] * constraint_first)

    def gradient_of_lagrangian(self, gamma, multipliers):
        """Return d/dgamma_k of the objective plus the weighted constraints."""
        objective_first = self.objective_terms(gamma)[1]
        constraint_first = self.constraint_terms(gamma)[1]
        weights = self.membership.T.dot(_np.asarray(multipliers, dtype='float64'))
        return objective_first + weights * constraint_first

    def band_minimizer(self, index, weight, tolerance):
        """Minimize a_k F_k + weight b_k G_k over the box of one subchannel.

        The function is convex on the box, so its slope is increasing and
        the minimizer is a box end or the root of the slope.

        """
        from scipy.optimize import brentq

        lower, upper = self.lower[index], self.upper[index]
        if self.band_slope(index, upper, weight) <= 0:
            return upper
        if self.band_slope(index, lower, weight) >= 0:
            return lower
        return brentq(lambda gamma: self.band_slope(index, gamma, weight), lower, upper,
                      xtol=tolerance * max(1.0, abs(upper)), maxiter=500)

    def stationary_multipliers(self, gamma):
        """Estimate constraint multipliers from stationarity in the interior subchannels.

        Only groups whose constraint is active get a multiplier; it is the
        non-negative least-squares solution of the stationarity conditions
        of the subchannels strictly inside their boxes.

        """
        from scipy.optimize import nnls

        width = self.upper - self.lower
        interior = (gamma - self.lower > 1E-9 * width) & (self.upper - gamma > 1E-9 * width)
        slack = self.limits - self.constraints(gamma)
        active = _np.flatnonzero(slack <= 1E-6 * _np.maximum(1, _np.abs(self.limits)))
        multipliers = _np.zeros(self.num_constraints)
        if not _np.any(interior) or len(active) == 0:
            return multipliers
        _, objective_first, _ = self.objective_terms(gamma)
        _, constraint_first, _ = self.constraint_terms(gamma)
        matrix = (self.membership[active] * constraint_first).T[interior]
        multipliers[active] = nnls(matrix, -objective_first[interior])[0]
        return multipliers
