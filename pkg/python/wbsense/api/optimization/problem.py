"""Problem data of the multiband joint detection programs."""
import numbers as _numbers

import numpy as _np


PROBLEMS = ('p1', 'p2', 'p3')


def normalize_problem(problem):
    """Return the lower case problem label or raise a ValueError."""
    label = str(problem).lower()
    if label not in PROBLEMS:
        raise ValueError("'problem' must be one of: 'p1', 'p2', 'p3'")
    return label


class PrimaryUserGroup(object):
    """Subchannels of one primary user and its aggregate interference budget.

    Parameters
    ----------
    members : iterable of int
        Indices of the subchannels used by the primary user.
    epsilon : float
        Budget on the aggregate cost of missed detections in these bands.

    """

    def __init__(self, members, epsilon):
        from wbsense.api.utils.exceptions import DomainError
        from wbsense.api.detection.parameters import _check_real

        members = list(members)
        if len(members) == 0:
            raise DomainError("A primary user group needs at least one member.")
        for member in members:
            if isinstance(member, bool) or not isinstance(member, _numbers.Integral) or member < 0:
                raise DomainError("Group members must be non-negative integers.")
        if len(set(members)) != len(members):
            raise DomainError("Group members must be unique.")
        self._members = tuple(int(member) for member in members)
        self._epsilon = _check_real('epsilon', epsilon, 0)

    @property
    def members(self):
        return self._members

    @property
    def epsilon(self):
        return self._epsilon

    def with_epsilon(self, epsilon):
        """Return a copy of the group with a different budget."""
        return PrimaryUserGroup(self._members, epsilon)

    def __eq__(self, other):
        return isinstance(other, PrimaryUserGroup) and \
            (self.members, self.epsilon) == (other.members, other.epsilon)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "PrimaryUserGroup(members={0!r}, epsilon={1!r})".format(
            list(self.members), self.epsilon)


class ProblemSpec(object):
    """Complete data of a joint detection problem.

    Parameters
    ----------
    subchannels : list of wbsense.api.detection.SubchannelParams
        The K subchannels.
    noise : wbsense.api.detection.NoiseModel
        Noise variance and number of samples.
    groups : list of wbsense.api.optimization.PrimaryUserGroup
        The J primary users and their interference budgets.
    delta : float
        Floor on the aggregate opportunistic throughput (only used by the
        interference minimization).

    """

    def __init__(self, subchannels, noise, groups, delta=0.0):
        from wbsense.api.utils.exceptions import DomainError
        from wbsense.api.detection.parameters import _check_real

        self._subchannels = tuple(subchannels)
        self._groups = tuple(groups)
        self._noise = noise
        self._delta = _check_real('delta', delta, 0)

        if len(self._subchannels) == 0:
            raise DomainError("A problem needs at least one subchannel.")
        if len(self._groups) == 0:
            raise DomainError("A problem needs at least one primary user group.")
        for index, group in enumerate(self._groups):
            if max(group.members) >= len(self._subchannels):
                raise DomainError(
                    "Group {0} references subchannel {1}, but there are only {2}.".format(
                        index, max(group.members), len(self._subchannels)))

        self._arrays = dict(
            (name, _np.array([getattr(sub, name) for sub in self._subchannels]))
            for name in ('gain_power', 'rate', 'cost', 'alpha', 'beta'))
        for array in self._arrays.values():
            array.flags.writeable = False

    @property
    def subchannels(self):
        return self._subchannels

    @property
    def noise(self):
        return self._noise

    @property
    def groups(self):
        return self._groups

    @property
    def delta(self):
        return self._delta

    @property
    def num_subchannels(self):
        return len(self._subchannels)

    @property
    def num_groups(self):
        return len(self._groups)

    @property
    def gain_power(self):
        return self._arrays['gain_power']

    @property
    def rate(self):
        return self._arrays['rate']

    @property
    def cost(self):
        return self._arrays['cost']

    @property
    def alpha(self):
        return self._arrays['alpha']

    @property
    def beta(self):
        return self._arrays['beta']

    @property
    def epsilon(self):
        """Return the budgets of all groups as an array."""
        return _np.array([group.epsilon for group in self._groups])

    @property
    def membership(self):
        """Return the J x K incidence matrix of groups and subchannels."""
        matrix = _np.zeros((self.num_groups, self.num_subchannels))
        for index, group in enumerate(self._groups):
            matrix[index, list(group.members)] = 1
        return matrix

    def bounds(self):
        """Return the arrays gamma_min and gamma_max.

        The arrays are not checked for gamma_min <= gamma_max; use
        :func:`wbsense.api.optimization.check_feasibility` for that.

        """
        from wbsense.api.detection.statistics import lower_thresholds, upper_thresholds

        return (lower_thresholds(self.beta, self._noise),
                upper_thresholds(self.alpha, self.gain_power, self._noise))

    def pf(self, gamma):
        """Return the false-alarm probabilities of all subchannels."""
        from wbsense.api.detection.statistics import false_alarm_probability
        return false_alarm_probability(gamma, self._noise) * _np.ones(self.num_subchannels)

    def pm(self, gamma):
        """Return the miss probabilities of all subchannels."""
        from wbsense.api.detection.statistics import miss_probability
        return miss_probability(gamma, self.gain_power, self._noise)

    def throughput(self, gamma):
        """Return the aggregate opportunistic throughput R = sum r_k (1 - Pf_k)."""
        return float(_np.dot(self.rate, 1 - self.pf(gamma)))

    def interference(self, gamma):
        """Return the aggregate interference sum c_i Pm_i of every group."""
        return self.membership.dot(self.cost * self.pm(gamma))

    def total_interference(self, gamma):
        """Return c^T Pm over all subchannels."""
        return float(_np.dot(self.cost, self.pm(gamma)))

    def replace(self, subchannels=None, noise=None, groups=None, delta=None):
        """Return a copy of the problem with some of its data replaced."""
        return ProblemSpec(self._subchannels if subchannels is None else subchannels,
                           self._noise if noise is None else noise,
                           self._groups if groups is None else groups,
                           self._delta if delta is None else delta)

    def with_epsilon(self, epsilon):
        """Return a copy in which every group has the budget epsilon."""
        return self.replace(groups=[group.with_epsilon(epsilon) for group in self._groups])

    def with_delta(self, delta):
        """Return a copy with a different throughput floor."""
        return self.replace(delta=delta)

    def with_scaled_rates(self, factor):
        """Return a copy in which all rates are multiplied by factor."""
        from wbsense.api.detection import SubchannelParams

        return self.replace(subchannels=[
            SubchannelParams(sub.gain_power, sub.rate * factor, sub.cost, sub.alpha, sub.beta)
            for sub in self._subchannels])

    def __eq__(self, other):
        return isinstance(other, ProblemSpec) and \
            (self.subchannels, self.noise, self.groups, self.delta) == \
            (other.subchannels, other.noise, other.groups, other.delta)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "ProblemSpec(K={0}, J={1}, noise={2!r}, delta={3!r})".format(
            self.num_subchannels, self.num_groups, self._noise, self._delta)


class ThresholdVector(object):
    """Detection thresholds of all subchannels.

    Parameters
    ----------
    gamma : array_like
        The K thresholds in energy units.
    spec : wbsense.api.optimization.ProblemSpec
        If given, the thresholds are checked against the boxes
        [gamma_min, gamma_max] and the probabilities can be queried.
    tolerance : float
        Admissible violation of the boxes (default 1E-8).

    """

    def __init__(self, gamma, spec=None, tolerance=1E-8):
        from wbsense.api.utils.exceptions import DomainError

        self._gamma = _np.array(gamma, dtype='float64').ravel()
        self._gamma.flags.writeable = False
        self._spec = spec
        if spec is None:
            return
        if len(self._gamma) != spec.num_subchannels:
            raise DomainError("Expected {0} thresholds, got {1}.".format(
                spec.num_subchannels, len(self._gamma)))
        lower, upper = spec.bounds()
        slack = tolerance * _np.maximum(1, _np.abs(self._gamma))
        outside = _np.flatnonzero((self._gamma < lower - slack) | (self._gamma > upper + slack))
        if len(outside) > 0:
            raise DomainError("Threshold {0} = {1} is outside [{2}, {3}].".format(
                outside[0], self._gamma[outside[0]], lower[outside[0]], upper[outside[0]]))

    @property
    def gamma(self):
        return self._gamma

    @property
    def spec(self):
        return self._spec

    @property
    def pf(self):
        return self._attached().pf(self._gamma)

    @property
    def pm(self):
        return self._attached().pm(self._gamma)

    def _attached(self):
        if self._spec is None:
            raise ValueError("The threshold vector is not attached to a problem.")
        return self._spec

    def __len__(self):
        return len(self._gamma)

    def __repr__(self):
        return "ThresholdVector({0!r})".format(self._gamma.tolist())
