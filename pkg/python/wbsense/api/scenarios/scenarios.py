"""Canonical problem instances."""
import numpy as _np

EIGHT_BANDS_GAIN_POWER = [0.50, 0.30, 0.45, 0.65, 0.25, 0.60, 0.40, 0.70]
EIGHT_BANDS_RATE = [612.0, 524.0, 623.0, 139.0, 451.0, 409.0, 909.0, 401.0]
EIGHT_BANDS_COST = [1.91, 8.17, 4.23, 3.86, 7.16, 6.05, 0.82, 1.30]


def eight_bands_path():
    """Return the path of the scenario file of the eight-band reference system."""
    import os
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), 'eight_bands.json')


def eight_bands(epsilon=1.25, delta=3224.0):
    """Return the eight-band reference system.

    A single primary user occupies all eight subchannels. The noise has
    unit variance, the detector sums M = 100 samples, and the caps are
    alpha = 0.1 and beta = 0.5 for every band.

    Parameters
    ----------
    epsilon : float
        Interference budget of the primary user.
    delta : float
        Throughput floor (kbps) of the interference minimization.

    """
    from wbsense.api.detection import NoiseModel, SubchannelParams
    from wbsense.api.optimization import PrimaryUserGroup, ProblemSpec

    columns = zip(EIGHT_BANDS_GAIN_POWER, EIGHT_BANDS_RATE, EIGHT_BANDS_COST)
    subchannels = [SubchannelParams(gain, rate, cost, alpha=0.1, beta=0.5)
                   for gain, rate, cost in columns]
    return ProblemSpec(subchannels, NoiseModel(1.0, 100),
                       [PrimaryUserGroup(range(8), epsilon)], delta)


def _interior_budgets(spec, position):
    """Return epsilon and delta at a relative position between the box extremes."""
    lower, upper = spec.bounds()
    least = spec.total_interference(lower)
    most = spec.total_interference(upper)
    epsilon = least + position * (most - least)
    delta = spec.throughput(lower) + position * (spec.throughput(upper) - spec.throughput(lower))
    return epsilon, delta


def identical_subchannels(num_subchannels, gain_power=0.5, rate=500.0, cost=4.0, alpha=0.1,
                          beta=0.5, samples_m=100, position=0.5):
    """Return a problem with identical subchannels in one group.

    The budget epsilon and the floor delta are placed at `position`
    between the values attained at gamma_min and gamma_max, so both
    aggregate constraints are active at the optimum.

    """
    from wbsense.api.detection import NoiseModel, SubchannelParams
    from wbsense.api.optimization import PrimaryUserGroup, ProblemSpec

    subchannels = [SubchannelParams(gain_power, rate, cost, alpha, beta)] * num_subchannels
    spec = ProblemSpec(subchannels, NoiseModel(1.0, samples_m),
                       [PrimaryUserGroup(range(num_subchannels), 0.0)])
    epsilon, delta = _interior_budgets(spec, position)
    return spec.with_epsilon(epsilon).with_delta(delta)


def random_spec(rng, max_subchannels=8, num_groups=1):
    """Return a random feasible problem with active aggregate constraints.

    Parameters
    ----------
    rng : numpy.random.Generator
        Source of randomness.
    max_subchannels : int
        Largest number of subchannels K (K is drawn from 1..max_subchannels).
    num_groups : int
        Number of primary user groups. Groups are random non-empty subsets
        and every subchannel belongs to at least one of them.

    """
    from wbsense.api.detection import NoiseModel, SubchannelParams
    from wbsense.api.optimization import PrimaryUserGroup, ProblemSpec

    noise = NoiseModel(1.0, int(rng.integers(50, 201)))
    count = int(rng.integers(1, max_subchannels + 1))
    subchannels = []
    while len(subchannels) < count:
        sub = SubchannelParams(rng.uniform(0.2, 1.5), rng.uniform(100, 1000),
                               rng.uniform(0.5, 10), rng.uniform(0.05, 0.5),
                               rng.uniform(0.05, 0.5))
        spec = ProblemSpec([sub], noise, [PrimaryUserGroup([0], 0.0)])
        lower, upper = spec.bounds()
        if upper[0] - lower[0] > 1.0:
            subchannels.append(sub)

    if num_groups == 1:
        memberships = [list(range(count))]
    else:
        owner = rng.integers(0, num_groups, size=count)
        memberships = []
        for group in range(num_groups):
            members = [k for k in range(count) if owner[k] == group or rng.random() < 0.3]
            memberships.append(members or [int(rng.integers(0, count))])

    spec = ProblemSpec(subchannels, noise, [PrimaryUserGroup(m, 0.0) for m in memberships])
    lower, upper = spec.bounds()
    least = spec.interference(lower)
    most = spec.interference(upper)
    position = rng.uniform(0.1, 0.9, size=len(memberships))
    groups = [PrimaryUserGroup(m, eps)
              for m, eps in zip(memberships, least + position * (most - least))]
    _, delta = _interior_budgets(spec, rng.uniform(0.1, 0.9))
    return spec.replace(groups=groups, delta=delta)
