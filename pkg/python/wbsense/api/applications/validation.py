"""Monte Carlo validation of the analytic detection probabilities."""
import numpy as _np


class ValidationReport(object):
    """Analytic against empirical false-alarm and detection probabilities.

    Every subchannel contributes two rows: one for the false-alarm
    probability, estimated from a batch in which all bands are vacant, and
    one for the detection probability, estimated from a batch in which all
    bands are occupied.

    Attributes
    ----------
    rows : list of dict
        Keys ``subchannel``, ``quantity`` ('pf' or 'pd'), ``gamma``,
        ``analytic``, ``empirical``, ``lower``, ``upper`` (3 sigma binomial
        interval of the empirical value), ``exact`` (finite-M chi-square
        law), ``difference`` (analytic - empirical) and ``flagged``.
    trials : int
        Trials per batch.
    seed : int
        Master seed of the two batches.
    tolerance : float
        Largest admissible |analytic - empirical| before a row is flagged.
    note : str
        Remark on the accuracy of the Gaussian approximation, or None.

    """

    header = ['subchannel', 'quantity', 'gamma', 'analytic', 'empirical', 'lower', 'upper',
              'exact', 'difference', 'flagged']

    def __init__(self, rows, trials, seed, tolerance, note=None):
        self.rows = rows
        self.trials = trials
        self.seed = seed
        self.tolerance = tolerance
        self.note = note

    @property
    def flags(self):
        """Return the rows whose disagreement exceeds the tolerance."""
        return [row for row in self.rows if row['flagged']]

    @property
    def num_flags(self):
        return len(self.flags)

    def table(self):
        """Return header and rows as lists for CSV or console output."""
        return list(self.header), [[row[name] for name in self.header] for row in self.rows]

    def write_csv(self, file_name):
        from wbsense.api.file_interfaces.tables import write_csv
        header, rows = self.table()
        write_csv(file_name, header, rows)

    def as_dict(self):
        return {'trials': self.trials, 'seed': self.seed, 'tolerance': self.tolerance,
                'note': self.note, 'flags': self.num_flags,
                'rows': [dict(row) for row in self.rows]}

    def __repr__(self):
        return "ValidationReport(trials={0}, flags={1})".format(self.trials, self.num_flags)


def validate_thresholds(spec, gamma, trials, seed=None, parameters=None):
    """Compare analytic and simulated probabilities at given thresholds.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        Subchannels and noise.
    gamma : array_like or wbsense.api.optimization.ThresholdVector
        One threshold per subchannel.
    trials : int
        Number of simulated detection intervals per batch.
    seed : int
        Master seed. The vacant and the occupied batch use two
        independent children of it. A fresh seed is drawn if none is
        given and stored in the report.
    parameters : wbsense.api.common.ParameterList
        Parameters for the simulation and the tolerance. If none given the
        global parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    report : wbsense.api.applications.ValidationReport

    """
    import wbsense.api
    from wbsense.api.detection import exact_false_alarm, exact_detection
    from wbsense.api.simulation import OccupancyVector, make_channel
    from wbsense.api.simulation import simulate_energies, empirical_rates
    from wbsense.api.utils.exceptions import DomainError

    if parameters is None:
        parameters = wbsense.api.global_parameters

    gamma = _np.asarray(getattr(gamma, 'gamma', gamma), dtype='float64').ravel()
    count = spec.num_subchannels
    if len(gamma) != count:
        raise DomainError("Expected {0} thresholds, got {1}.".format(count, len(gamma)))
    if not _np.all(_np.isfinite(gamma)):
        raise DomainError("Thresholds must be finite.")

    if seed is None:
        seed = int(_np.random.SeedSequence().generate_state(1)[0])
    vacant_seed, occupied_seed = [int(child.generate_state(1)[0])
                                  for child in _np.random.SeedSequence(seed).spawn(2)]

    noise = spec.noise
    model = parameters.simulation.sample_model
    tolerance = parameters.validation.tolerance
    channel = make_channel(gain_power=spec.gain_power)

    vacant = empirical_rates(simulate_energies(channel, OccupancyVector.vacant(count), noise,
                                               trials, vacant_seed, parameters), gamma)
    occupied = empirical_rates(simulate_energies(channel, OccupancyVector.occupied(count),
                                                 noise, trials, occupied_seed, parameters), gamma)

    analytic = {'pf': spec.pf(gamma), 'pd': 1 - spec.pm(gamma)}
    exact = {'pf': exact_false_alarm(gamma, noise, model) * _np.ones(count),
             'pd': _np.array([exact_detection(gamma[k], spec.subchannels[k], noise, model)
                              for k in range(count)])}
    estimates = {'pf': vacant, 'pd': occupied}

    rows = []
    for k in range(count):
        for quantity in ('pf', 'pd'):
            estimate = estimates[quantity]
            lower, upper = estimate.interval(3.0)
            difference = float(analytic[quantity][k] - estimate.rates[k])
            rows.append({
                'subchannel': k,
                'quantity': quantity,
                'gamma': float(gamma[k]),
                'analytic': float(analytic[quantity][k]),
                'empirical': float(estimate.rates[k]),
                'lower': float(lower[k]),
                'upper': float(upper[k]),
                'exact': float(exact[quantity][k]),
                'difference': difference,
                'flagged': bool(abs(difference) > tolerance),
            })

    note = None
    if noise.samples_m < parameters.validation.clt_samples_warning:
        note = ("M = {0} is small: the Gaussian approximation of the statistic is coarse "
                "and larger disagreement is expected.".format(noise.samples_m))
        wbsense.api.LOGGER.warning("Validation: " + note)

    report = ValidationReport(rows, int(trials), seed, tolerance, note)
    wbsense.api.LOGGER.info("Validation: {0} trials. Flags: {1}".format(
        int(trials), report.num_flags))
    return report
