"""Sweeps of the interference budget and of the throughput floor."""
import numpy as _np

SWEEP_PARAMETERS = {'epsilon': 'p1', 'delta': 'p3'}


class SweepResult(object):
    """Joint and uniform-threshold optima over a range of budgets or floors.

    Attributes
    ----------
    parameter : str
        'epsilon' (throughput maximization) or 'delta' (interference
        minimization).
    header : list of str
        ``sweep_value, objective_joint, objective_uniform, gamma_0 ..,
        pf_0 .., pm_0 .., status``.
    rows : list of list
        One row per sweep value in increasing order. Infeasible points
        have NaN entries and status 'infeasible'.

    """

    def __init__(self, parameter, num_subchannels, rows):
        self._parameter = parameter
        self._num_subchannels = num_subchannels
        self._rows = [list(row) for row in rows]

    @property
    def parameter(self):
        return self._parameter

    @property
    def header(self):
        k = range(self._num_subchannels)
        return (['sweep_value', 'objective_joint', 'objective_uniform']
                + ['gamma_{0}'.format(i) for i in k]
                + ['pf_{0}'.format(i) for i in k]
                + ['pm_{0}'.format(i) for i in k]
                + ['status'])

    @property
    def rows(self):
        return [list(row) for row in self._rows]

    def _column(self, index):
        return _np.array([row[index] for row in self._rows], dtype='float64')

    @property
    def values(self):
        return self._column(0)

    @property
    def objective_joint(self):
        return self._column(1)

    @property
    def objective_uniform(self):
        return self._column(2)

    @property
    def gamma(self):
        """Return the (points x K) array of joint thresholds."""
        k = self._num_subchannels
        return _np.array([row[3:3 + k] for row in self._rows], dtype='float64')

    @property
    def statuses(self):
        return [row[-1] for row in self._rows]

    def write_csv(self, file_name):
        from wbsense.api.file_interfaces.tables import write_csv
        write_csv(file_name, self.header, self._rows)

    def write_plot_data(self, file_name):
        """Write all numeric columns (everything but the status)."""
        from wbsense.api.file_interfaces.tables import write_plot_data
        write_plot_data(file_name, self.header[:-1], [row[:-1] for row in self._rows])

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return "SweepResult(parameter={0!r}, points={1})".format(self._parameter, len(self))


def sweep_values(start, stop, steps):
    """Return ``steps`` linearly spaced values from start to stop.

    Raises a DomainError for an empty range (start == stop or steps < 1).

    """
    from wbsense.api.utils.exceptions import DomainError

    if int(steps) < 1:
        raise DomainError("A sweep needs at least one step.")
    if not (_np.isfinite(start) and _np.isfinite(stop)) or start == stop:
        raise DomainError("The sweep range [{0}, {1}] is empty.".format(start, stop))
    return _np.linspace(float(start), float(stop), int(steps))


def run_sweep(spec, parameter, values, parameters=None):
    """Solve the joint and the uniform-threshold problem for each sweep value.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data. For 'epsilon' every group receives the sweep
        value as budget, for 'delta' the value is the throughput floor.
    parameter : str
        'epsilon' or 'delta'.
    values : array_like
        Sweep values. They are sorted in increasing order.
    parameters : wbsense.api.common.ParameterList
        Parameters for the solvers. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    result : wbsense.api.applications.SweepResult

    Raises
    ------
    DomainError
        If the range is empty or no sweep value gives a feasible problem.

    """
    import time
    import wbsense.api
    from wbsense.api.optimization import solve_p1, solve_p3, solve_uniform_baseline
    from wbsense.api.optimization.solution import INFEASIBLE
    from wbsense.api.utils.exceptions import DomainError
    from wbsense.api.utils.logging import start_message, end_message

    if parameter not in SWEEP_PARAMETERS:
        raise ValueError("'parameter' must be one of: 'epsilon', 'delta'")
    values = _np.sort(_np.asarray(values, dtype='float64').ravel())
    if len(values) == 0:
        raise DomainError("The sweep has no values.")
    if not _np.all(_np.isfinite(values)) or _np.any(values < 0):
        raise DomainError("Sweep values must be finite and non-negative.")

    problem = SWEEP_PARAMETERS[parameter]
    solve = solve_p1 if problem == 'p1' else solve_p3
    start = time.time()
    wbsense.api.LOGGER.info(start_message(problem, len(values), 'Sweep'))

    rows = []
    for value in values:
        if parameter == 'epsilon':
            point = spec.with_epsilon(value)
        else:
            point = spec.with_delta(value)
        joint = solve(point, parameters)
        uniform = solve_uniform_baseline(point, problem, parameters)
        rows.append([float(value), joint.objective, uniform.objective]
                    + list(joint.gamma.gamma) + list(joint.pf) + list(joint.pm)
                    + [joint.status])
        wbsense.api.LOGGER.debug("Sweep: {0} = {1:.6g}. Joint: {2}. Uniform: {3}".format(
            parameter, value, joint.status, uniform.status))

    if all(row[-1] == INFEASIBLE for row in rows):
        wbsense.api.LOGGER.info(end_message(problem, INFEASIBLE, time.time() - start, 'Sweep'))
        raise DomainError("No feasible point in the sweep range [{0}, {1}] of {2}.".format(
            values[0], values[-1], parameter))
    wbsense.api.LOGGER.info(end_message(problem, 'done', time.time() - start, 'Sweep'))
    return SweepResult(parameter, spec.num_subchannels, rows)
