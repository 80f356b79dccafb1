"""Result objects returned by the optimizers."""
import numpy as _np

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
MAX_ITERATIONS = 'max-iterations'


class Multipliers(object):
    """Lagrange multipliers of a solution.

    Attributes
    ----------
    constraint : np.ndarray
        One multiplier per aggregate constraint (J for the throughput
        maximization, one for the interference minimization).
    lower, upper : np.ndarray
        Multipliers of gamma >= gamma_min and gamma <= gamma_max. May be
        None, in which case they are inferred from stationarity.

    """

    def __init__(self, constraint, lower=None, upper=None):
        self.constraint = _np.atleast_1d(_np.asarray(constraint, dtype='float64'))
        self.lower = None if lower is None else _np.asarray(lower, dtype='float64')
        self.upper = None if upper is None else _np.asarray(upper, dtype='float64')

    def as_dict(self):
        result = {'constraint': self.constraint.tolist()}
        if self.lower is not None:
            result['lower'] = self.lower.tolist()
        if self.upper is not None:
            result['upper'] = self.upper.tolist()
        return result

    def __repr__(self):
        return "Multipliers(constraint={0!r})".format(self.constraint.tolist())


class Solution(object):
    """Thresholds and diagnostics returned by a solver.

    Attributes
    ----------
    gamma : wbsense.api.optimization.ThresholdVector
        Optimal thresholds (NaN if the problem is infeasible).
    pf, pm : np.ndarray
        False-alarm and miss probabilities at gamma.
    objective : float
        Aggregate throughput R(gamma) for 'p1'/'p2', aggregate interference
        cost c^T Pm(gamma) for 'p3'.
    throughput : float
        Aggregate opportunistic throughput R(gamma).
    interference : np.ndarray
        Aggregate interference of each primary user group.
    total_interference : float
        c^T Pm(gamma) over all subchannels.
    slacks : np.ndarray
        epsilon_j minus the interference of group j ('p1'/'p2') or
        R(gamma) - delta ('p3'). Non-negative if feasible.
    kkt_residual : float
        Maximum KKT residual of gamma and the multipliers.
    status : str
        'optimal', 'infeasible' or 'max-iterations'.
    multipliers : wbsense.api.optimization.Multipliers
        Lagrange multipliers (None if infeasible).
    iterations : int
        Number of Newton (or root finding) iterations.
    problem : str
        'p1', 'p2' or 'p3'.
    method : str
        Name of the algorithm that produced the solution.
    report : wbsense.api.optimization.FeasibilityReport
        Result of the feasibility check.

    """

    def __init__(self, gamma, pf, pm, objective, throughput, interference, total_interference,
                 slacks, kkt_residual, status, multipliers, iterations, problem, method,
                 report=None):
        self.gamma = gamma
        self.pf = pf
        self.pm = pm
        self.objective = objective
        self.throughput = throughput
        self.interference = interference
        self.total_interference = total_interference
        self.slacks = slacks
        self.kkt_residual = kkt_residual
        self.status = status
        self.multipliers = multipliers
        self.iterations = iterations
        self.problem = problem
        self.method = method
        self.report = report

    @property
    def is_optimal(self):
        return self.status == OPTIMAL

    def as_dict(self):
        """Return a JSON compatible dictionary of the solution."""

        def as_list(values):
            return [None if not _np.isfinite(value) else float(value)
                    for value in _np.atleast_1d(values)]

        def as_float(value):
            return None if not _np.isfinite(value) else float(value)

        return {
            'problem': self.problem,
            'method': self.method,
            'status': self.status,
            'objective': as_float(self.objective),
            'throughput': as_float(self.throughput),
            'interference': as_list(self.interference),
            'total_interference': as_float(self.total_interference),
            'slacks': as_list(self.slacks),
            'kkt_residual': as_float(self.kkt_residual),
            'iterations': int(self.iterations),
            'gamma': as_list(self.gamma.gamma),
            'pf': as_list(self.pf),
            'pm': as_list(self.pm),
            'multipliers': None if self.multipliers is None else self.multipliers.as_dict(),
            'feasibility': None if self.report is None else self.report.message,
        }

    def __repr__(self):
        return "Solution(problem={0!r}, method={1!r}, status={2!r}, objective={3!r})".format(
            self.problem, self.method, self.status, self.objective)


def infeasible_solution(spec, problem, method, report):
    """Return a solution object marking an infeasible problem."""
    from wbsense.api.optimization.problem import ThresholdVector

    nan_k = _np.full(spec.num_subchannels, _np.nan)
    slack_count = spec.num_groups if problem != 'p3' else 1
    return Solution(ThresholdVector(nan_k), nan_k, nan_k.copy(), _np.nan, _np.nan,
                    _np.full(spec.num_groups, _np.nan), _np.nan,
                    _np.full(slack_count, _np.nan), _np.nan, INFEASIBLE, None, 0,
                    problem, method, report)


def build_solution(spec, problem, gamma, multipliers, status, iterations, method,
                   report=None, parameters=None, residual=None):
    """Evaluate all diagnostics at gamma and return a Solution.

    The KKT residual of the full problem is computed unless `residual` is
    given (the uniform baseline certifies its own one-dimensional problem).
    A status 'optimal' is downgraded to 'max-iterations' if the KKT
    residual or the primal infeasibility exceed the configured tolerances.

    """
    import wbsense.api
    from wbsense.api.optimization.problem import ThresholdVector
    from wbsense.api.optimization.kkt import kkt_residual, infer_box_multipliers

    if parameters is None:
        parameters = wbsense.api.global_parameters

    options = parameters.optimization
    lower, upper = spec.bounds()
    gamma = _np.clip(_np.asarray(gamma, dtype='float64'), lower, upper)

    if multipliers.lower is None or multipliers.upper is None:
        box_lower, box_upper = infer_box_multipliers(spec, gamma, multipliers.constraint, problem)
        multipliers = Multipliers(multipliers.constraint, box_lower, box_upper)

    pf = spec.pf(gamma)
    pm = spec.pm(gamma)
    throughput = spec.throughput(gamma)
    interference = spec.interference(gamma)
    total_interference = spec.total_interference(gamma)
    if problem == 'p3':
        objective = total_interference
        slacks = _np.array([throughput - spec.delta])
    else:
        objective = throughput
        slacks = spec.epsilon - interference

    if residual is None:
        residual = kkt_residual(spec, gamma, multipliers, problem)
    if status == OPTIMAL and (residual > options.kkt_tolerance
                              or _np.min(slacks) < -options.feasibility_tolerance):
        wbsense.api.LOGGER.warning(
            "{0}: KKT residual {1:.3e} or constraint violation {2:.3e} above tolerance.".format(
                method, residual, -_np.min(slacks)))
        status = MAX_ITERATIONS

    return Solution(ThresholdVector(gamma, spec), pf, pm, objective, throughput, interference,
                    total_interference, slacks, residual, status, multipliers, iterations,
                    problem, method, report)
