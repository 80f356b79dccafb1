"""Uniform-threshold baseline."""
import numpy as _np


def solve_uniform_baseline(spec, problem, parameters=None):
    """Optimize a single threshold shared by all subchannels.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    problem : str
        'p1', 'p2' or 'p3'.
    parameters : wbsense.api.common.ParameterList
        Parameters for the search. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    solution : wbsense.api.optimization.Solution
        Solution with gamma_k = gamma for all k. The KKT residual refers to
        the one-dimensional problem. Status 'infeasible' if no common
        threshold meets all constraints.

    Notes
    -----
    The common threshold must lie in [max gamma_min, min gamma_max]. On
    that interval the objective and the constraint functions are
    monotone in the threshold, so the feasible set is an interval and the
    optimum is its end point in the direction that improves the
    objective. The end point is located by Brent's method to the
    configured interval tolerance.

    """
    import time
    import wbsense.api
    from scipy.optimize import brentq
    from wbsense.api.utils.logging import start_message, end_message
    from wbsense.api.optimization.problem import normalize_problem
    from wbsense.api.optimization.feasibility import FeasibilityReport
    from wbsense.api.optimization.standard_form import StandardForm
    from wbsense.api.optimization.solution import Multipliers, OPTIMAL
    from wbsense.api.optimization.solution import build_solution, infeasible_solution

    if parameters is None:
        parameters = wbsense.api.global_parameters

    problem = normalize_problem(problem)
    form = StandardForm(spec, problem)
    width = parameters.baseline.interval_tolerance
    tolerance = parameters.optimization.feasibility_tolerance
    method = 'uniform'
    ones = _np.ones(spec.num_subchannels)
    start = time.time()
    wbsense.api.LOGGER.info(start_message(problem, spec.num_subchannels, 'Uniform'))

    def infeasible(report):
        wbsense.api.LOGGER.info("Uniform: {0}. Infeasible: {1}".format(
            problem.upper(), report.message))
        wbsense.api.LOGGER.info(end_message(problem, 'infeasible', time.time() - start, 'Uniform'))
        return infeasible_solution(spec, problem, method, report)

    low = float(_np.max(form.lower))
    high = float(_np.min(form.upper))
    if low > high:
        index = int(_np.argmax(form.lower))
        return infeasible(FeasibilityReport(False, 'box', index, low, high))

    def excess(gamma):
        return form.constraints(gamma * ones) - form.limits

    # Constraint functions increase towards the preferred end of the interval.
    preferred, relieving = (high, low) if form.objective_decreasing else (low, high)
    violation = excess(relieving)
    if _np.any(violation > tolerance):
        index = int(_np.argmax(violation))
        if problem == 'p3':
            report = FeasibilityReport(False, 'throughput', None, spec.throughput(relieving * ones),
                                       spec.delta)
        else:
            report = FeasibilityReport(False, 'interference', index,
                                       float(violation[index] + form.limits[index]),
                                       float(form.limits[index]))
        return infeasible(report)

    iterations = 0
    gamma = preferred
    binding = None
    violation = excess(preferred)
    for group in _np.flatnonzero(violation > tolerance):
        if excess(relieving)[group] >= 0:
            root = relieving
        else:
            root, info = brentq(lambda g: excess(g)[group], low, high, xtol=width,
                                full_output=True)
            iterations += info.iterations
            # Move to the feasible side of the bracket.
            if excess(root)[group] > tolerance:
                root += width if relieving > preferred else -width
                root = min(max(root, low), high)
        if abs(root - relieving) < abs(gamma - relieving):
            gamma, binding = root, group

    multipliers = _np.zeros(form.num_constraints)
    residual = max(0.0, float(_np.max(excess(gamma))))
    if binding is not None:
        objective_slope = _np.sum(form.objective_terms(gamma * ones)[1])
        constraint_slope = form.membership[binding].dot(form.constraint_terms(gamma * ones)[1])
        multipliers[binding] = max(0.0, -objective_slope / constraint_slope)
        residual = max(residual, abs(multipliers[binding] * excess(gamma)[binding]))

    solution = build_solution(spec, problem, gamma * ones,
                              Multipliers(multipliers, _np.zeros(len(ones)), _np.zeros(len(ones))),
                              OPTIMAL, iterations, method, FeasibilityReport(True), parameters,
                              residual=residual)
    wbsense.api.LOGGER.info(end_message(problem, solution.status, time.time() - start, 'Uniform'))
    return solution
