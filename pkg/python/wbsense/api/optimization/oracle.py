"""Reference solvers used to verify the interior-point method."""
import numpy as _np


def _dual_bisection(form, options, tolerance):
    """Solve a single-constraint problem through its Lagrangian dual.

    Returns the thresholds, the multiplier and the number of dual
    function evaluations.

    """
    from scipy.optimize import brentq

    row = form.membership[0]
    limit = form.limits[0]
    evaluations = [0]

    def minimizer(multiplier):
        evaluations[0] += 1
        return _np.array([form.band_minimizer(k, multiplier * row[k], options.scalar_tolerance)
                          for k in range(len(row))])

    def excess(multiplier):
        return form.constraints(minimizer(multiplier))[0] - limit

    if excess(0.0) <= tolerance:
        return minimizer(0.0), 0.0, evaluations[0]

    # Limit of infinite multiplier: constrained subchannels at the relieving corner.
    corner = minimizer(0.0)
    constrained = (row > 0) & (form.constraint_weights > 0)
    corner[constrained] = form.relieving[constrained]
    if form.constraints(corner)[0] - limit >= -tolerance:
        slopes = _np.array([form.band_slope(k, corner[k], 0.0) for k in range(len(row))])
        derivative = _np.array([form.band_slope(k, corner[k], 1.0) for k in range(len(row))]) \
            - slopes
        members = _np.flatnonzero(constrained & (derivative != 0))
        multiplier = max(0.0, _np.max(-slopes[members] / derivative[members]))
        return corner, multiplier, evaluations[0]

    upper = 1.0
    while excess(upper) > 0:
        upper *= 2
        if upper > 1E300:
            raise RuntimeError("Could not bracket the Lagrange multiplier.")
    lower = upper / 2 if upper > 1 else 0.0

    multiplier = brentq(excess, lower, upper, xtol=options.scalar_tolerance * upper,
                        maxiter=500)
    return minimizer(multiplier), multiplier, evaluations[0]


def _grid_refinement(form, options):
    """Minimize over successively refined tensor grids.

    Each refinement centers a grid of ``grid_points`` values per
    subchannel at the best feasible point so far and halves its extent.

    """
    lower, upper = form.lower, form.upper
    low, high = lower.copy(), upper.copy()
    best = form.relieving
    best_value = form.objective(best)
    count = options.grid_points

    for _ in range(options.grid_refinements):
        axes = [_np.linspace(low[k], high[k], count) for k in range(len(lower))]
        points = _np.stack([axis.ravel() for axis in _np.meshgrid(*axes, indexing='ij')], axis=1)
        values = form.objective_terms(points, derivatives=False).sum(axis=1)
        constraints = form.constraint_terms(points, derivatives=False).dot(form.membership.T)
        feasible = _np.all(constraints <= form.limits, axis=1)
        if _np.any(feasible):
            candidate = _np.flatnonzero(feasible)[_np.argmin(values[feasible])]
            if values[candidate] < best_value:
                best, best_value = points[candidate].copy(), values[candidate]
        half_width = (high - low) / 4
        low = _np.maximum(lower, best - half_width)
        high = _np.minimum(upper, best + half_width)

    return best, options.grid_refinements


def oracle_solve(spec, problem, parameters=None):
    """Solve a problem with an independent reference method.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    problem : str
        'p1', 'p2' or 'p3'.
    parameters : wbsense.api.common.ParameterList
        Parameters for the oracle. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    solution : wbsense.api.optimization.Solution

    Notes
    -----
    With a single aggregate constraint (always the case for 'p3') the
    Lagrangian decomposes over the subchannels. For a multiplier lambda
    each subchannel minimizes a convex scalar function by root finding on
    its derivative; lambda is bracketed by doubling and found by Brent's
    method so that the constraint is met with equality (or lambda = 0 if
    it is inactive). Several groups with at most four subchannels are
    solved by grid refinement.

    """
    import time
    import wbsense.api
    from wbsense.api.utils.logging import start_message, end_message
    from wbsense.api.optimization.problem import normalize_problem
    from wbsense.api.optimization.feasibility import check_feasibility
    from wbsense.api.optimization.standard_form import StandardForm
    from wbsense.api.optimization.solution import Multipliers, OPTIMAL
    from wbsense.api.optimization.solution import build_solution, infeasible_solution

    if parameters is None:
        parameters = wbsense.api.global_parameters

    problem = normalize_problem(problem)
    form = StandardForm(spec, problem)
    if form.num_constraints > 1 and spec.num_subchannels > 4:
        raise ValueError("The oracle supports several groups only for at most 4 subchannels.")
    method = 'dual-bisection' if form.num_constraints == 1 else 'grid-refinement'

    start = time.time()
    wbsense.api.LOGGER.info(start_message(problem, spec.num_subchannels, 'Oracle'))
    report = check_feasibility(spec, problem)
    if not report.feasible:
        wbsense.api.LOGGER.info(end_message(problem, 'infeasible', time.time() - start, 'Oracle'))
        return infeasible_solution(spec, problem, method, report)

    if form.num_constraints == 1:
        gamma, multiplier, iterations = _dual_bisection(
            form, parameters.oracle, parameters.optimization.feasibility_tolerance)
        multipliers = _np.array([multiplier])
    else:
        gamma, iterations = _grid_refinement(form, parameters.oracle)
        multipliers = form.stationary_multipliers(gamma)

    solution = build_solution(spec, problem, gamma, Multipliers(multipliers), OPTIMAL,
                              iterations, method, report, parameters)
    wbsense.api.LOGGER.info(end_message(problem, solution.status, time.time() - start, 'Oracle'))
    return solution
