"""Log-barrier interior-point solver of the joint detection programs."""
import numpy as _np

from wbsense.api.utils.logging import start_message as _start_message
from wbsense.api.utils.logging import end_message as _end_message


class _BarrierFunction(object):
    """Barrier function of the free thresholds in scaled coordinates.

    Free thresholds are written as gamma_k = gamma_min,k + w_k t_k with
    t_k in (0, 1). The objective is divided by the sum of its weights so
    that the barrier parameter is measured in relative units.

    """

    def __init__(self, form, gamma, free, groups):
        self.form = form
        self.base = gamma.copy()
        self.free = free
        self.groups = groups
        self.lower = form.lower[free]
        self.width = form.upper[free] - form.lower[free]
        self.scale = float(_np.sum(form.objective_weights[free]))
        self.rows = form.membership[groups][:, free]

    @property
    def num_barriers(self):
        return 2 * len(self.free) + len(self.groups)

    def gamma(self, t):
        result = self.base.copy()
        result[self.free] = self.lower + self.width * t
        return result

    def slack(self, t):
        form = self.form
        values = form.constraint_terms(self.gamma(t), derivatives=False)
        return form.limits[self.groups] - form.membership[self.groups].dot(values)

    def in_domain(self, t):
        return _np.all(t > 0) and _np.all(t < 1) and _np.all(self.slack(t) > 0)

    def value(self, t, mu):
        objective = _np.sum(self.form.objective_terms(self.gamma(t), derivatives=False)[self.free])
        barrier = _np.sum(_np.log(t)) + _np.sum(_np.log1p(-t)) + _np.sum(_np.log(self.slack(t)))
        return objective / self.scale - mu * barrier

    def derivatives(self, t, mu):
        """Return gradient and Hessian of the barrier function."""
        gamma = self.gamma(t)
        free = self.free
        _, f_first, f_second = self.form.objective_terms(gamma)
        _, g_first, g_second = self.form.constraint_terms(gamma)
        f_first = f_first[free] * self.width / self.scale
        f_second = f_second[free] * self.width ** 2 / self.scale
        g_first = g_first[free] * self.width
        g_second = g_second[free] * self.width ** 2

        slack = self.slack(t)
        jacobian = self.rows * g_first
        weights = mu / slack

        gradient = (f_first - mu * (1 / t - 1 / (1 - t))
                    + jacobian.T.dot(weights))
        diagonal = (f_second + mu * (1 / t ** 2 + 1 / (1 - t) ** 2)
                    + self.rows.T.dot(weights) * g_second)
        hessian = _np.diag(diagonal) + (jacobian.T * (weights / slack)).dot(jacobian)
        return gradient, hessian

    def constraint_multipliers(self, t, mu):
        """Return the multipliers of the aggregate constraints in raw units."""
        return self.scale * mu / self.slack(t)


def _newton_direction(gradient, hessian):
    import scipy.linalg

    try:
        return scipy.linalg.solve(hessian, -gradient, assume_a='pos')
    except (scipy.linalg.LinAlgError, ValueError):
        return scipy.linalg.lstsq(hessian, -gradient)[0]


def _line_search(barrier, t, direction, slope, mu, options):
    """Return a step length that stays in the domain and decreases the barrier."""
    step = 1.0
    while not barrier.in_domain(t + step * direction):
        step *= options.backtracking_factor
        if step < 1E-20:
            return 0.0

    # Full Newton steps inside the region of quadratic convergence.
    if -slope < 1E-6:
        return step

    current = barrier.value(t, mu)
    while barrier.value(t + step * direction, mu) > current + options.armijo_slope * step * slope:
        step *= options.backtracking_factor
        if step < 1E-20:
            return 0.0
    return step


def _center(barrier, t, mu, options):
    """Minimize the barrier function for fixed mu by damped Newton steps.

    Returns the new point, the number of iterations and whether the
    iteration converged within the iteration budget.

    """
    previous = _np.inf
    for iteration in range(options.max_iterations):
        gradient, hessian = barrier.derivatives(t, mu)
        direction = _newton_direction(gradient, hessian)
        decrement = -gradient.dot(direction)
        if decrement / 2 <= options.newton_tolerance:
            return t, iteration, True
        if decrement < 1E-12 and decrement >= previous:
            # Rounding floor reached.
            return t, iteration, True
        previous = decrement
        step = _line_search(barrier, t, direction, gradient.dot(direction), mu, options)
        if step == 0:
            return t, iteration + 1, True
        t = t + step * direction
    return t, options.max_iterations, False


def _initial_point(barrier, towards):
    """Return a strictly feasible start on the segment from 1/2 to the relieving corner."""
    extreme = barrier.slack(_np.full(len(barrier.free), float(towards)))
    t = _np.full(len(barrier.free), 0.5)
    for _ in range(1000):
        if _np.all(barrier.slack(t) >= 0.5 * extreme):
            break
        t = (t + towards) / 2
    return _np.clip(t, 1E-300, 1 - 1E-16)


def _tight_multipliers(form, gamma, multipliers, tight):
    """Return multipliers of groups pinned at the relieving corner.

    Each multiplier is the smallest non-negative value for which the
    gradient of the Lagrangian points out of the box at all its members.

    """
    _, first, _ = form.constraint_terms(gamma)
    for group, members in tight:
        gradient = form.gradient_of_lagrangian(gamma, multipliers)
        members = [k for k in members if first[k] != 0]
        if members:
            multipliers[group] = max(0.0, _np.max(-gradient[members] / first[members]))
    return multipliers


def _dual_hessian(form, point, free, rows, multipliers):
    """Return the Hessian of the Lagrangian dual function at the given multipliers.

    Subchannels at a box end do not move with the multipliers and do not
    contribute.

    """
    weights = rows.T.dot(multipliers)
    _, _, objective_second = form.objective_terms(point)
    _, constraint_first, constraint_second = form.constraint_terms(point)
    curvature = objective_second[free] + weights * constraint_second[free]
    width = form.upper[free] - form.lower[free]
    interior = ((point[free] - form.lower[free] > 1E-12 * width)
                & (form.upper[free] - point[free] > 1E-12 * width) & (curvature > 0))
    scale = _np.zeros(len(free))
    scale[interior] = -constraint_first[free][interior] ** 2 / curvature[interior]
    return (rows * scale).dot(rows.T)


def _refine_multipliers(form, gamma, free, groups, start, options):
    """Polish the multipliers of the aggregate constraints by Newton steps on the dual.

    For given multipliers every free threshold minimizes its own term of
    the Lagrangian. The dual gradient is the constraint excess of these
    minimizers. A single group is safeguarded by a bracket of the
    multiplier, several groups by backtracking on the norm of the
    projected gradient.

    Returns the thresholds, the multipliers, the number of iterations and
    whether the dual iteration converged.

    """
    rows = form.membership[groups][:, free]

    def primal(multipliers):
        result = gamma.copy()
        result[free] = [form.band_minimizer(k, weight, options.scalar_tolerance)
                        for k, weight in zip(free, rows.T.dot(multipliers))]
        return result

    def excess(point):
        return form.constraints(point)[groups] - form.limits[groups]

    def residual(multipliers, gradient):
        return _np.where(multipliers > 0, _np.abs(gradient), _np.maximum(gradient, 0))

    multipliers = _np.where(_np.isfinite(start), _np.maximum(start, 0), 1.0)
    low, high = 0.0, _np.inf
    point = primal(multipliers)
    gradient = excess(point)
    for iteration in range(options.max_iterations):
        bound = min(options.feasibility_tolerance,
                    0.1 * options.kkt_tolerance / max(1.0, _np.max(multipliers)))
        if _np.max(residual(multipliers, gradient)) <= bound:
            return point, multipliers, iteration, True

        hessian = _dual_hessian(form, point, free, rows, multipliers)
        if len(groups) == 1:
            if gradient[0] > 0:
                low = multipliers[0]
            else:
                high = multipliers[0]
            candidate = _np.nan
            if hessian[0, 0] < 0:
                candidate = multipliers[0] - gradient[0] / hessian[0, 0]
            if not low < candidate < high:
                candidate = (low + high) / 2 if _np.isfinite(high) else max(2 * low, 1.0)
            multipliers = _np.array([candidate])
            point = primal(multipliers)
            gradient = excess(point)
            continue

        active = (multipliers > 0) | (gradient > 0)
        direction = _np.zeros(len(groups))
        direction[active] = _newton_direction(-gradient[active], -hessian[active][:, active])
        current = _np.linalg.norm(residual(multipliers, gradient))
        step = 1.0
        while step > 1E-12:
            trial = _np.maximum(multipliers + step * direction, 0)
            trial_point = primal(trial)
            trial_gradient = excess(trial_point)
            if _np.linalg.norm(residual(trial, trial_gradient)) < current:
                break
            step *= options.backtracking_factor
        else:
            return point, multipliers, iteration + 1, False
        multipliers, point, gradient = trial, trial_point, trial_gradient
    return point, multipliers, options.max_iterations, False


def _solve(spec, problem, parameters, method='barrier'):
    """Solve the throughput ('p1', 'p2') or interference ('p3') program."""
    import time
    import wbsense.api
    from wbsense.api.optimization.feasibility import check_feasibility
    from wbsense.api.optimization.standard_form import StandardForm
    from wbsense.api.optimization.solution import Multipliers, build_solution
    from wbsense.api.optimization.solution import infeasible_solution, OPTIMAL, MAX_ITERATIONS

    if parameters is None:
        parameters = wbsense.api.global_parameters

    options = parameters.optimization
    tolerance = options.feasibility_tolerance
    logger = wbsense.api.LOGGER
    start = time.time()
    logger.info(_start_message(problem, spec.num_subchannels, 'Barrier'))

    def finish(gamma, multipliers, status, iterations):
        solution = build_solution(spec, problem, gamma, Multipliers(multipliers), status,
                                  iterations, method, report, parameters)
        logger.info(_end_message(problem, solution.status, time.time() - start, 'Barrier'))
        return solution

    report = check_feasibility(spec, problem)
    if not report.feasible:
        logger.info("Barrier: {0}. Infeasible: {1}".format(problem.upper(), report.message))
        logger.info(_end_message(problem, 'infeasible', time.time() - start, 'Barrier'))
        return infeasible_solution(spec, problem, method, report)

    form = StandardForm(spec, problem)
    multipliers = _np.zeros(form.num_constraints)

    # Fix subchannels whose optimal threshold does not depend on the others.
    gamma = form.preferred
    objective_weights = form.objective_weights
    constraint_weights = form.constraint_weights * (form.membership.sum(axis=0) > 0)
    relieving = form.relieving
    flat = (objective_weights == 0) & (constraint_weights == 0)
    gamma[flat] = form.upper[flat]
    only_constraint = (objective_weights == 0) & (constraint_weights > 0)
    gamma[only_constraint] = relieving[only_constraint]
    degenerate = form.upper - form.lower <= 0
    gamma[degenerate] = form.lower[degenerate]
    if _np.all(form.constraints(gamma) <= form.limits + tolerance):
        return finish(gamma, multipliers, OPTIMAL, 0)
    is_free = (objective_weights > 0) & (constraint_weights > 0) & ~degenerate
    movable = _np.flatnonzero(is_free)

    # Groups that are only feasible at the relieving corner pin their members there.
    tight = []
    changed = True
    while changed:
        changed = False
        trial = gamma.copy()
        trial[is_free] = relieving[is_free]
        slack = form.limits - form.constraints(trial)
        for group in range(form.num_constraints):
            members = _np.flatnonzero((form.membership[group] > 0) & is_free)
            if (len(members) > 0
                    and slack[group] <= tolerance * max(1.0, abs(form.limits[group]))):
                gamma[members] = relieving[members]
                is_free[members] = False
                tight.append((group, members))
                changed = True

    free = _np.flatnonzero(is_free)
    groups = _np.array([group for group in range(form.num_constraints)
                        if _np.any(form.membership[group, free] > 0)], dtype=int)

    status = OPTIMAL
    iterations = 0
    if len(free) > 0:
        barrier = _BarrierFunction(form, gamma, free, groups)
        towards = 0.0 if form.objective_decreasing else 1.0
        t = _initial_point(barrier, towards)
        mu = options.initial_barrier
        while True:
            t, count, converged = _center(barrier, t, mu, options)
            iterations += count
            logger.debug("Barrier: {0}. mu = {1:.3e}. Newton iterations: {2}".format(
                problem.upper(), mu, count))
            if not converged:
                status = MAX_ITERATIONS
                break
            if (barrier.num_barriers * mu <= options.duality_gap
                    and barrier.scale * mu <= 0.1 * options.kkt_tolerance):
                break
            mu /= options.barrier_decrease
        gamma = barrier.gamma(t)
        multipliers[groups] = barrier.constraint_multipliers(t, mu)
    multipliers = _tight_multipliers(form, gamma, multipliers, tight)

    # Newton steps on the dual certify the thresholds of the pinned and the free subchannels.
    linked = _np.array([group for group in range(form.num_constraints)
                        if _np.any(form.membership[group, movable] > 0)], dtype=int)
    if len(movable) > 0:
        refined, refined_multipliers, count, converged = _refine_multipliers(
            form, gamma, movable, linked, multipliers[linked], options)
        iterations += count
        logger.debug("Barrier: {0}. Dual iterations: {1}. Converged: {2}".format(
            problem.upper(), count, converged))
        if converged:
            gamma = refined
            multipliers[linked] = refined_multipliers
            status = OPTIMAL
        elif len(free) > 0:
            multipliers[groups] = form.stationary_multipliers(gamma)[groups]
            multipliers = _tight_multipliers(form, gamma, multipliers, tight)

    return finish(gamma, multipliers, status, iterations)


def solve_p2(spec, parameters=None):
    """Maximize the aggregate opportunistic throughput.

    Solves the convex program

    .. math::

        \\min_\\gamma \\sum_k r_k P_{f,k}(\\gamma_k) \\quad \\text{s.t.} \\quad
        \\sum_{i \\in S_j} c_i P_{m,i}(\\gamma_i) \\le \\epsilon_j, \\quad
        \\gamma_{\\min,k} \\le \\gamma_k \\le \\gamma_{\\max,k},

    with a log-barrier interior-point method.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    parameters : wbsense.api.common.ParameterList
        Parameters for the solver. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    solution : wbsense.api.optimization.Solution
        The optimal thresholds. The objective is the aggregate throughput
        R(gamma). Infeasible problems give status 'infeasible'.

    Notes
    -----
    Subchannels with neither rate nor cost and subchannels that no group
    constrains are set to gamma_max. Subchannels without rate that add to
    the interference are set to gamma_min. If the remaining thresholds at
    gamma_max are feasible this is the solution; a group that only admits
    gamma_min fixes its members there. The other thresholds are scaled to
    (0, 1) and found by damped Newton iterations on the barrier function
    while the barrier parameter decreases geometrically.

    The barrier estimate of the multipliers loses accuracy as the slack
    of an active constraint approaches rounding level. The multipliers
    are therefore refined by Newton steps on the Lagrangian dual, in which
    every threshold minimizes its own term by root finding. If the dual
    iteration fails the barrier thresholds are kept and the multipliers
    are recovered from stationarity by non-negative least squares.

    """
    return _solve(spec, 'p2', parameters)


def solve_p1(spec, parameters=None):
    """Maximize the aggregate opportunistic throughput R(gamma).

    Identical to :func:`solve_p2`, which solves the equivalent
    minimization of the rate-weighted false-alarm probabilities. The
    returned solution is labelled 'p1'.

    """
    return _solve(spec, 'p1', parameters)


def solve_p3(spec, parameters=None):
    """Minimize the aggregate interference subject to a throughput floor.

    Solves

    .. math::

        \\min_\\gamma \\sum_k c_k P_{m,k}(\\gamma_k) \\quad \\text{s.t.} \\quad
        \\sum_k r_k (1 - P_{f,k}(\\gamma_k)) \\ge \\delta, \\quad
        \\gamma_{\\min,k} \\le \\gamma_k \\le \\gamma_{\\max,k},

    with the same interior-point method as :func:`solve_p2`. Subchannels
    without cost are set to gamma_max. If gamma_min meets the floor for
    the others it is the solution; if the floor is only reached at
    gamma_max, gamma_max is returned.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data. ``spec.delta`` is the throughput floor.
    parameters : wbsense.api.common.ParameterList
        Parameters for the solver. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Returns
    -------
    solution : wbsense.api.optimization.Solution
        The optimal thresholds. The objective is c^T Pm(gamma).

    """
    return _solve(spec, 'p3', parameters)
