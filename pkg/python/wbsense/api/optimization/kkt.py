"""Karush-Kuhn-Tucker residuals of candidate thresholds."""
import numpy as _np


def infer_box_multipliers(spec, gamma, constraint_multipliers, problem):
    """Return the box multipliers that make the Lagrangian stationary.

    The gradient g of objective plus weighted constraints is split into
    its positive part (multiplier of gamma >= gamma_min) and its negative
    part (multiplier of gamma <= gamma_max).

    """
    from wbsense.api.optimization.standard_form import StandardForm

    form = StandardForm(spec, problem)
    gradient = form.gradient_of_lagrangian(_np.asarray(gamma, dtype='float64'),
                                           constraint_multipliers)
    return _np.maximum(gradient, 0), _np.maximum(-gradient, 0)


def kkt_residual(spec, gamma, multipliers=None, problem='p2'):
    """Return the largest KKT residual of thresholds and multipliers.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    gamma : array_like or wbsense.api.optimization.ThresholdVector
        Candidate thresholds inside the boxes.
    multipliers : wbsense.api.optimization.Multipliers
        Multipliers of the aggregate constraints and (optionally) of the
        boxes. Missing box multipliers are inferred from stationarity. If
        None, all constraint multipliers are zero.
    problem : str
        'p1', 'p2' or 'p3'.

    Returns
    -------
    residual : float
        Maximum of the stationarity, primal feasibility, dual feasibility
        and complementary slackness residuals, all in the units of the
        objective and the constraints.

    """
    from wbsense.api.optimization.standard_form import StandardForm

    form = StandardForm(spec, problem)
    gamma = _np.asarray(getattr(gamma, 'gamma', gamma), dtype='float64')

    if multipliers is None:
        constraint = _np.zeros(form.num_constraints)
        lower = upper = None
    else:
        constraint = multipliers.constraint
        lower, upper = multipliers.lower, multipliers.upper
    if lower is None or upper is None:
        lower, upper = infer_box_multipliers(spec, gamma, constraint, problem)

    gradient = form.gradient_of_lagrangian(gamma, constraint)
    stationarity = _np.abs(gradient - lower + upper)

    slack = form.limits - form.constraints(gamma)
    primal = _np.concatenate([_np.maximum(form.lower - gamma, 0),
                              _np.maximum(gamma - form.upper, 0),
                              _np.maximum(-slack, 0)])
    dual = _np.maximum(-_np.concatenate([constraint, lower, upper]), 0)
    complementarity = _np.abs(_np.concatenate([constraint * slack,
                                               lower * (gamma - form.lower),
                                               upper * (form.upper - gamma)]))

    return float(max(_np.max(stationarity), _np.max(primal), _np.max(dual),
                     _np.max(complementarity)))
