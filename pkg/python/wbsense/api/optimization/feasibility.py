"""Closed-form feasibility conditions of the joint detection programs."""
import numpy as _np


class FeasibilityReport(object):
    """Outcome of a feasibility check.

    Attributes
    ----------
    feasible : bool
        True if the problem has a feasible point.
    condition : str
        Name of the first violated condition ('box', 'interference' or
        'throughput'), None if feasible.
    index : int
        Subchannel index for 'box', group index for 'interference', None
        otherwise.
    value, limit : float
        The violating quantity and the limit it exceeds.

    """

    def __init__(self, feasible, condition=None, index=None, value=None, limit=None):
        self.feasible = feasible
        self.condition = condition
        self.index = index
        self.value = value
        self.limit = limit

    @property
    def message(self):
        if self.feasible:
            return "feasible"
        if self.condition == 'box':
            return ("subchannel {0}: gamma_min = {1:.10g} exceeds gamma_max = {2:.10g}"
                    .format(self.index, self.value, self.limit))
        if self.condition == 'interference':
            return ("group {0}: minimum interference {1:.10g} exceeds epsilon = {2:.10g}"
                    .format(self.index, self.value, self.limit))
        return ("maximum throughput {0:.10g} is below delta = {1:.10g}"
                .format(self.value, self.limit))

    def __bool__(self):
        return bool(self.feasible)

    __nonzero__ = __bool__

    def __repr__(self):
        return "FeasibilityReport({0})".format(self.message)


def check_feasibility(spec, problem):
    """Check whether a problem has a feasible point.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    problem : str
        'p1', 'p2' (throughput maximization) or 'p3' (interference
        minimization).

    Returns
    -------
    out : wbsense.api.optimization.FeasibilityReport

    Notes
    -----
    All boxes must be non-empty. Interference and throughput both increase
    with the threshold, so the throughput maximization is
    feasible iff every group budget admits gamma_min, and the interference
    minimization iff gamma_max reaches the throughput floor.

    """
    from wbsense.api.optimization.problem import normalize_problem

    problem = normalize_problem(problem)
    lower, upper = spec.bounds()
    empty = _np.flatnonzero(lower > upper)
    if len(empty) > 0:
        index = int(empty[0])
        return FeasibilityReport(False, 'box', index, float(lower[index]), float(upper[index]))

    if problem == 'p3':
        best = spec.throughput(upper)
        if best < spec.delta:
            return FeasibilityReport(False, 'throughput', None, best, spec.delta)
        return FeasibilityReport(True)

    least = spec.interference(lower)
    violated = _np.flatnonzero(least > spec.epsilon)
    if len(violated) > 0:
        index = int(violated[0])
        return FeasibilityReport(False, 'interference', index, float(least[index]),
                                 float(spec.epsilon[index]))
    return FeasibilityReport(True)
