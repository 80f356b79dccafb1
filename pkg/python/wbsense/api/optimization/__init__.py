"""Optimization of the detection thresholds."""

from .problem import PrimaryUserGroup, ProblemSpec, ThresholdVector
from .solution import Multipliers, Solution
from .feasibility import FeasibilityReport, check_feasibility
from .kkt import kkt_residual
from .barrier import solve_p1
from .barrier import solve_p2
from .barrier import solve_p3
from .baseline import solve_uniform_baseline
from .oracle import oracle_solve
