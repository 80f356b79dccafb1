""" Public interface of wbsense """

# Check if at least SciPy 1.0 is installed. The solvers need brentq's full output.
import scipy
if int(scipy.version.version.split('.')[0]) < 1:
    raise Exception("At least SciPy version 1.0 required to run wbsense. Found version {0}".format(
        scipy.version.version))

# Initialize logger

from wbsense.api.utils.logging import _init_logger

LOGGER = _init_logger()

import os
if os.environ.get('WBSENSE_CONSOLE_LOGGING') == '1':
    from wbsense.api.utils.logging import enable_console_logging
    enable_console_logging()

# Define the global default options

from wbsense.api.common import global_parameters as __global_parameters

global_parameters = __global_parameters()

# Now all the module imports

from wbsense.api.detection import NoiseModel, SubchannelParams
from wbsense.api.detection import prob_false_alarm, prob_detection, prob_miss
from wbsense.api.detection import threshold_bounds
from wbsense.api.optimization import PrimaryUserGroup, ProblemSpec, ThresholdVector
from wbsense.api.optimization import check_feasibility
from wbsense.api.optimization import solve_p1, solve_p2, solve_p3
from wbsense.api.optimization import solve_uniform_baseline
from wbsense.api.optimization import oracle_solve
from wbsense.api.optimization import kkt_residual
from wbsense.api.simulation import make_channel, simulate_energies, empirical_rates
from wbsense.api import scenarios
from wbsense.api.file_interfaces import load_scenario
from wbsense.api.file_interfaces import save_scenario
from wbsense.api.applications import run_sweep, validate_thresholds

from wbsense.api.utils.logging import DEBUG, INFO, WARNING, ERROR, CRITICAL
from wbsense.api.utils.logging import enable_console_logging
from wbsense.api.utils.logging import enable_file_logging
from wbsense.api.utils.logging import set_logging_level


def test():
    """ Runs wbsense python unit tests """
    import unittest
    from os.path import dirname
    loader = unittest.TestLoader()
    suite = loader.discover(dirname(__file__))
    test_runner = unittest.TextTestRunner(verbosity=2)
    return test_runner.run(suite)
