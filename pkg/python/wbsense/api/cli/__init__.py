from .main import main, run
from .main import cmd_optimize, cmd_sweep, cmd_validate, cmd_simulate
