from .sweep import SweepResult, run_sweep, sweep_values
from .validation import ValidationReport, validate_thresholds
