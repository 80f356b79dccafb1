"""Energy-detector statistics for individual subchannels."""

from .parameters import NoiseModel, SubchannelParams, StatisticMoments, ThresholdBounds
from .statistics import statistic_moments
from .statistics import prob_false_alarm
from .statistics import prob_detection
from .statistics import prob_miss
from .statistics import threshold_bounds
from .statistics import pf_derivatives
from .statistics import pm_derivatives
from .statistics import roc_curve
from .exact import exact_false_alarm
from .exact import exact_detection
