"""Monte Carlo simulation of the multiband energy detector."""

from .channel import ChannelRealization, make_channel
from .energies import OccupancyVector, TrialBatch
from .energies import random_occupancy
from .energies import simulate_energies
from .rates import RateEstimate, empirical_rates
