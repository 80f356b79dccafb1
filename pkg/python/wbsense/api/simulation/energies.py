"""Monte Carlo generation of the energy statistic."""
import numpy as _np


class OccupancyVector(object):
    """Occupancy of the subchannels; True means a primary user is present."""

    def __init__(self, bits):
        from wbsense.api.utils.exceptions import DomainError

        self._bits = _np.array(bits, dtype=bool).ravel()
        if len(self._bits) < 1:
            raise DomainError("An occupancy vector needs at least one subchannel.")

    @classmethod
    def vacant(cls, num_subchannels):
        return cls(_np.zeros(num_subchannels, dtype=bool))

    @classmethod
    def occupied(cls, num_subchannels):
        return cls(_np.ones(num_subchannels, dtype=bool))

    @property
    def bits(self):
        return self._bits.copy()

    def __len__(self):
        return len(self._bits)

    def __eq__(self, other):
        return isinstance(other, OccupancyVector) and _np.array_equal(self._bits, other._bits)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "OccupancyVector({0})".format(''.join('1' if b else '0' for b in self._bits))


def random_occupancy(num_subchannels, probability=0.5, seed=None):
    """Draw each subchannel as occupied with the given probability."""
    rng = _np.random.default_rng(seed)
    return OccupancyVector(rng.random(num_subchannels) < probability)


class TrialBatch(object):
    """Energy statistics of a number of independent detection intervals.

    Attributes
    ----------
    energies : np.ndarray
        (trials x K) array of the statistic Y_k.
    occupancy : wbsense.api.simulation.OccupancyVector
        Occupancy used for all trials.
    seed : int
        Master seed of the random substreams.
    trials : int
        Number of trials.

    """

    def __init__(self, energies, occupancy, seed, sample_model='real', domain='frequency'):
        self._energies = _np.asarray(energies, dtype='float64')
        self._occupancy = occupancy
        self._seed = seed
        self._sample_model = sample_model
        self._domain = domain

    @property
    def energies(self):
        return self._energies

    @property
    def occupancy(self):
        return self._occupancy

    @property
    def seed(self):
        return self._seed

    @property
    def trials(self):
        return self._energies.shape[0]

    @property
    def num_subchannels(self):
        return self._energies.shape[1]

    @property
    def sample_model(self):
        return self._sample_model

    @property
    def domain(self):
        return self._domain

    def mean(self):
        """Return the sample mean of the statistic per subchannel."""
        return self._energies.mean(axis=0)

    def variance(self):
        """Return the unbiased sample variance of the statistic per subchannel."""
        return self._energies.var(axis=0, ddof=1)


def _block_generator(seed, block):
    return _np.random.default_rng(_np.random.SeedSequence(seed, spawn_key=(block,)))


def _real_block(rng, gain_mag, bits, sigma_v, trials, samples_m):
    """Real-valued samples: antipodal unit-power symbols in real Gaussian noise."""
    num = len(gain_mag)
    symbols = 2.0 * rng.integers(0, 2, size=(trials, samples_m, num)) - 1.0
    noise = sigma_v * rng.standard_normal((trials, samples_m, num))
    samples = gain_mag * bits * symbols + noise
    return _np.sum(samples * samples, axis=1)


def _qpsk(rng, shape):
    return _np.exp(1j * (_np.pi / 4 + _np.pi / 2 * rng.integers(0, 4, size=shape)))


def _complex_noise(rng, sigma_v, shape):
    draws = rng.standard_normal((2,) + shape)
    return sigma_v / _np.sqrt(2.0) * (draws[0] + 1j * draws[1])


def _complex_block(rng, freq_response, bits, sigma_v, trials, samples_m):
    """Frequency-domain subchannel samples R_k = H_k S_k + V_k."""
    shape = (trials, samples_m, len(freq_response))
    symbols = _qpsk(rng, shape)
    noise = _complex_noise(rng, sigma_v, shape)
    samples = freq_response * bits * symbols + noise
    return _np.sum(_np.abs(samples) ** 2, axis=1)


def _time_block(rng, taps, bits, sigma_v, trials, samples_m):
    """Time-domain frames: circular multipath convolution, noise, normalised DFT."""
    num = len(bits)
    shape = (trials, samples_m, num)
    symbols = _qpsk(rng, shape) * bits
    noise = _complex_noise(rng, sigma_v, shape)

    signal = _np.fft.ifft(symbols, axis=-1, norm='ortho')
    received = _np.zeros(shape, dtype='complex128')
    for delay, tap in enumerate(taps):
        received += tap / _np.sqrt(num) * _np.roll(signal, delay, axis=-1)
    received += noise

    samples = _np.fft.fft(received, axis=-1, norm='ortho')
    return _np.sum(_np.abs(samples) ** 2, axis=1)


def simulate_energies(channel, occupancy, noise, trials, seed=None, parameters=None):
    """Simulate the energy statistic of all subchannels.

    Each trial consists of M independent frames. Occupied bands carry
    unit-power primary symbols, vacant bands carry none, and every band
    receives independent noise of variance sigma_v^2. The channel stays
    fixed during the batch.

    Parameters
    ----------
    channel : wbsense.api.simulation.ChannelRealization
        Channel between primary transmitter and cognitive radio.
    occupancy : wbsense.api.simulation.OccupancyVector
        Which subchannels are occupied.
    noise : wbsense.api.detection.NoiseModel
        Noise variance and number of samples M.
    trials : int
        Number of detection intervals to simulate.
    seed : int
        Master seed. Block b of ``parameters.simulation.block_size`` trials
        uses the substream ``SeedSequence(seed, spawn_key=(b,))``. A fresh
        seed is drawn if none is given.
    parameters : wbsense.api.common.ParameterList
        Parameters for the simulation. If none given the global
        parameter object `wbsense.api.global_parameters` is used.

    Notes
    -----
    ``parameters.simulation.sample_model`` selects the sample model:

    * ``'real'``: real Gaussian noise and antipodal symbols. The first two
      moments of the statistic equal the Gaussian model used for the
      analytic detection probabilities.
    * ``'complex'``: circular complex Gaussian noise and QPSK symbols.
      The mean agrees with the analytic model, the variance is half of it.

    ``parameters.simulation.domain = 'time'`` generates the complex model
    through the time-domain convolution and an explicit DFT.

    """
    import time
    import wbsense.api
    from concurrent.futures import ThreadPoolExecutor
    from wbsense.api.utils.exceptions import DomainError

    if parameters is None:
        parameters = wbsense.api.global_parameters

    options = parameters.simulation
    if int(trials) < 1:
        raise DomainError("At least one trial is required.")
    trials = int(trials)
    if len(occupancy) != channel.num_subchannels:
        raise DomainError("Occupancy and channel have different numbers of subchannels.")
    if options.sample_model not in ('real', 'complex'):
        raise ValueError("'sample_model' must be one of: 'real', 'complex'")
    if options.domain not in ('frequency', 'time'):
        raise ValueError("'domain' must be one of: 'frequency', 'time'")
    if options.domain == 'time' and options.sample_model != 'complex':
        raise ValueError("The time-domain path requires the 'complex' sample model.")

    if seed is None:
        seed = int(_np.random.SeedSequence().generate_state(1)[0])

    bits = occupancy.bits.astype('float64')
    sigma_v = noise.sigma_v
    samples_m = noise.samples_m
    block_size = int(options.block_size)
    block_count = (trials + block_size - 1) // block_size

    def run_block(block):
        rng = _block_generator(seed, block)
        count = min(block_size, trials - block * block_size)
        if options.domain == 'time':
            return _time_block(rng, channel.taps, bits, sigma_v, count, samples_m)
        if options.sample_model == 'complex':
            return _complex_block(rng, channel.freq_response, bits, sigma_v, count, samples_m)
        return _real_block(rng, _np.abs(channel.freq_response), bits, sigma_v, count, samples_m)

    wbsense.api.LOGGER.info(
        "Simulation: START. Trials: {0}. Blocks: {1}. Workers: {2}. Model: {3}/{4}".format(
            trials, block_count, options.workers, options.sample_model, options.domain))
    start = time.time()
    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as executor:
            blocks = list(executor.map(run_block, range(block_count)))
    else:
        blocks = [run_block(block) for block in range(block_count)]
    wbsense.api.LOGGER.info("Simulation: FINISHED. Time: {0:.4f} seconds".format(time.time() - start))

    return TrialBatch(_np.concatenate(blocks, axis=0), occupancy, seed,
                      sample_model=options.sample_model, domain=options.domain)
