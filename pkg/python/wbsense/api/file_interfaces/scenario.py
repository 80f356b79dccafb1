"""Scenario files: problem data plus solver and simulation options in JSON."""
import numbers as _numbers

import numpy as _np

SUBCHANNEL_FIELDS = ('gain_power', 'rate', 'cost', 'alpha', 'beta')
SCENARIO_FIELDS = ('noise', 'subchannels', 'groups', 'delta', 'solver', 'simulation')
SIMULATION_FIELDS = ('trials', 'seed', 'occupancy')


class Scenario(object):
    """A problem together with the options stored next to it.

    Parameters
    ----------
    spec : wbsense.api.optimization.ProblemSpec
        The problem data.
    solver : dict
        Options of the ``optimization`` parameter section.
    simulation : dict
        ``trials``, ``seed`` and ``occupancy`` (list of 0/1) of the Monte
        Carlo validation, plus options of the ``simulation`` parameter
        section (e.g. ``sample_model``).

    """

    def __init__(self, spec, solver=None, simulation=None):
        self._spec = spec
        self._solver = dict(solver or {})
        self._simulation = dict(simulation or {})

    @property
    def spec(self):
        return self._spec

    @property
    def solver(self):
        return dict(self._solver)

    @property
    def simulation(self):
        return dict(self._simulation)

    @property
    def trials(self):
        return self._simulation.get('trials')

    @property
    def seed(self):
        return self._simulation.get('seed')

    @property
    def occupancy(self):
        """Return the stored occupancy as OccupancyVector, or None."""
        from wbsense.api.simulation import OccupancyVector

        bits = self._simulation.get('occupancy')
        return None if bits is None else OccupancyVector(bits)

    def replace(self, spec):
        """Return a scenario with the same options and different problem data."""
        return Scenario(spec, self._solver, self._simulation)

    def parameters(self, base=None):
        """Return a copy of the parameters with the options of the scenario applied.

        Parameters
        ----------
        base : wbsense.api.common.ParameterList
            Parameters to start from. If none given the global parameter
            object `wbsense.api.global_parameters` is used.

        """
        import wbsense.api

        if base is None:
            base = wbsense.api.global_parameters
        parameters = base.copy()
        parameters.optimization.update(self._solver)
        parameters.simulation.update(dict(
            (key, value) for key, value in self._simulation.items()
            if key not in SIMULATION_FIELDS))
        return parameters

    def __eq__(self, other):
        return isinstance(other, Scenario) and \
            (self.spec, self.solver, self.simulation) == (other.spec, other.solver,
                                                          other.simulation)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "Scenario({0!r})".format(self._spec)


def _number(value, field, index=None, minimum=None):
    """Return value as float or raise a ScenarioError naming the field."""
    from wbsense.api.utils.exceptions import ScenarioError

    if isinstance(value, bool) or not isinstance(value, _numbers.Real) \
            or not _np.isfinite(value):
        raise ScenarioError("must be a finite number, got {0!r}".format(value), field, index)
    if minimum is not None and value < minimum:
        raise ScenarioError("must not be smaller than {0}, got {1!r}".format(minimum, value),
                            field, index)
    return float(value)


def _integer(value, field, index=None, minimum=None):
    from wbsense.api.utils.exceptions import ScenarioError

    if isinstance(value, bool) or not isinstance(value, _numbers.Integral):
        raise ScenarioError("must be an integer, got {0!r}".format(value), field, index)
    if minimum is not None and value < minimum:
        raise ScenarioError("must not be smaller than {0}, got {1!r}".format(minimum, value),
                            field, index)
    return int(value)


def _section(data, field):
    from wbsense.api.utils.exceptions import ScenarioError

    if field not in data:
        raise ScenarioError("missing section", field)
    if not isinstance(data[field], dict):
        raise ScenarioError("must be an object", field)
    return data[field]


def _subchannels(section):
    """Return the list of SubchannelParams described by the per-field arrays."""
    from wbsense.api.detection import SubchannelParams
    from wbsense.api.utils.exceptions import ScenarioError

    for key in section:
        if key not in SUBCHANNEL_FIELDS:
            raise ScenarioError("unknown field", 'subchannels.' + key)
    arrays = {}
    for name in SUBCHANNEL_FIELDS:
        field = 'subchannels.' + name
        if name not in section:
            raise ScenarioError("missing array", field)
        if not isinstance(section[name], list) or len(section[name]) == 0:
            raise ScenarioError("must be a non-empty array", field)
        arrays[name] = section[name]

    count = len(arrays['gain_power'])
    for name in SUBCHANNEL_FIELDS:
        if len(arrays[name]) != count:
            raise ScenarioError("has {0} entries, expected {1}".format(
                len(arrays[name]), count), 'subchannels.' + name)

    subchannels = []
    for index in range(count):
        values = {}
        for name in SUBCHANNEL_FIELDS:
            field = 'subchannels.' + name
            if name in ('alpha', 'beta'):
                value = _number(arrays[name][index], field, index)
                if not 0 < value <= 0.5:
                    raise ScenarioError(
                        "{0} violates the convexity conditions 0 < {1} <= 1/2".format(
                            value, name), field, index)
            else:
                value = _number(arrays[name][index], field, index, minimum=0)
            values[name] = value
        subchannels.append(SubchannelParams(**values))
    return subchannels


def _groups(entries, count):
    from wbsense.api.optimization import PrimaryUserGroup
    from wbsense.api.utils.exceptions import ScenarioError

    if not isinstance(entries, list) or len(entries) == 0:
        raise ScenarioError("must be a non-empty array", 'groups')
    groups = []
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict) or set(entry) != {'members', 'epsilon'}:
            raise ScenarioError("must be an object with 'members' and 'epsilon'", 'groups', index)
        members = entry['members']
        if not isinstance(members, list) or len(members) == 0:
            raise ScenarioError("must be a non-empty array", 'groups.members', index)
        members = [_integer(member, 'groups.members', index, minimum=0) for member in members]
        if max(members) >= count:
            raise ScenarioError("references subchannel {0}, but there are only {1}".format(
                max(members), count), 'groups.members', index)
        if len(set(members)) != len(members):
            raise ScenarioError("members must be unique", 'groups.members', index)
        epsilon = _number(entry['epsilon'], 'groups.epsilon', index, minimum=0)
        groups.append(PrimaryUserGroup(members, epsilon))
    return groups


def _options(data, field, section, extra=()):
    """Check an option section against the keys of a parameter section."""
    import wbsense.api
    from wbsense.api.utils.exceptions import ScenarioError

    if field not in data:
        return {}
    options = data[field]
    if not isinstance(options, dict):
        raise ScenarioError("must be an object", field)
    known = set(getattr(wbsense.api.global_parameters, section)) | set(extra)
    for key in options:
        if key not in known:
            raise ScenarioError("unknown option", field + '.' + key)
    return dict(options)


def scenario_from_dict(data):
    """Create a Scenario from a dictionary in the scenario file layout.

    Raises
    ------
    wbsense.api.utils.ScenarioError
        If a field is missing, has the wrong type or violates an
        invariant of the problem data. The exception names the field and,
        for per-subchannel or per-group data, the index.

    """
    from wbsense.api.detection import NoiseModel
    from wbsense.api.optimization import ProblemSpec
    from wbsense.api.utils.exceptions import ScenarioError

    if not isinstance(data, dict):
        raise ScenarioError("a scenario must be a JSON object")
    for key in data:
        if key not in SCENARIO_FIELDS:
            raise ScenarioError("unknown field", key)

    noise = _section(data, 'noise')
    for key in noise:
        if key not in ('sigma_v2', 'samples_m'):
            raise ScenarioError("unknown field", 'noise.' + key)
    if 'sigma_v2' not in noise or 'samples_m' not in noise:
        raise ScenarioError("requires 'sigma_v2' and 'samples_m'", 'noise')
    sigma_v2 = _number(noise['sigma_v2'], 'noise.sigma_v2')
    if sigma_v2 <= 0:
        raise ScenarioError("must be positive", 'noise.sigma_v2')
    samples_m = _integer(noise['samples_m'], 'noise.samples_m', minimum=1)

    subchannels = _subchannels(_section(data, 'subchannels'))
    if 'groups' not in data:
        raise ScenarioError("missing section", 'groups')
    groups = _groups(data['groups'], len(subchannels))
    delta = _number(data.get('delta', 0.0), 'delta', minimum=0)

    solver = _options(data, 'solver', 'optimization')
    simulation = _options(data, 'simulation', 'simulation', SIMULATION_FIELDS)
    if 'trials' in simulation:
        _integer(simulation['trials'], 'simulation.trials', minimum=1)
    if 'seed' in simulation and simulation['seed'] is not None:
        _integer(simulation['seed'], 'simulation.seed', minimum=0)
    if 'occupancy' in simulation:
        bits = simulation['occupancy']
        if not isinstance(bits, list) or len(bits) != len(subchannels) \
                or any(bit not in (0, 1) for bit in bits):
            raise ScenarioError("must be an array of {0} zeros and ones".format(
                len(subchannels)), 'simulation.occupancy')

    spec = ProblemSpec(subchannels, NoiseModel(sigma_v2, samples_m), groups, delta)
    return Scenario(spec, solver, simulation)


def scenario_to_dict(scenario):
    """Return the dictionary of a Scenario (or ProblemSpec) in the file layout."""
    from wbsense.api.optimization import ProblemSpec

    if isinstance(scenario, ProblemSpec):
        scenario = Scenario(scenario)
    spec = scenario.spec
    data = {
        'noise': {'sigma_v2': spec.noise.sigma_v2, 'samples_m': spec.noise.samples_m},
        'subchannels': dict((name, [float(value) for value in getattr(spec, name)])
                            for name in SUBCHANNEL_FIELDS),
        'groups': [{'members': list(group.members), 'epsilon': group.epsilon}
                   for group in spec.groups],
        'delta': spec.delta,
    }
    if scenario.solver:
        data['solver'] = scenario.solver
    if scenario.simulation:
        data['simulation'] = scenario.simulation
    return data


def load_scenario(file_name):
    """Read a scenario file.

    Parameters
    ----------
    file_name : string
        Name of the JSON file.

    Returns
    -------
    scenario : wbsense.api.file_interfaces.Scenario

    Raises
    ------
    wbsense.api.utils.ScenarioParseError
        If the file cannot be read or is not valid JSON.
    wbsense.api.utils.ScenarioError
        If the content does not describe a valid problem.

    Examples
    --------
    To load the shipped eight-band system use

    >>> from wbsense.api.scenarios import eight_bands_path
    >>> scenario = load_scenario(eight_bands_path())

    """
    import json
    import wbsense.api
    from wbsense.api.utils.exceptions import ScenarioParseError

    try:
        with open(file_name) as f:
            data = json.load(f)
    except (IOError, OSError) as error:
        raise ScenarioParseError("cannot read {0}: {1}".format(file_name, error))
    except ValueError as error:
        raise ScenarioParseError("{0} is not valid JSON: {1}".format(file_name, error))
    scenario = scenario_from_dict(data)
    wbsense.api.LOGGER.info("Scenario: {0}. K = {1}, J = {2}".format(
        file_name, scenario.spec.num_subchannels, scenario.spec.num_groups))
    return scenario


def save_scenario(scenario, file_name):
    """Write a Scenario (or ProblemSpec) to a JSON file."""
    import json

    with open(file_name, 'w') as f:
        json.dump(scenario_to_dict(scenario), f, indent=2, sort_keys=True)
        f.write('\n')
