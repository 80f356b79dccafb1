"""Exceptions raised by wbsense."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class InfeasibleSubchannelError(DomainError):
    """The per-band constraints of a subchannel cannot be met.

    Raised when the false-alarm cap forces a threshold above the one
    allowed by the miss cap, i.e. ``gamma_min > gamma_max``.

    """

    def __init__(self, index, gamma_min, gamma_max):
        self.index = index
        self.gamma_min = gamma_min
        self.gamma_max = gamma_max
        where = "subchannel {0}".format(index) if index is not None else "subchannel"
        super(InfeasibleSubchannelError, self).__init__(
            "Infeasible {0}: gamma_min = {1:.6g} exceeds gamma_max = {2:.6g}.".format(
                where, gamma_min, gamma_max))


class ScenarioError(ValueError):
    """A scenario file cannot be parsed or does not validate."""

    def __init__(self, message, field=None, index=None):
        self.field = field
        self.index = index
        location = ""
        if field is not None:
            location = "[{0}".format(field)
            if index is not None:
                location += "[{0}]".format(index)
            location += "] "
        super(ScenarioError, self).__init__(location + message)


class ScenarioParseError(ScenarioError):
    """A scenario file cannot be read or is not well-formed JSON."""
