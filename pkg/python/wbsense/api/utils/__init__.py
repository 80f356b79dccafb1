from .parameter_list import ParameterList, ParameterSection
from .exceptions import DomainError, InfeasibleSubchannelError, ScenarioError
from .exceptions import ScenarioParseError
