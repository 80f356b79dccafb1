"""Nested parameter objects used to configure solvers and simulations."""


class ParameterSection(object):
    """A named group of options accessed as attributes.

    New options can only be created by the constructor. Assigning to an
    unknown option raises a ``ValueError`` so that typos in user code or
    scenario files are not silently ignored.

    """

    def __init__(self, name, **options):
        object.__setattr__(self, '_name', name)
        object.__setattr__(self, '_options', dict(options))

    def __getattr__(self, key):
        options = object.__getattribute__(self, '_options')
        if key in options:
            return options[key]
        raise AttributeError("Section '{0}' has no option '{1}'.".format(self._name, key))

    def __setattr__(self, key, value):
        if key not in self._options:
            raise ValueError("Section '{0}' has no option '{1}'.".format(self._name, key))
        self._options[key] = value

    def __iter__(self):
        return iter(sorted(self._options))

    def __repr__(self):
        items = ", ".join("{0}={1!r}".format(key, self._options[key]) for key in self)
        return "{0}({1})".format(self._name, items)

    def as_dict(self):
        """Return a plain dictionary with the options of the section."""
        return dict(self._options)

    def update(self, values):
        """Set several options from a dictionary."""
        for key, value in values.items():
            setattr(self, key, value)


class ParameterList(object):
    """Container of parameter sections.

    Sections are accessed as attributes, e.g.
    ``parameters.optimization.kkt_tolerance``.

    """

    def __init__(self, sections=None):
        object.__setattr__(self, '_sections', {})
        for section in sections or []:
            self._sections[section._name] = section

    def __getattr__(self, key):
        sections = object.__getattribute__(self, '_sections')
        if key in sections:
            return sections[key]
        raise AttributeError("ParameterList has no section '{0}'.".format(key))

    def __setattr__(self, key, value):
        raise ValueError("Sections of a ParameterList cannot be replaced. "
                         "Modify the options of '{0}' instead.".format(key))

    def __iter__(self):
        return iter(sorted(self._sections))

    def __repr__(self):
        return "ParameterList({0})".format(", ".join(repr(self._sections[name]) for name in self))

    def copy(self):
        """Return an independent copy of the parameters."""
        import copy
        return copy.deepcopy(self)

    def as_dict(self):
        """Return a nested dictionary of all options."""
        return dict((name, self._sections[name].as_dict()) for name in self)

    def update(self, values):
        """Apply nested overrides of the form ``{section: {option: value}}``."""
        for name, options in values.items():
            if name not in self._sections:
                raise ValueError("ParameterList has no section '{0}'.".format(name))
            if not isinstance(options, dict):
                raise ValueError("Options for section '{0}' must be a dictionary.".format(name))
            self._sections[name].update(options)

    def __deepcopy__(self, memo):
        import copy
        sections = [ParameterSection(name, **copy.deepcopy(self._sections[name].as_dict(), memo))
                    for name in self]
        return ParameterList(sections)
