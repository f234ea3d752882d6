"""
Runtime settings: built-in defaults, overridden by ODENGINE_* environment
variables, overridden by explicit keyword arguments.
"""
import os

from odengine.exceptions import SettingsError
from odengine.mixins import FrozenAttr


__all__ = ['DEFAULTS', 'ENVIRONMENT', 'LOG_LEVELS', 'Settings', 'get_settings']


DEFAULTS = {
    'max_attrs': 16,
    'max_rows': 5000,
    'search_depth': 6,
    'log_level': 'WARNING',
}

LOG_LEVELS = ('CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG')


def _log_level(raw):
    level = raw.upper()
    if level not in LOG_LEVELS:
        raise ValueError(raw)
    return level


# setting -> (environment variable, parser, what the parser accepts)
ENVIRONMENT = {
    'max_attrs': ('ODENGINE_MAX_ATTRS', int, "an integer"),
    'max_rows': ('ODENGINE_MAX_ROWS', int, "an integer"),
    'search_depth': ('ODENGINE_SEARCH_DEPTH', int, "an integer"),
    'log_level': (
        'ODENGINE_LOG_LEVEL', _log_level, "one of " + ", ".join(LOG_LEVELS)
    ),
}


class Settings(FrozenAttr):
    """
    An immutable settings mapping with attribute access
    (settings.max_attrs).
    """
    def __init__(self, values=None):
        values = dict(DEFAULTS if values is None else values)

        unknown = set(values) - set(DEFAULTS)
        if unknown:
            raise SettingsError(
                "unknown setting(s): {0}".format(", ".join(sorted(unknown)))
            )

        for key in ('max_attrs', 'max_rows', 'search_depth'):
            if key in values and values[key] < 1:
                raise SettingsError(
                    "{0} must be positive, got {1}".format(key, values[key])
                )

        self._setattr('_values', values)

    def _configuration(self):
        return None

    @classmethod
    def _constructor(cls, mapping, configuration):
        return cls(mapping)

    def __getitem__(self, key):
        return self._values[key]

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(sorted(self._values))

    def __repr__(self):
        return "Settings({0!r})".format(dict(self._values))


def _from_environment(environ):
    """
    Read the settings present in the environment.
    """
    found = {}

    for key, (variable, parse, expected) in ENVIRONMENT.items():
        raw = environ.get(variable)
        if raw is None or not raw.strip():
            continue

        try:
            found[key] = parse(raw.strip())
        except ValueError:
            raise SettingsError(
                "{variable} must be {expected}, got {raw!r}".format(
                    variable=variable, expected=expected, raw=raw
                )
            )

    return found


def get_settings(environ=None, **overrides):
    """
    Build the effective settings.

    environ: The environment mapping to read (defaults to os.environ).
    overrides: Settings that win over both defaults and environment.
        None values are ignored, so CLI options can be passed through
        unconditionally.
    """
    if environ is None:
        environ = os.environ

    explicit = dict(
        (key, value) for key, value in overrides.items() if value is not None
    )

    return Settings(DEFAULTS) + _from_environment(environ) + explicit
