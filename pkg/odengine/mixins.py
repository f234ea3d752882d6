"""
Read-only attribute-style access for the small mappings odengine passes
around (rows, rule bindings, settings).
"""
from abc import ABCMeta, abstractmethod
from collections.abc import Mapping
import re

import six


__all__ = ['NAME_PATTERN', 'valid_name', 'FrozenAttr']


# attribute names in the constraint language, rule variables and setting
# keys all share this token rule
NAME_PATTERN = re.compile('^[A-Za-z][A-Za-z0-9_]*$')


def valid_name(key):
    """
    Check whether a key is a well-formed attribute or variable name.
    """
    return (
        isinstance(key, six.string_types) and
        NAME_PATTERN.match(key) is not None
    )


@six.add_metaclass(ABCMeta)
class FrozenAttr(Mapping):
    """
    A mixin class for an immutable mapping whose keys can be read as
    attributes.

    A key may be read as an attribute if:
     * It is a valid name (see NAME_PATTERN)
     * It doesn't start with an underscore and doesn't shadow a class
        attribute (e.g. 'get', 'items', 'keys', 'values').

    Instances cannot be modified; use + to build a new instance with
    some keys replaced.
    """
    @abstractmethod
    def _configuration(self):
        """
        All state, other than the mapping itself, that a copy needs.
        """

    @classmethod
    def _constructor(cls, mapping, configuration):
        """
        A standardized constructor used by FrozenAttr.

        mapping: The key-value pairs of the new instance.
        configuration: The return value of FrozenAttr._configuration
        """
        raise NotImplementedError("You need to implement this")

    def __getattr__(self, key):
        """
        Access an item as an attribute.
        """
        if key.startswith('_') or key not in self or not self._readable(key):
            raise AttributeError(
                "'{cls}' instance has no attribute '{name}'".format(
                    cls=self.__class__.__name__, name=key
                )
            )

        return self[key]

    def __setattr__(self, key, value):
        """
        Attributes are read-only.
        """
        raise TypeError(
            "'{cls}' does not allow attribute assignment.".format(
                cls=self.__class__.__name__
            )
        )

    def __delattr__(self, key):
        """
        Attributes are read-only.
        """
        raise TypeError(
            "'{cls}' does not allow attribute deletion.".format(
                cls=self.__class__.__name__
            )
        )

    def _setattr(self, key, value):
        """
        Set internal state during construction.
        """
        object.__setattr__(self, key, value)

    def __add__(self, other):
        """
        Build a new instance with other's keys replacing ours.

        other: A mapping.

        NOTE: Addition is not commutative. a + b != b + a.
        """
        if not isinstance(other, Mapping):
            return NotImplemented

        merged = dict(self)
        merged.update(other)

        return self._constructor(merged, self._configuration())

    def __radd__(self, other):
        """
        Build a new instance with our keys replacing other's.

        other: A mapping.
        """
        if not isinstance(other, Mapping):
            return NotImplemented

        merged = dict(other)
        merged.update(self)

        return self._constructor(merged, self._configuration())

    def __hash__(self):
        return hash(frozenset(self.items()))

    @classmethod
    def _readable(cls, key):
        """
        Check whether a key may be read as an attribute.
        """
        return valid_name(key) and not hasattr(cls, key)
