"""
The errors raised by odengine.
"""


__all__ = [
    'OdEngineError', 'SchemaError', 'ValueTypeError', 'RuleApplicationError',
    'ShapeError', 'ResourceError', 'ConstructionError', 'DslSyntaxError',
    'TableFormatError', 'SettingsError',
]


class OdEngineError(Exception):
    """
    Base class for every error odengine raises on purpose.
    """


class SchemaError(OdEngineError, KeyError):
    """
    An attribute is unknown to a schema or universe, or two universes
    that should match do not.
    """
    def __str__(self):
        # KeyError would repr() the message
        return Exception.__str__(self)


class ValueTypeError(OdEngineError, TypeError):
    """
    An integer was compared with a text value.
    """


class RuleApplicationError(OdEngineError, ValueError):
    """
    A rule was applied with a binding or premises that do not fit its
    schema.

    slot: The schema slot that failed (a variable name, a premise
        description, or 'side-condition').
    """
    def __init__(self, rule, slot, message):
        super(RuleApplicationError, self).__init__(
            "{rule}: {slot}: {message}".format(
                rule=rule, slot=slot, message=message
            )
        )
        self.rule = rule
        self.slot = slot


class ShapeError(OdEngineError, ValueError):
    """
    A value does not have the structural shape an operation needs.
    """


class ResourceError(OdEngineError):
    """
    A problem is larger than the configured limits allow.
    """


class ConstructionError(OdEngineError):
    """
    A witness construction met a precondition that should have been
    ruled out by the caller.
    """


class SettingsError(OdEngineError, ValueError):
    """
    A setting or ODENGINE_* environment variable has an unusable value.
    """


class DslSyntaxError(OdEngineError, ValueError):
    """
    Malformed constraint, proof or binding text.

    line: 1-based line number.
    column: 1-based column number.
    """
    def __init__(self, message, line, column):
        super(DslSyntaxError, self).__init__(
            "line {line}, column {column}: {message}".format(
                line=line, column=column, message=message
            )
        )
        self.line = line
        self.column = column
        self.reason = message


class TableFormatError(OdEngineError, ValueError):
    """
    Malformed table text.

    line: 1-based line number (the header is line 1).
    column: The column name involved, if any.
    """
    def __init__(self, message, line, column=None):
        where = "line {0}".format(line)
        if column is not None:
            where += ", column {0}".format(column)
        super(TableFormatError, self).__init__(
            "{where}: {message}".format(where=where, message=message)
        )
        self.line = line
        self.column = column
