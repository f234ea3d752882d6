"""
Concrete tables, dependency checking on them, and split/swap violation
witnesses.
"""
from collections import namedtuple
from enum import Enum
import logging

import six

from odengine.core import (
    AttrSet, Comparison, MarkedList, lex_compare, value_tag,
)
from odengine.exceptions import SchemaError, ValueTypeError
from odengine.mixins import FrozenAttr
from odengine.settings import get_settings


__all__ = [
    'Row', 'TableInstance', 'ViolationKind', 'ViolationWitness', 'Holds',
    'HOLDS', 'holds', 'find_split', 'find_swap', 'classify_violation',
    'find_violation', 'row_order_violation',
]


logger = logging.getLogger(__name__)


class Row(FrozenAttr):
    """
    One tuple of a table: a read-only mapping from attribute to value.
    Cells can be read as attributes (row.A).
    """
    def __init__(self, cells=None):
        if cells is None:
            cells = {}
        cells = dict(cells)

        for value in cells.values():
            value_tag(value)

        self._setattr('_cells', cells)

    def _configuration(self):
        return None

    @classmethod
    def _constructor(cls, mapping, configuration):
        return cls(mapping)

    def __getitem__(self, key):
        return self._cells[key]

    def __len__(self):
        return len(self._cells)

    def __iter__(self):
        return iter(self._cells)

    def values_for(self, columns):
        """
        The cells of the given columns, as a tuple.
        """
        return tuple(self._cells[name] for name in columns)

    def __repr__(self):
        return six.u("Row({0!r})").format(self._cells)


class TableInstance(object):
    """
    A finite multiset of rows over an ordered header.

    columns: The attribute names in header order.
    rows: Rows (or mappings) with exactly one cell per column. Values
        within a column must share a tag (all int or all text).
    """
    def __init__(self, columns, rows=()):
        columns = MarkedList(columns)
        if not columns.is_canonical():
            raise SchemaError("duplicate column in header {0}".format(columns))

        schema = AttrSet(columns)
        tags = {}
        kept = []

        for index, row in enumerate(rows):
            if not isinstance(row, Row):
                row = Row(row)

            if set(row) != schema:
                raise SchemaError(
                    "row {index} has columns {found}, expected {expected}".format(
                        index=index, found=AttrSet(row), expected=schema
                    )
                )

            for name in columns:
                tag = value_tag(row[name])
                if tags.setdefault(name, tag) != tag:
                    raise ValueTypeError(
                        "column {name} mixes {first} and {second} values".format(
                            name=name, first=tags[name], second=tag
                        )
                    )

            kept.append(row)

        limit = get_settings().max_rows
        if len(kept) > limit:
            logger.warning(
                "table has %d rows, above the soft cap of %d; pairwise "
                "witness scans are quadratic", len(kept), limit
            )

        self._columns = columns
        self._schema = schema
        self._rows = tuple(kept)
        self._tags = tags

    @classmethod
    def from_tuples(cls, columns, tuples):
        """
        Build a table from a header and positional value tuples.
        """
        columns = MarkedList(columns)
        return cls(columns, (dict(zip(columns, values)) for values in tuples))

    @property
    def columns(self):
        return self._columns

    @property
    def schema(self):
        return self._schema

    @property
    def rows(self):
        return self._rows

    def tag(self, attr):
        """
        The value tag of a column ('int' or 'text'), or None for an
        empty table.
        """
        self.require([attr])
        return self._tags.get(attr)

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)

    def __getitem__(self, index):
        return self._rows[index]

    def __eq__(self, other):
        if not isinstance(other, TableInstance):
            return NotImplemented
        return self._columns == other._columns and self._rows == other._rows

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._columns, self._rows))

    def require(self, attrs):
        """
        Raise SchemaError unless every attribute is a column.
        """
        missing = AttrSet(attrs) - self._schema
        if missing:
            raise SchemaError(
                "attribute(s) {0} not in table schema {1}".format(
                    missing, self._schema
                )
            )

    def tuples(self):
        """
        The rows as value tuples in header order.
        """
        return [row.values_for(self._columns) for row in self._rows]

    def column_values(self, attr):
        self.require([attr])
        return [row[attr] for row in self._rows]

    def project(self, columns):
        """
        The table restricted to some columns (duplicates are kept).
        """
        columns = MarkedList(columns)
        self.require(columns)
        return TableInstance(
            columns,
            (dict((name, row[name]) for name in columns) for row in self._rows)
        )

    def with_constant_columns(self, values):
        """
        Add columns that hold one value in every row.

        values: A mapping from new column name to its value.
        """
        clash = AttrSet(values) & self._schema
        if clash:
            raise SchemaError("column(s) {0} already present".format(clash))

        columns = self._columns + sorted(values)
        return TableInstance(
            columns,
            (dict(row, **dict(values)) for row in self._rows)
        )

    def __repr__(self):
        return "TableInstance({columns}, {count} rows)".format(
            columns=self._columns, count=len(self._rows)
        )


class ViolationKind(Enum):
    SPLIT = 'split'
    SWAP = 'swap'


class ViolationWitness(
        namedtuple('ViolationWitness', 'kind first second rows')):
    """
    Two rows that violate a dependency.

    kind: ViolationKind.SPLIT (equal on X, not equal on Y) or
        ViolationKind.SWAP (X precedes, Y follows).
    first, second: The rows, oriented as described by kind.
    rows: Their 0-based indices in the table, in the same order.
    """
    __slots__ = ()

    def __str__(self):
        return "{kind} rows={rows}".format(
            kind=self.kind.value, rows=",".join(str(i) for i in self.rows)
        )


class Holds(object):
    """
    The classification of a dependency that is not violated.
    """
    __slots__ = ()

    def __bool__(self):
        return False

    __nonzero__ = __bool__

    def __repr__(self):
        return 'HOLDS'


HOLDS = Holds()


def _od_holds(table, lhs, rhs):
    """
    Sort by lhs, then check that rows tied on lhs tie on rhs and that
    rhs never decreases between consecutive lhs groups.
    """
    keyed = sorted(
        (row.values_for(lhs), row.values_for(rhs)) for row in table.rows
    )

    previous = None
    for lhs_key, rhs_key in keyed:
        if previous is not None:
            previous_lhs, previous_rhs = previous
            if lhs_key == previous_lhs:
                if rhs_key != previous_rhs:
                    return False
            elif rhs_key < previous_rhs:
                return False
        previous = (lhs_key, rhs_key)

    return True


def holds(table, dep):
    """
    Check whether a table satisfies a dependency.

    Every dependency is checked through its equivalent order
    dependencies.
    """
    table.require(dep.attributes())
    return all(_od_holds(table, od.lhs, od.rhs) for od in dep.order_deps())


def _pairs(table):
    rows = table.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            yield i, j


def find_split(table, x, y):
    """
    The first pair of rows (in row-index order) equal on x and not
    equal on y, or None when set(x) -> set(y) holds as an FD.
    """
    table.require(list(x) + list(y))
    rows = table.rows

    for i, j in _pairs(table):
        if (lex_compare(x, rows[i], rows[j]) is Comparison.EQUAL and
                lex_compare(y, rows[i], rows[j]) is not Comparison.EQUAL):
            return ViolationWitness(ViolationKind.SPLIT, rows[i], rows[j], (i, j))

    return None


def find_swap(table, x, y):
    """
    The first pair of rows (in row-index order) that is ascending on x
    and descending on y, oriented so the first row precedes on x. None
    when x and y are order compatible on the table.
    """
    table.require(list(x) + list(y))
    rows = table.rows

    for i, j in _pairs(table):
        on_x = lex_compare(x, rows[i], rows[j])
        if on_x is Comparison.EQUAL:
            continue
        on_y = lex_compare(y, rows[i], rows[j])

        if on_y is on_x.mirror():
            if on_x is Comparison.PRECEDES:
                return ViolationWitness(
                    ViolationKind.SWAP, rows[i], rows[j], (i, j)
                )
            return ViolationWitness(ViolationKind.SWAP, rows[j], rows[i], (j, i))

    return None


def classify_violation(table, od):
    """
    HOLDS when the table satisfies od (X -> Y); otherwise a split
    falsifying X -> XY or, failing that, a swap falsifying X ~ Y.
    """
    split = find_split(table, od.lhs, od.rhs)
    if split is not None:
        return split

    swap = find_swap(table, od.lhs, od.rhs)
    if swap is not None:
        return swap

    return HOLDS


def find_violation(table, dep):
    """
    The first violation of any order dependency equivalent to dep, or
    HOLDS.
    """
    table.require(dep.attributes())

    for od in dep.order_deps():
        outcome = classify_violation(table, od)
        if outcome is not HOLDS:
            return outcome

    return HOLDS


def row_order_violation(table, order):
    """
    The index of the first row that sorts after its successor on
    order, or None when the rows are already sorted by order.
    """
    table.require(order)
    rows = table.rows

    for index in range(len(rows) - 1):
        if lex_compare(order, rows[index], rows[index + 1]) is Comparison.FOLLOWS:
            return index

    return None
