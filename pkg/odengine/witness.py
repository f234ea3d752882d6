"""
Building tables that satisfy a constraint set and falsify everything it
does not imply.

The table is assembled from blocks joined with append: a split block
for every attribute closure, a swap block for every pair of attributes
and maximal context, with constants projected out first and added back
as single-valued columns.
"""
from collections import namedtuple
from itertools import combinations
import logging

from odengine.core import (
    AttrSet, MarkedList, OrderCompat, OrderDep, canonical_lists,
)
from odengine.decide import Oracle, PairPattern, constants
from odengine.exceptions import ConstructionError, SchemaError, ValueTypeError
from odengine.inference import attribute_closure, functional_projection
from odengine.instances import TableInstance, holds
from odengine.settings import get_settings


__all__ = [
    'WitnessTable', 'MaximalContext', 'append', 'project_constants',
    'build_split_table', 'find_maximal_contexts', 'build_empty_context_swap',
    'build_swap_table', 'build_armstrong_table', 'BASE_CASE_ATTRS',
]


logger = logging.getLogger(__name__)


# universes this small are solved by trying small tables directly
BASE_CASE_ATTRS = 2


def _cells(table):
    return [value for values in table.tuples() for value in values]


def _require_integers(table):
    for name in table.columns:
        if table.tag(name) not in (None, 'int'):
            raise ValueTypeError(
                "column {0} holds text; append needs integer cells".format(name)
            )


def _shift(table, columns, offset):
    return [
        dict((name, row[name] + offset) for name in columns)
        for row in table.rows
    ]


def append(first, second):
    """
    Stack two integer tables over the same attributes so that every
    value of the second exceeds every value of the first: the first is
    shifted to start at 0 and the second to start just above it.
    """
    if first.schema != second.schema:
        raise SchemaError(
            "cannot append tables over {0} and {1}".format(
                first.schema, second.schema
            )
        )
    _require_integers(first)
    _require_integers(second)

    columns = first.columns
    first_cells = _cells(first)
    second_cells = _cells(second)

    lower = _shift(first, columns, -min(first_cells) if first_cells else 0)
    top = max(first_cells) - min(first_cells) if first_cells else -1
    upper = _shift(
        second, columns,
        top + 1 - min(second_cells) if second_cells else 0,
    )

    return TableInstance(columns, lower + upper)


class WitnessTable(object):
    """
    A table with provenance notes.

    table: The TableInstance.
    notes: (first_row, last_row, note) triples, 0-based and inclusive,
        naming the construction each block of rows came from.
    """
    def __init__(self, table, notes=()):
        self._table = table
        self._notes = tuple(notes)

    @classmethod
    def block(cls, table, note):
        notes = [(0, len(table) - 1, note)] if len(table) else []
        return cls(table, notes)

    @classmethod
    def empty(cls, columns):
        return cls(TableInstance(columns))

    @property
    def table(self):
        return self._table

    @property
    def notes(self):
        return self._notes

    def append(self, other):
        """
        append() of the two tables, with the notes of other moved down.
        """
        offset = len(self._table)
        notes = self._notes + tuple(
            (first + offset, last + offset, note)
            for first, last, note in other.notes
        )
        return WitnessTable(append(self._table, other.table), notes)

    def __len__(self):
        return len(self._table)

    def __repr__(self):
        return "WitnessTable({0!r}, {1} notes)".format(self._table, len(self._notes))


MaximalContext = namedtuple('MaximalContext', 'pair context lists')
MaximalContext.__doc__ = """
A largest set of non-constant attributes that, held equal, still lets
the pair swap.

pair: (a, b).
context: The AttrSet.
lists: (X, Y), the list split of the context under which XA ~ YB is
    not implied while XA ~ Y and X ~ YB are.
"""


def project_constants(m, settings=None):
    """
    The constants of m, and m with them removed everywhere.
    """
    fixed = constants(m, settings=settings)
    return fixed, m.project(fixed)


def _require_no_constants(m, settings):
    fixed = constants(m, settings=settings)
    if fixed:
        raise ConstructionError(
            "constant attribute(s) {0} must be projected out first".format(fixed)
        )


def build_split_table(m, settings=None):
    """
    One two-row block per attribute closure: both rows 0 on the closure,
    0 then 1 everywhere else. Blocks whose closure is the whole universe
    or repeats an earlier closure are left out.
    """
    _require_no_constants(m, settings)

    names = MarkedList(sorted(m.universe))
    fds = functional_projection(m)
    result = WitnessTable.empty(names)
    seen = set()

    for size in range(len(names) + 1):
        for chosen in combinations(names, size):
            closed = attribute_closure(chosen, fds)
            if closed == m.universe or closed in seen:
                continue
            seen.add(closed)

            block = TableInstance(names, [
                dict((name, 0) for name in names),
                dict((name, 0 if name in closed else 1) for name in names),
            ])
            result = result.append(WitnessTable.block(
                block, "split {0}+ = {1}".format(AttrSet(chosen), closed)
            ))

    logger.debug("split table: %d blocks", len(seen))
    return result


def find_maximal_contexts(m, a, b, settings=None):
    """
    The maximal contexts of the pair (a, b), largest first.

    A set V of non-constant attributes other than a and b is a context
    when, with W listing V, WA ~ WB is not implied (W A ~ W and
    W ~ W B always are). It is maximal when no larger context
    contains it.
    """
    m.require([a, b])
    oracle = Oracle(m, settings=settings)
    fixed = constants(m, settings=settings)
    others = sorted(m.universe - fixed - AttrSet([a, b]))

    found = []
    for size in range(len(others), -1, -1):
        for chosen in combinations(others, size):
            context = AttrSet(chosen)
            if any(context < larger.context for larger in found):
                continue

            listed = MarkedList(chosen)
            if not oracle.implies(OrderCompat(listed + [a], listed + [b])):
                found.append(MaximalContext((a, b), context, (listed, listed)))

    return found


def build_empty_context_swap(m, a, b, settings=None):
    """
    Two rows swapping a and b.

    Attributes reachable from b through implied single-attribute
    compatibilities follow b and everything else follows a: 0 in the
    first row, 1 in the second.
    """
    _require_no_constants(m, settings)
    oracle = Oracle(m, settings=settings)
    target = OrderCompat([a], [b])

    if oracle.implies(target):
        raise ConstructionError("{0} is implied; there is no swap".format(target))

    names = sorted(m.universe)
    linked = {}

    def _linked(x, y):
        key = (min(x, y), max(x, y))
        if key not in linked:
            linked[key] = oracle.implies(OrderCompat([x], [y]))
        return linked[key]

    def _reach(start):
        group, frontier = set([start]), [start]
        while frontier:
            current = frontier.pop()
            for name in names:
                if name not in group and _linked(current, name):
                    group.add(name)
                    frontier.append(name)
        return group

    with_a = _reach(a)
    if b in with_a:
        raise ConstructionError(
            "{0} and {1} are joined by a chain of compatibilities".format(a, b)
        )
    with_b = _reach(b)

    rows = ({}, {})
    for name in names:
        rows[0][name], rows[1][name] = (1, 0) if name in with_b else (0, 1)
    table = TableInstance(names, rows)

    if holds(table, target):
        raise ConstructionError("rows for {0} do not swap them".format(target))
    for dep in m:
        if not holds(table, dep):
            raise ConstructionError(
                "swap of {0} and {1} in the empty context violates {2}".format(
                    a, b, dep
                )
            )

    return table


class _Builder(object):
    """
    Shared state of one construction: settings and the tables already
    built for each constraint set.
    """
    def __init__(self, settings=None):
        self.settings = get_settings() if settings is None else settings
        self.memo = {}

    def armstrong(self, m, depth=0):
        key = m.fingerprint()
        if key in self.memo:
            return self.memo[key]

        if depth > len(m.universe):
            raise ConstructionError(
                "construction recursed {0} levels over {1} attributes".format(
                    depth, len(m.universe)
                )
            )

        fixed, projected = project_constants(m, settings=self.settings)
        if len(projected.universe) <= BASE_CASE_ATTRS:
            body = self.base_case(projected)
        else:
            body = self.split(projected).append(self.swap(projected, depth))

        table = body.table.with_constant_columns(
            dict((name, 0) for name in fixed)
        ).project(sorted(m.universe))
        result = WitnessTable(table, body.notes)

        logger.debug(
            "table for %d attributes (%d constant): %d rows",
            len(m.universe), len(fixed), len(table)
        )
        self.memo[key] = result
        return result

    def split(self, m):
        return build_split_table(m, settings=self.settings)

    def swap(self, m, depth=0):
        names = sorted(m.universe)
        result = WitnessTable.empty(names)

        for a, b in combinations(names, 2):
            for found in find_maximal_contexts(m, a, b, settings=self.settings):
                if found.context:
                    fixed = m.with_constants(found.context)
                    block = self.armstrong(fixed, depth + 1)
                    note = "swap {0},{1} in context {2}".format(a, b, found.context)
                    block = WitnessTable(block.table, [(0, len(block) - 1, note)])
                else:
                    block = WitnessTable.block(
                        build_empty_context_swap(m, a, b, settings=self.settings),
                        "swap {0},{1} in the empty context".format(a, b),
                    )
                result = result.append(block)

        return result

    def base_case(self, m):
        """
        Try single two-row patterns, then pairs of them appended, and
        keep the first that falsifies every OD m does not imply.
        """
        names = sorted(m.universe)
        oracle = Oracle(m, settings=self.settings)
        targets = [
            OrderDep(lhs, rhs)
            for lhs in canonical_lists(names, len(names))
            for rhs in canonical_lists(names, len(names))
            if not oracle.implies(OrderDep(lhs, rhs))
        ]
        blocks = [
            PairPattern.from_values(names, values).materialize()
            for values in oracle.models()
        ]

        def _complete(table):
            return not any(holds(table, od) for od in targets)

        for block in blocks:
            if _complete(block):
                return WitnessTable.block(block, "base case")

        for first, second in combinations(blocks, 2):
            joined = append(first, second)
            if _complete(joined):
                return WitnessTable.block(joined, "base case")

        result = WitnessTable.empty(names)
        for block in blocks:
            result = result.append(WitnessTable.block(block, "base case"))
        return result


def build_swap_table(m, settings=None):
    """
    The swap blocks for m, which must have no constants.
    """
    _require_no_constants(m, settings)
    return _Builder(settings).swap(m)


def build_armstrong_table(m, settings=None):
    """
    A table that satisfies m and falsifies every order dependency m
    does not imply.
    """
    return _Builder(settings).armstrong(m)
