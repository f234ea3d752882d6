"""
Tables, stores and random generators shared by the tests.
"""
import os

from odengine.core import (
    ConstraintSet, FuncDep, MarkedList, OrderCompat, OrderDep, OrderEquiv,
)
from odengine.instances import TableInstance


PAIR_TABLE_TEXT = """A,B,C,D,E,F
3,2,0,4,7,9
3,2,1,3,8,9
"""

COLUMNS = ['A', 'B', 'C', 'D']

# set to run the randomized suites at full size
FULL_SUITE = bool(os.environ.get('ODENGINE_FULL_SUITE'))


def suite_size(quick, full):
    return full if FULL_SUITE else quick


def pair_table():
    """
    Two rows over A..F used throughout for single-pair checks.
    """
    return TableInstance.from_tuples(
        ['A', 'B', 'C', 'D', 'E', 'F'],
        [(3, 2, 0, 4, 7, 9), (3, 2, 1, 3, 8, 9)],
    )


def split_block():
    """
    Rows agreeing on A,B and split on C,D.
    """
    return TableInstance.from_tuples(COLUMNS, [(0, 0, 0, 0), (0, 0, 1, 1)])


def swap_block():
    """
    Rows swapping A and B.
    """
    return TableInstance.from_tuples(COLUMNS, [(0, 1, 0, 0), (1, 0, 0, 0)])


def appended_blocks():
    return TableInstance.from_tuples(
        COLUMNS,
        [(0, 0, 0, 0), (0, 0, 1, 1), (2, 3, 2, 2), (3, 2, 2, 2)],
    )


def calendar_store():
    """
    month orders quarter, over year, quarter and month.
    """
    return ConstraintSet(
        [OrderDep(['month'], ['quarter'])], ['year', 'quarter', 'month']
    )


def random_list(rng, attrs, max_len=2):
    return MarkedList(rng.choice(attrs) for _ in range(rng.randint(0, max_len)))


def random_dependency(rng, attrs, max_len=2):
    """
    A random OD, equivalence, compatibility or FD over attrs.
    """
    kind = rng.choice(['od', 'od', 'oeq', 'oc', 'fd'])
    lhs = random_list(rng, attrs, max_len)
    rhs = random_list(rng, attrs, max_len)

    if kind == 'od':
        return OrderDep(lhs, rhs)
    if kind == 'oeq':
        return OrderEquiv(lhs, rhs)
    if kind == 'oc':
        return OrderCompat(lhs, rhs)
    return FuncDep(lhs, rhs)


def random_constraints(rng, attrs, count=2, max_len=2):
    return ConstraintSet(
        [random_dependency(rng, attrs, max_len) for _ in range(count)], attrs
    )


def random_table(rng, attrs, rows=4, high=2):
    return TableInstance(
        attrs,
        [dict((name, rng.randint(0, high)) for name in attrs) for _ in range(rows)],
    )
