"""
Tests for tables and dependency checking on them.
"""
import random
import unittest

import nose2

from tests.fixtures import pair_table, random_dependency, random_table


class TestTableInstance(unittest.TestCase):

    def test_construction(self):
        """
        Rows are validated against the header.
        """
        from odengine.instances import TableInstance
        from odengine.exceptions import SchemaError, ValueTypeError

        table = TableInstance(['A', 'B'], [{'A': 1, 'B': 2}, {'A': 3, 'B': 4}])
        self.assertEqual(len(table), 2)
        self.assertEqual(table.tuples(), [(1, 2), (3, 4)])
        self.assertEqual(table.tag('A'), 'int')
        self.assertEqual(table[1].B, 4)

        self.assertRaises(SchemaError, lambda: TableInstance(['A', 'A']))
        self.assertRaises(
            SchemaError, lambda: TableInstance(['A', 'B'], [{'A': 1}])
        )
        self.assertRaises(
            ValueTypeError,
            lambda: TableInstance(['A'], [{'A': 1}, {'A': 'x'}])
        )

    def test_empty(self):
        """
        An empty table has no tags and satisfies everything.
        """
        from odengine.core import OrderDep
        from odengine.instances import TableInstance, holds

        table = TableInstance(['A', 'B'])
        self.assertIsNone(table.tag('A'))
        self.assertTrue(holds(table, OrderDep(['A'], ['B'])))

    def test_project_and_constant_columns(self):
        """
        Projection keeps duplicate rows; constant columns go at the end.
        """
        from odengine.exceptions import SchemaError
        from odengine.instances import TableInstance

        table = TableInstance.from_tuples(['A', 'B'], [(1, 2), (1, 3)])
        self.assertEqual(table.project(['A']).tuples(), [(1,), (1,)])
        self.assertEqual(table.column_values('B'), [2, 3])
        self.assertRaises(SchemaError, lambda: table.project(['C']))

        wider = table.with_constant_columns({'Z': 0, 'C': 5})
        self.assertEqual(list(wider.columns), ['A', 'B', 'C', 'Z'])
        self.assertEqual(wider.tuples(), [(1, 2, 5, 0), (1, 3, 5, 0)])
        self.assertRaises(
            SchemaError, lambda: table.with_constant_columns({'A': 0})
        )

    def test_rows_are_read_only(self):
        """
        Rows allow attribute reads but no assignment.
        """
        from odengine.instances import Row

        row = Row({'A': 1})
        self.assertEqual(row.A, 1)

        def assign():
            """
            Assign to a cell.
            """
            row.A = 2

        self.assertRaises(TypeError, assign)
        self.assertEqual((row + {'B': 2}).B, 2)


class TestHolds(unittest.TestCase):

    def test_order_dependencies(self):
        """
        The pair table is consistent with ABC -> FED and falsifies ABC -> FDE.
        """
        from odengine.core import OrderDep
        from odengine.instances import holds

        table = pair_table()
        self.assertTrue(holds(table, OrderDep(['A', 'B', 'C'], ['F', 'E', 'D'])))
        self.assertFalse(holds(table, OrderDep(['A', 'B', 'C'], ['F', 'D', 'E'])))

    def test_order_compatibility(self):
        """
        The pair table has AB ~ FC but not AC ~ FD.
        """
        from odengine.core import OrderCompat
        from odengine.instances import holds

        table = pair_table()
        self.assertTrue(holds(table, OrderCompat(['A', 'B'], ['F', 'C'])))
        self.assertFalse(holds(table, OrderCompat(['A', 'C'], ['F', 'D'])))

    def test_other_kinds(self):
        """
        FDs, constants and equivalences on a small table.
        """
        from odengine.core import Constant, FuncDep, OrderEquiv
        from odengine.instances import TableInstance, holds

        table = TableInstance.from_tuples(
            ['A', 'B', 'C'], [(1, 1, 0), (1, 1, 0), (2, 3, 0)]
        )
        self.assertTrue(holds(table, FuncDep(['A'], ['B'])))
        self.assertTrue(holds(table, Constant('C')))
        self.assertFalse(holds(table, Constant('A')))
        self.assertTrue(holds(table, OrderEquiv(['A'], ['B'])))

        table = TableInstance.from_tuples(['A', 'B'], [(1, 1), (1, 2)])
        self.assertFalse(holds(table, FuncDep(['A'], ['B'])))
        self.assertTrue(holds(table, FuncDep(['B'], ['A'])))

    def test_unknown_attribute(self):
        """
        Checking a dependency outside the schema is an error.
        """
        from odengine.core import OrderDep
        from odengine.exceptions import SchemaError
        from odengine.instances import holds

        self.assertRaises(
            SchemaError, lambda: holds(pair_table(), OrderDep(['A'], ['G']))
        )

    def test_text_columns(self):
        """
        Text compares by code point.
        """
        from odengine.core import OrderDep
        from odengine.instances import TableInstance, holds

        table = TableInstance.from_tuples(
            ['name', 'rank'], [('apple', 1), ('banana', 2), ('cherry', 3)]
        )
        self.assertTrue(holds(table, OrderDep(['name'], ['rank'])))
        self.assertTrue(holds(table, OrderDep(['rank'], ['name'])))

    def test_agrees_with_pairwise_definition(self):
        """
        holds() matches a direct check of every pair of rows.
        """
        from odengine.core import Comparison, lex_compare
        from odengine.instances import holds

        rng = random.Random(7)
        attrs = ['A', 'B', 'C']

        def pairwise(table, dep):
            for od in dep.order_deps():
                for s in table:
                    for t in table:
                        on_lhs = lex_compare(od.lhs, s, t)
                        on_rhs = lex_compare(od.rhs, s, t)
                        if on_lhs is not Comparison.FOLLOWS and \
                                on_rhs is Comparison.FOLLOWS:
                            return False
            return True

        for _ in range(300):
            table = random_table(rng, attrs)
            dep = random_dependency(rng, attrs)
            self.assertEqual(holds(table, dep), pairwise(table, dep), dep)


class TestViolations(unittest.TestCase):

    def test_swap(self):
        """
        The falsified pair table statements are swaps.
        """
        from odengine.core import OrderCompat, OrderDep
        from odengine.instances import (
            HOLDS, ViolationKind, classify_violation, find_swap,
            find_violation,
        )

        table = pair_table()

        found = classify_violation(table, OrderDep(['A', 'B', 'C'], ['F', 'D', 'E']))
        self.assertIs(found.kind, ViolationKind.SWAP)
        self.assertEqual(found.rows, (0, 1))
        self.assertEqual(str(found), 'swap rows=0,1')

        found = find_violation(table, OrderCompat(['A', 'C'], ['F', 'D']))
        self.assertIs(found.kind, ViolationKind.SWAP)

        found = find_swap(table, ['A', 'C'], ['F', 'D'])
        self.assertEqual(found.first['C'], 0)

        self.assertIs(
            find_violation(table, OrderDep(['A', 'B', 'C'], ['F', 'E', 'D'])), HOLDS
        )
        self.assertFalse(HOLDS)

    def test_swap_orientation(self):
        """
        A swap is reported with the row that precedes on x first.
        """
        from odengine.instances import TableInstance, find_swap

        table = TableInstance.from_tuples(['A', 'B'], [(2, 0), (1, 1)])
        found = find_swap(table, ['A'], ['B'])
        self.assertEqual(found.rows, (1, 0))
        self.assertEqual(found.first['A'], 1)

    def test_split(self):
        """
        Rows equal on x and different on y form a split.
        """
        from odengine.core import OrderDep
        from odengine.instances import (
            TableInstance, ViolationKind, find_split, find_violation,
        )

        table = TableInstance.from_tuples(
            ['A', 'B'], [(0, 0), (1, 0), (1, 1)]
        )
        found = find_violation(table, OrderDep(['A'], ['B']))
        self.assertIs(found.kind, ViolationKind.SPLIT)
        self.assertEqual(found.rows, (1, 2))
        self.assertIsNone(find_split(table, ['A', 'B'], ['A']))

    def test_row_order(self):
        """
        row_order_violation finds the first unsorted neighbour.
        """
        from odengine.instances import TableInstance, row_order_violation

        table = TableInstance.from_tuples(['A', 'B'], [(0, 1), (1, 0), (1, 2), (0, 0)])
        self.assertEqual(row_order_violation(table, ['A']), 2)
        self.assertIsNone(row_order_violation(table, []))
        self.assertEqual(row_order_violation(table, ['B']), 0)


if __name__ == '__main__':
    nose2.main()
