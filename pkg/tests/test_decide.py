"""
Tests for the two-row implication oracle.
"""
import random
import unittest

import nose2

from tests.fixtures import (
    calendar_store, random_constraints, random_dependency, random_table, suite_size,
)


class TestDecide(unittest.TestCase):

    def test_reduction_claim(self):
        """
        month -> quarter makes [year,quarter,month] and [year,month]
        equivalent.
        """
        from odengine.core import OrderEquiv
        from odengine.decide import decide

        verdict = decide(
            calendar_store(),
            OrderEquiv(['year', 'quarter', 'month'], ['year', 'month'])
        )
        self.assertTrue(verdict)
        self.assertEqual(str(verdict), 'IMPLIED')
        self.assertIsNone(verdict.counterexample)

    def test_counterexample(self):
        """
        The first failing pattern in Lt < Eq < Gt order is returned.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import Eq, Lt, decide
        from odengine.instances import holds

        m = ConstraintSet([OrderDep(['A'], ['B'])])
        goal = OrderDep(['B'], ['A'])
        verdict = decide(m, goal)

        self.assertFalse(verdict)
        self.assertEqual(str(verdict), 'NOT-IMPLIED')
        self.assertEqual(verdict.pattern['A'], Lt)
        self.assertEqual(verdict.pattern['B'], Eq)
        self.assertEqual(str(verdict.pattern), 'A=Lt,B=Eq')
        self.assertEqual(verdict.counterexample.tuples(), [(0, 0), (1, 0)])
        self.assertTrue(holds(verdict.counterexample, OrderDep(['A'], ['B'])))
        self.assertFalse(holds(verdict.counterexample, goal))

    def test_unmentioned_goal_attributes(self):
        """
        Goal attributes outside m are unconstrained.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import decide

        m = ConstraintSet([OrderDep(['A'], ['B'])])
        self.assertTrue(decide(m, OrderDep(['C', 'A'], ['C', 'B'])))
        self.assertFalse(decide(m, OrderDep(['A'], ['C'])))

    def test_constants(self):
        """
        [] -> [A] makes A constant.
        """
        from odengine.core import AttrSet, ConstraintSet, Constant, OrderDep
        from odengine.decide import constants, decide, is_constant

        m = ConstraintSet([OrderDep([], ['A']), OrderDep(['B'], ['C'])])
        self.assertTrue(decide(m, Constant('A')))
        self.assertTrue(is_constant(m, 'A'))
        self.assertFalse(is_constant(m, 'B'))
        self.assertEqual(constants(m), AttrSet(['A']))

    def test_equivalent_sets(self):
        """
        An equivalence is the same as its two ODs.
        """
        from odengine.core import ConstraintSet, OrderDep, OrderEquiv
        from odengine.decide import equivalent_sets
        from odengine.exceptions import SchemaError

        first = ConstraintSet([OrderEquiv(['A'], ['B'])])
        second = ConstraintSet([OrderDep(['A'], ['B']), OrderDep(['B'], ['A'])])
        third = ConstraintSet([OrderDep(['A'], ['B'])])

        self.assertTrue(equivalent_sets(first, second))
        self.assertFalse(equivalent_sets(first, third))
        self.assertRaises(
            SchemaError,
            lambda: equivalent_sets(first, ConstraintSet([], ['A']))
        )

    def test_closure(self):
        """
        Every implied OD between short lists, and nothing else.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import closure

        m = ConstraintSet([OrderDep(['A'], ['B'])])
        expected = set([
            OrderDep([], []), OrderDep(['A'], []), OrderDep(['B'], []),
            OrderDep(['A'], ['A']), OrderDep(['B'], ['B']),
            OrderDep(['A'], ['B']),
        ])
        self.assertEqual(closure(m, 1), expected)

    def test_resource_cap(self):
        """
        Universes above max_attrs are refused.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import decide
        from odengine.exceptions import ResourceError
        from odengine.settings import get_settings

        settings = get_settings(environ={}, max_attrs=2)
        m = ConstraintSet([OrderDep(['A'], ['B', 'C'])])
        self.assertRaises(
            ResourceError,
            lambda: decide(m, OrderDep(['A'], ['B']), settings=settings)
        )

    def test_goal_outside_oracle_universe(self):
        """
        An Oracle only answers goals inside its universe.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import Oracle
        from odengine.exceptions import SchemaError

        oracle = Oracle(ConstraintSet([OrderDep(['A'], ['B'])]))
        self.assertRaises(SchemaError, lambda: oracle.decide(OrderDep(['C'], ['A'])))

    def test_pruned_search_agrees(self):
        """
        Large universes use the per-goal search; it gives the same
        answers as full enumeration.
        """
        from odengine.core import ConstraintSet, OrderDep
        from odengine.decide import CACHE_LIMIT, Oracle

        attrs = ['A{0}'.format(i) for i in range(CACHE_LIMIT + 1)]
        m = ConstraintSet([
            OrderDep([attrs[i]], [attrs[i + 1]]) for i in range(len(attrs) - 1)
        ])
        oracle = Oracle(m)

        self.assertTrue(oracle.implies(OrderDep([attrs[0]], [attrs[-1]])))
        verdict = oracle.decide(OrderDep([attrs[-1]], [attrs[0]]))
        self.assertFalse(verdict)
        self.assertIsNone(oracle._models)


class TestPatterns(unittest.TestCase):

    def test_eval_on_pattern(self):
        """
        A pattern satisfies a dependency in both pair orders or not at all.
        """
        from odengine.core import OrderCompat, OrderDep
        from odengine.decide import Eq, Gt, Lt, PairPattern, eval_on_pattern
        from odengine.exceptions import SchemaError

        pattern = PairPattern({'A': Lt, 'B': Gt, 'C': Eq})
        self.assertFalse(eval_on_pattern(OrderDep(['A'], ['B']), pattern))
        self.assertTrue(eval_on_pattern(OrderDep(['A'], ['C']), pattern))
        self.assertFalse(eval_on_pattern(OrderCompat(['A'], ['B']), pattern))
        self.assertTrue(eval_on_pattern(OrderDep(['C', 'B'], ['B']), pattern))
        self.assertRaises(
            SchemaError, lambda: eval_on_pattern(OrderDep(['D'], []), pattern)
        )

    def test_materialize(self):
        """
        Lt, Eq and Gt become (0,1), (0,0) and (1,0).
        """
        from odengine.decide import PairPattern

        table = PairPattern.from_values(['C', 'A', 'B'], (-1, 0, 1)).materialize()
        self.assertEqual(list(table.columns), ['A', 'B', 'C'])
        self.assertEqual(table.tuples(), [(0, 0, 1), (1, 0, 0)])

    def test_models(self):
        """
        With no constraints every pattern is a model.
        """
        from odengine.core import ConstraintSet
        from odengine.decide import Oracle

        self.assertEqual(len(Oracle(ConstraintSet([], ['A', 'B'])).models()), 9)


class TestOracleConsistency(unittest.TestCase):

    def test_counterexamples_verify(self):
        """
        Counterexamples satisfy m and falsify the goal; implied goals
        hold on random tables satisfying m.
        """
        from odengine.decide import decide
        from odengine.instances import holds

        rng = random.Random(2016)
        attrs = ['A', 'B', 'C', 'D']

        for _ in range(suite_size(300, 1000)):
            m = random_constraints(rng, attrs, count=rng.randint(1, 3))
            goal = random_dependency(rng, attrs)
            verdict = decide(m, goal)

            if not verdict:
                table = verdict.counterexample
                self.assertEqual(len(table), 2)
                for dep in m:
                    self.assertTrue(holds(table, dep), (dep, goal))
                self.assertFalse(holds(table, goal), goal)
                continue

            for _ in range(suite_size(50, 1000)):
                table = random_table(rng, attrs)
                if all(holds(table, dep) for dep in m):
                    self.assertTrue(holds(table, goal), (m, goal))


if __name__ == '__main__':
    nose2.main()
