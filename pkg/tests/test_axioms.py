"""
Tests for the six primitive rules.
"""
import random
import unittest

import nose2

from tests.fixtures import random_table, suite_size


class TestAxioms(unittest.TestCase):

    def test_reflexivity(self):
        """
        XY -> X needs no premises.
        """
        from odengine.core import OrderDep
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        self.assertEqual(
            apply_axiom(Rule.REFLEXIVITY, {'X': ['A'], 'Y': ['B', 'C']}),
            OrderDep(['A', 'B', 'C'], ['A'])
        )

    def test_prefix(self):
        """
        X -> Y gives ZX -> ZY.
        """
        from odengine.core import OrderDep
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        self.assertEqual(
            apply_axiom(
                Rule.PREFIX, {'X': ['A'], 'Y': ['B'], 'Z': ['C']},
                [OrderDep(['A'], ['B'])],
            ),
            OrderDep(['C', 'A'], ['C', 'B'])
        )

    def test_normalization(self):
        """
        A repeated attribute can be dropped.
        """
        from odengine.core import OrderEquiv
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        self.assertEqual(
            apply_axiom(
                Rule.NORMALIZATION,
                {'W': ['A'], 'X': ['B'], 'Y': ['C'], 'V': ['D']},
            ),
            OrderEquiv(['A', 'B', 'C', 'B', 'D'], ['A', 'B', 'C', 'D'])
        )

    def test_transitivity_and_suffix(self):
        """
        Transitivity chains ODs; Suffix gives X <-> YX.
        """
        from odengine.core import OrderDep, OrderEquiv
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        premises = [OrderDep(['A'], ['B']), OrderDep(['B'], ['C'])]
        self.assertEqual(
            apply_axiom(
                Rule.TRANSITIVITY, {'X': ['A'], 'Y': ['B'], 'Z': ['C']}, premises
            ),
            OrderDep(['A'], ['C'])
        )
        self.assertEqual(
            apply_axiom(
                Rule.SUFFIX, {'X': ['income'], 'Y': ['bracket']},
                [OrderDep(['income'], ['bracket'])],
            ),
            OrderEquiv(['income'], ['bracket', 'income'])
        )

    def test_premises_by_atoms(self):
        """
        A premise may be supplied by any statement carrying its atoms.
        """
        from odengine.core import OrderDep, OrderEquiv
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        self.assertEqual(
            apply_axiom(
                Rule.SUFFIX, {'X': ['A'], 'Y': ['B']},
                [OrderEquiv(['A', 'A'], ['B'])],
            ),
            OrderEquiv(['A'], ['B', 'A'])
        )
        self.assertEqual(
            apply_axiom(
                Rule.TRANSITIVITY, {'X': ['A'], 'Y': ['B'], 'Z': ['C']},
                [OrderDep(['B'], ['C']), OrderDep(['A'], ['B'])],
            ),
            OrderDep(['A'], ['C'])
        )

    def test_chain(self):
        """
        Chain reads its number of links from the binding.
        """
        from odengine.axioms import Chain
        from odengine.core import OrderCompat
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        binding = {'X': ['A'], 'Y1': ['B'], 'Y2': ['C'], 'Z': ['D']}
        requirements, conclusion = Chain().instantiate(binding)
        self.assertEqual(len(requirements), 5)
        self.assertEqual(conclusion, OrderCompat(['A'], ['D']))
        self.assertEqual(
            apply_axiom(Rule.CHAIN, binding, requirements), OrderCompat(['A'], ['D'])
        )
        self.assertEqual(
            Chain().expected_variables({'X': [], 'Z': []}), ('X', 'Y1', 'Z')
        )

    def test_errors(self):
        """
        Missing premises and bad bindings name the failing slot.
        """
        from odengine.exceptions import RuleApplicationError
        from odengine.inference import apply_axiom
        from odengine.proofs import Rule

        def slot(rule, binding, premises=()):
            try:
                apply_axiom(rule, binding, premises)
            except RuleApplicationError as error:
                return error.slot
            self.fail("no error raised")

        self.assertEqual(
            slot(Rule.PREFIX, {'X': ['A'], 'Y': ['B'], 'Z': []}), 'premise 1'
        )
        self.assertEqual(slot(Rule.PREFIX, {'X': ['A'], 'Y': ['B']}), 'Z')
        self.assertEqual(
            slot(Rule.REFLEXIVITY, {'X': [], 'Y': [], 'Q': []}), 'Q'
        )
        self.assertEqual(slot(Rule.UNION, {}), 'rule')


class TestSoundness(unittest.TestCase):

    def test_random_instances(self):
        """
        Every random axiom instance is implied by its premises and holds
        on random tables that satisfy them.
        """
        from odengine.core import ConstraintSet
        from odengine.decide import decide
        from odengine.inference import random_instance
        from odengine.instances import holds
        from odengine.proofs import PRIMITIVE

        rng = random.Random(1)
        attrs = ['A', 'B', 'C', 'D', 'E']

        for rule in sorted(PRIMITIVE, key=lambda r: r.token):
            for _ in range(suite_size(400, 1667)):
                binding, premises, conclusion = random_instance(rule, rng, attrs)
                self.assertTrue(
                    decide(ConstraintSet(premises, attrs), conclusion),
                    (rule, binding)
                )

                for _ in range(suite_size(20, 100)):
                    table = random_table(rng, attrs, rows=3, high=1)
                    if all(holds(table, premise) for premise in premises):
                        self.assertTrue(holds(table, conclusion), (rule, binding))


if __name__ == '__main__':
    nose2.main()
