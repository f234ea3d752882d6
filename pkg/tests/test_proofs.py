"""
Tests for proof objects and the proof checker.
"""
import unittest

import nose2


TRANSITIVE = """
1: od [A] -> [B] [Premise() {}]
2: od [B] -> [C] [Premise() {}]
3: od [A] -> [C] [Tran(1,2) {X=[A], Y=[B], Z=[C]}]
"""


def _store():
    from odengine.core import ConstraintSet, OrderDep

    return ConstraintSet([OrderDep(['A'], ['B']), OrderDep(['B'], ['C'])])


class TestProofObjects(unittest.TestCase):

    def test_rules(self):
        """
        Rule tokens, and which rules are primitive.
        """
        from odengine.exceptions import ShapeError
        from odengine.proofs import PRIMITIVE, Rule

        self.assertEqual(len(PRIMITIVE), 6)
        self.assertIs(Rule.from_token('Tran'), Rule.TRANSITIVITY)
        self.assertTrue(Rule.CHAIN.is_primitive)
        self.assertTrue(Rule.UNION.is_derived)
        self.assertFalse(Rule.PREMISE.is_derived)
        self.assertFalse(Rule.PREMISE.is_primitive)
        self.assertRaises(ShapeError, lambda: Rule.from_token('Magic'))

    def test_binding(self):
        """
        Bindings keep their order and hold MarkedLists.
        """
        from odengine.core import MarkedList
        from odengine.exceptions import ShapeError
        from odengine.proofs import Binding

        binding = Binding([('Y', ['B']), ('X', ['A', 'C'])])
        self.assertEqual(list(binding), ['Y', 'X'])
        self.assertIsInstance(binding['X'], MarkedList)
        self.assertEqual(str(binding), '{Y=[B], X=[A,C]}')
        self.assertEqual(str(Binding()), '{}')
        self.assertEqual(
            binding.substitute({'A': ['D', 'E']})['X'], MarkedList(['D', 'E', 'C'])
        )
        self.assertRaises(ShapeError, lambda: Binding({'1X': []}))

    def test_step_line(self):
        """
        Steps print in the trace format.
        """
        from odengine.core import OrderDep
        from odengine.proofs import ProofStep, Rule

        step = ProofStep(
            OrderDep(['A'], ['C']), Rule.TRANSITIVITY, [1, 2],
            {'X': ['A'], 'Y': ['B'], 'Z': ['C']},
        )
        self.assertEqual(
            step.line(3),
            '3: od [A] -> [C] [Tran(1,2) {X=[A], Y=[B], Z=[C]}]'
        )
        self.assertEqual(
            ProofStep(OrderDep(['A'], ['B']), Rule.PREMISE).line(1),
            '1: od [A] -> [B] [Premise() {}]'
        )

    def test_proof_shape(self):
        """
        Proofs are non-empty and default their goal to the last step.
        """
        from odengine.core import OrderDep
        from odengine.exceptions import ShapeError
        from odengine.proofs import Proof, ProofStep, Rule

        self.assertRaises(ShapeError, lambda: Proof([]))
        self.assertRaises(
            ShapeError, lambda: ProofStep('od [A] -> [B]', Rule.PREMISE)
        )

        proof = Proof([ProofStep(OrderDep(['A'], ['B']), Rule.PREMISE)])
        self.assertEqual(proof.goal, OrderDep(['A'], ['B']))
        self.assertEqual(proof.premises(), [OrderDep(['A'], ['B'])])
        self.assertEqual(proof.step(1).rule, Rule.PREMISE)


class TestCheckSteps(unittest.TestCase):

    def _check(self, text, m=None, goal=None):
        from odengine.axioms import axiom_for
        from odengine.dsl import parse_proof
        from odengine.proofs import check_steps

        return check_steps(
            _store() if m is None else m, parse_proof(text, goal), axiom_for
        )

    def test_valid(self):
        """
        A transitivity proof checks.
        """
        result = self._check(TRANSITIVE)
        self.assertTrue(result)
        self.assertEqual(str(result), 'VALID')

    def test_missing_premise(self):
        """
        A rule whose premises are not cited fails at that step.
        """
        result = self._check(TRANSITIVE.replace('Tran(1,2)', 'Tran(1)'))
        self.assertFalse(result)
        self.assertEqual(result.step, 3)
        self.assertIn('Tran: premise 2', result.reason)
        self.assertTrue(str(result).startswith('INVALID(step 3, '))

    def test_forward_citation(self):
        """
        Steps may only cite earlier steps.
        """
        result = self._check(TRANSITIVE.replace('Tran(1,2)', 'Tran(1,3)'))
        self.assertFalse(result)
        self.assertEqual(result.step, 3)

    def test_not_a_premise(self):
        """
        Premise steps must come from m.
        """
        from odengine.core import ConstraintSet, OrderDep

        result = self._check(
            TRANSITIVE, m=ConstraintSet([OrderDep(['A'], ['B'])], ['C'])
        )
        self.assertFalse(result)
        self.assertEqual(result.step, 2)

    def test_wrong_statement(self):
        """
        The statement must follow from the rule's conclusion.
        """
        result = self._check(TRANSITIVE.replace('3: od [A] -> [C]', '3: od [C] -> [A]'))
        self.assertFalse(result)
        self.assertEqual(result.step, 3)

    def test_goal_missed(self):
        """
        A valid proof of something else misses the goal.
        """
        from odengine.core import OrderDep

        result = self._check(TRANSITIVE, goal=OrderDep(['C'], ['A']))
        self.assertFalse(result)
        self.assertIsNone(result.step)
        self.assertTrue(str(result).startswith('INVALID(goal, '))

    def test_restate(self):
        """
        A step may restate what its cited steps establish.
        """
        text = TRANSITIVE + "4: od [A,A] -> [C,C] [Ref(3) {X=[], Y=[]}]\n"
        self.assertTrue(self._check(text))

        text = TRANSITIVE + "4: od [C] -> [A] [Ref(3) {X=[], Y=[]}]\n"
        self.assertFalse(self._check(text))

    def test_derived_rule_not_allowed(self):
        """
        The axiom checker refuses derived rules.
        """
        text = """
        1: od [A] -> [B] [Premise() {}]
        2: od [A,C] -> [B] [Aug(1) {X=[A], Y=[B], Z=[C]}]
        """
        result = self._check(text)
        self.assertFalse(result)
        self.assertIn('not allowed', result.reason)


if __name__ == '__main__':
    nose2.main()
