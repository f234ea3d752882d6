"""
Proof objects: rule identifiers, variable bindings, steps, and the
step-by-step checker shared by the axioms and the derived rules.
"""
from collections import namedtuple
from enum import Enum

import six

from odengine.core import Dependency, MarkedList
from odengine.exceptions import RuleApplicationError, ShapeError
from odengine.mixins import FrozenAttr, valid_name


__all__ = [
    'Rule', 'PRIMITIVE', 'Binding', 'ProofStep', 'Proof', 'CheckResult',
    'established_atoms', 'check_steps',
]


class Rule(Enum):
    """
    Every rule a proof step may cite, by its trace token.
    """
    PREMISE = 'Premise'
    REFLEXIVITY = 'Ref'
    PREFIX = 'Pref'
    NORMALIZATION = 'Norm'
    TRANSITIVITY = 'Tran'
    SUFFIX = 'Suf'
    CHAIN = 'Chain'
    UNION = 'Union'
    AUGMENTATION = 'Aug'
    SHIFT = 'Shift'
    DECOMPOSITION = 'Dec'
    REPLACE = 'Rep'
    ELIMINATE = 'Elim'
    LEFT_ELIMINATE = 'LeftElim'
    DROP = 'Drop'
    PATH = 'Path'
    PARTITION = 'Part'
    DOWNWARD_CLOSURE = 'DownClosure'
    PERMUTATION = 'Perm'
    OD_COMPOSE = 'OdCompose'
    OD_DECOMPOSE = 'OdDecompose'

    @property
    def token(self):
        return self.value

    @property
    def is_primitive(self):
        return self in PRIMITIVE

    @property
    def is_derived(self):
        return self is not Rule.PREMISE and self not in PRIMITIVE

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token)
        except ValueError:
            raise ShapeError("unknown rule {0!r}".format(token))


PRIMITIVE = frozenset([
    Rule.REFLEXIVITY, Rule.PREFIX, Rule.NORMALIZATION, Rule.TRANSITIVITY,
    Rule.SUFFIX, Rule.CHAIN,
])


class Binding(FrozenAttr):
    """
    A substitution of lists for rule variables (X, Y, Y1, ...).
    Variables keep the order they were given in, for formatting.
    """
    def __init__(self, items=None):
        if items is None:
            items = ()
        elif hasattr(items, 'items'):
            items = items.items()

        values = []
        for name, value in items:
            if not valid_name(name):
                raise ShapeError("invalid rule variable {0!r}".format(name))
            values.append((name, MarkedList(value)))

        self._setattr('_values', dict(values))
        self._setattr('_order', tuple(name for name, _ in values))

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
        seen = set()
        for name in self._order:
            if name not in seen:
                seen.add(name)
                yield name

    def substitute(self, mapping):
        """
        Replace symbols inside every bound list (used when a rule
        schema written over symbols is instantiated).
        """
        return Binding(
            (name, self[name].substitute(mapping)) for name in self
        )

    def __str__(self):
        return "{{{0}}}".format(
            ", ".join("{0}={1}".format(name, self[name]) for name in self)
        )

    def __repr__(self):
        return six.u("Binding({0})").format(str(self))


class ProofStep(namedtuple('ProofStep', 'statement rule premises binding')):
    """
    One line of a proof.

    statement: The Dependency this step establishes.
    rule: The Rule it cites.
    premises: 1-based numbers of the earlier steps it cites.
    binding: The Binding of the rule's variables.
    """
    __slots__ = ()

    def __new__(cls, statement, rule, premises=(), binding=None):
        if not isinstance(statement, Dependency):
            raise ShapeError(
                "a proof step states a Dependency, not {0!r}".format(statement)
            )
        if binding is None:
            binding = Binding()
        elif not isinstance(binding, Binding):
            binding = Binding(binding)

        return super(ProofStep, cls).__new__(
            cls, statement, rule, tuple(int(p) for p in premises), binding
        )

    def line(self, number):
        """
        The trace line for this step:
        k: od [A] -> [B] [Tran(1,2) {X=[A], Y=[C], Z=[B]}]
        """
        return "{number}: {statement} [{rule}({premises}) {binding}]".format(
            number=number,
            statement=self.statement,
            rule=self.rule.token,
            premises=",".join(str(p) for p in self.premises),
            binding=self.binding,
        )


class Proof(object):
    """
    A non-empty sequence of steps and the goal it is meant to prove
    (the last statement, unless given).
    """
    def __init__(self, steps, goal=None):
        steps = tuple(steps)
        if not steps:
            raise ShapeError("a proof needs at least one step")

        self._steps = steps
        self._goal = steps[-1].statement if goal is None else goal

    @property
    def steps(self):
        return self._steps

    @property
    def goal(self):
        return self._goal

    def step(self, number):
        """
        The step with the given 1-based number.
        """
        return self._steps[number - 1]

    def premises(self):
        """
        The statements of the Premise steps, in order.
        """
        return [s.statement for s in self._steps if s.rule is Rule.PREMISE]

    def rules(self):
        return set(s.rule for s in self._steps)

    def __len__(self):
        return len(self._steps)

    def __iter__(self):
        return iter(self._steps)

    def __eq__(self, other):
        if not isinstance(other, Proof):
            return NotImplemented
        return self._steps == other._steps and self._goal == other._goal

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __str__(self):
        return "\n".join(
            step.line(number) for number, step in enumerate(self._steps, 1)
        )

    def __repr__(self):
        return "Proof({count} steps, goal={goal})".format(
            count=len(self._steps), goal=self._goal
        )


class CheckResult(namedtuple('CheckResult', 'valid step reason')):
    """
    The outcome of checking a proof. Falsy when invalid, in which case
    step is the 1-based number of the first bad step (or None when
    only the goal is missed) and reason says what is wrong.
    """
    __slots__ = ()

    def __bool__(self):
        return self.valid

    __nonzero__ = __bool__

    def __str__(self):
        if self.valid:
            return 'VALID'
        if self.step is None:
            return "INVALID(goal, {0})".format(self.reason)
        return "INVALID(step {0}, {1})".format(self.step, self.reason)


VALID = CheckResult(True, None, None)


def established_atoms(statements):
    """
    The union of the atoms of some statements.
    """
    atoms = set()
    for statement in statements:
        atoms.update(statement.atoms())
    return atoms


def check_steps(m, proof, schema_for):
    """
    Check a proof against the constraint set m.

    schema_for: Maps a Rule to the schema object that applies it (see
        odengine.axioms); returns None for rules that are not allowed.

    A Premise step must restate (part of) one dependency of m. Any
    other step must cite only earlier steps, the cited statements must
    supply every premise the rule needs under the binding, and each
    atom of the statement must follow from the rule's conclusion or
    from the cited statements. The goal is reached when its atoms are
    among those of the last step.
    """
    premise_atoms = [dep.atoms() for dep in m]
    steps = proof.steps

    for number, step in enumerate(steps, 1):
        stated = step.statement.atoms()

        for cited in step.premises:
            if not 1 <= cited < number:
                return CheckResult(
                    False, number,
                    "cites step {0}, which is not an earlier step".format(cited)
                )

        if step.rule is Rule.PREMISE:
            if not any(stated <= atoms for atoms in premise_atoms):
                return CheckResult(
                    False, number,
                    "{0} is not a premise".format(step.statement)
                )
            continue

        schema = schema_for(step.rule)
        if schema is None:
            return CheckResult(
                False, number,
                "rule {0} is not allowed here".format(step.rule.token)
            )

        cited = [steps[p - 1].statement for p in step.premises]
        try:
            conclusion = schema.apply(step.binding, cited)
        except RuleApplicationError as error:
            return CheckResult(False, number, str(error))

        if not stated <= conclusion.atoms() | established_atoms(cited):
            return CheckResult(
                False, number,
                "{statement} does not follow from {rule} concluding "
                "{conclusion}".format(
                    statement=step.statement, rule=step.rule.token,
                    conclusion=conclusion,
                )
            )

    if not proof.goal.atoms() <= steps[-1].statement.atoms():
        return CheckResult(
            False, None,
            "last step {0} does not establish {1}".format(
                steps[-1].statement, proof.goal
            )
        )

    return VALID
