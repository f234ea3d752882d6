"""
The six primitive inference rules for order dependencies, as schemas
over list variables.
"""
import re

from odengine.core import MarkedList, OrderCompat, OrderDep, OrderEquiv
from odengine.exceptions import RuleApplicationError
from odengine.proofs import Rule, established_atoms


__all__ = [
    'RuleSchema', 'Reflexivity', 'Prefix', 'Normalization', 'Transitivity',
    'Suffix', 'Chain', 'AXIOMS', 'axiom_for',
]


class RuleSchema(object):
    """
    A rule written over list variables.

    Subclasses set rule and variables and implement requirements()
    and conclusion(), both taking a dict of variable -> MarkedList.
    """
    rule = None
    variables = ()

    def bind(self, binding):
        """
        Validate a binding against the schema's variables and return
        it as a plain dict.
        """
        expected = self.expected_variables(binding)

        for name in expected:
            if name not in binding:
                raise RuleApplicationError(
                    self.rule.token, name, "variable is not bound"
                )

        for name in binding:
            if name not in expected:
                raise RuleApplicationError(
                    self.rule.token, name, "not a variable of this rule"
                )

        return dict((name, MarkedList(binding[name])) for name in expected)

    def expected_variables(self, binding):
        return self.variables

    def requirements(self, values):
        """
        The premises the rule needs, instantiated.
        """
        return []

    def conclusion(self, values):
        raise NotImplementedError("You need to implement this")

    def check_side_condition(self, values):
        """
        Raise RuleApplicationError unless the binding meets conditions
        that relate the contents of lists.
        """

    def instantiate(self, binding):
        """
        (requirements, conclusion) under a binding, without premises.
        """
        values = self.bind(binding)
        self.check_side_condition(values)
        return self.requirements(values), self.conclusion(values)

    def apply(self, binding, premises):
        """
        Apply the rule: every requirement must be entailed by the atoms
        of the given premise statements. Returns the conclusion.
        """
        requirements, conclusion = self.instantiate(binding)
        supplied = established_atoms(premises)

        for index, required in enumerate(requirements, 1):
            if not required.atoms() <= supplied:
                raise RuleApplicationError(
                    self.rule.token,
                    "premise {0}".format(index),
                    "{0} is not among the cited statements".format(required)
                )

        return conclusion

    def __repr__(self):
        return "<{0} schema>".format(self.rule.token)


class Reflexivity(RuleSchema):
    """
    XY -> X
    """
    rule = Rule.REFLEXIVITY
    variables = ('X', 'Y')

    def conclusion(self, v):
        return OrderDep(v['X'] + v['Y'], v['X'])


class Prefix(RuleSchema):
    """
    X -> Y  gives  ZX -> ZY
    """
    rule = Rule.PREFIX
    variables = ('X', 'Y', 'Z')

    def requirements(self, v):
        return [OrderDep(v['X'], v['Y'])]

    def conclusion(self, v):
        return OrderDep(v['Z'] + v['X'], v['Z'] + v['Y'])


class Normalization(RuleSchema):
    """
    WXYXV <-> WXYV
    """
    rule = Rule.NORMALIZATION
    variables = ('W', 'X', 'Y', 'V')

    def conclusion(self, v):
        return OrderEquiv(
            v['W'] + v['X'] + v['Y'] + v['X'] + v['V'],
            v['W'] + v['X'] + v['Y'] + v['V'],
        )


class Transitivity(RuleSchema):
    """
    X -> Y, Y -> Z  gives  X -> Z
    """
    rule = Rule.TRANSITIVITY
    variables = ('X', 'Y', 'Z')

    def requirements(self, v):
        return [OrderDep(v['X'], v['Y']), OrderDep(v['Y'], v['Z'])]

    def conclusion(self, v):
        return OrderDep(v['X'], v['Z'])


class Suffix(RuleSchema):
    """
    X -> Y  gives  X <-> YX
    """
    rule = Rule.SUFFIX
    variables = ('X', 'Y')

    def requirements(self, v):
        return [OrderDep(v['X'], v['Y'])]

    def conclusion(self, v):
        return OrderEquiv(v['X'], v['Y'] + v['X'])


_CHAIN_LINK = re.compile('^Y([1-9][0-9]*)$')


class Chain(RuleSchema):
    """
    X ~ Y1, Yi ~ Yi+1 (i < n), Yn ~ Z and YiX ~ YiZ (all i)  gives  X ~ Z

    The number of links n is read from the binding: Y1 ... Yn must all
    be bound, with n >= 1.
    """
    rule = Rule.CHAIN

    def expected_variables(self, binding):
        links = set()
        for name in binding:
            match = _CHAIN_LINK.match(name)
            if match:
                links.add(int(match.group(1)))

        count = max(links) if links else 1
        return ('X',) + tuple('Y{0}'.format(i) for i in range(1, count + 1)) + ('Z',)

    @staticmethod
    def _links(v):
        return [v['Y{0}'.format(i)] for i in range(1, len(v) - 1)]

    def requirements(self, v):
        links = self._links(v)
        needed = [OrderCompat(v['X'], links[0])]
        for current, following in zip(links, links[1:]):
            needed.append(OrderCompat(current, following))
        needed.append(OrderCompat(links[-1], v['Z']))
        for link in links:
            needed.append(OrderCompat(link + v['X'], link + v['Z']))
        return needed

    def conclusion(self, v):
        return OrderCompat(v['X'], v['Z'])


AXIOMS = dict(
    (schema.rule, schema) for schema in (
        Reflexivity(), Prefix(), Normalization(), Transitivity(), Suffix(),
        Chain(),
    )
)


def axiom_for(rule):
    """
    The schema of a primitive rule, or None.
    """
    return AXIOMS.get(rule)
