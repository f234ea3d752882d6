"""
Derived inference rules.

Each rule is a proof schema written over its own variables (the
attribute names in the trace are the variables), so applying it with a
binding substitutes lists for those names throughout. Before a derived
rule is trusted its trace is expanded into primitive steps and checked
against the six axioms.
"""
import logging

from odengine.axioms import RuleSchema, axiom_for
from odengine.core import ConstraintSet, OrderDep, OrderEquiv
from odengine.dsl import parse_proof
from odengine.exceptions import OdEngineError, RuleApplicationError
from odengine.proofs import (
    Binding, CheckResult, Proof, ProofStep, Rule, check_steps,
)


__all__ = [
    'DerivedRule', 'PermutationRule', 'DERIVED', 'derived_for',
    'is_trusted', 'validate', 'validate_all', 'expand', 'RESTATE',
]


logger = logging.getLogger(__name__)


# the binding of a step that only restates what its cited steps give
RESTATE = Binding([('X', []), ('Y', [])])


UNION = """
1: od [X] -> [Y] [Premise() {}]
2: od [X] -> [Z] [Premise() {}]
3: od [Y,X] -> [Y,Z] [Pref(2) {X=[X], Y=[Z], Z=[Y]}]
4: od [X] -> [Y,X] [Suf(1) {X=[X], Y=[Y]}]
5: od [X] -> [Y,Z] [Tran(3,4) {X=[X], Y=[Y,X], Z=[Y,Z]}]
"""

AUGMENTATION = """
1: od [X] -> [Y] [Premise() {}]
2: od [X,Z] -> [X] [Ref() {X=[X], Y=[Z]}]
3: od [X,Z] -> [Y] [Tran(1,2) {X=[X,Z], Y=[X], Z=[Y]}]
"""

SHIFT = """
1: oeq [W] <-> [V] [Premise() {}]
2: od [X] -> [Y] [Premise() {}]
3: od [V,X] -> [W] [Aug(1) {X=[V], Y=[W], Z=[X]}]
4: od [V,V,X] -> [V,W] [Pref(3) {X=[V,X], Y=[W], Z=[V]}]
5: oeq [V,V,X] <-> [V,X] [Norm() {W=[], X=[V], Y=[], V=[X]}]
6: od [V,X] -> [V,W] [Tran(4,5) {X=[V,X], Y=[V,V,X], Z=[V,W]}]
7: oeq [V,X] <-> [V,W,V,X] [Suf(6) {X=[V,X], Y=[V,W]}]
8: oeq [V,W,X] <-> [V,W,V,X] [Norm() {W=[], X=[V], Y=[W], V=[X]}]
9: oeq [V,X] <-> [V,W,X] [Tran(7,8) {X=[V,X], Y=[V,W,V,X], Z=[V,W,X]}]
10: od [W,X] -> [V] [Aug(1) {X=[W], Y=[V], Z=[X]}]
11: od [W,X] -> [V,W,X] [Suf(10) {X=[W,X], Y=[V]}]
12: od [W,X] -> [V,X] [Tran(9,11) {X=[W,X], Y=[V,W,X], Z=[V,X]}]
13: od [V,X] -> [V,Y] [Pref(2) {X=[X], Y=[Y], Z=[V]}]
14: od [W,X] -> [V,Y] [Tran(12,13) {X=[W,X], Y=[V,X], Z=[V,Y]}]
"""

DECOMPOSITION = """
1: od [X] -> [Z,Y] [Premise() {}]
2: od [Z,Y] -> [Z] [Ref() {X=[Z], Y=[Y]}]
3: od [X] -> [Z] [Tran(1,2) {X=[X], Y=[Z,Y], Z=[Z]}]
"""

REPLACE = """
1: oeq [M] <-> [N] [Premise() {}]
2: od [Z] -> [Z] [Ref() {X=[Z], Y=[]}]
3: od [M,Z] -> [N,Z] [Shift(1,2) {W=[M], V=[N], X=[Z], Y=[Z]}]
4: od [N,Z] -> [M,Z] [Shift(1,2) {W=[N], V=[M], X=[Z], Y=[Z]}]
5: od [X,M,Z] -> [X,N,Z] [Pref(3) {X=[M,Z], Y=[N,Z], Z=[X]}]
6: od [X,N,Z] -> [X,M,Z] [Pref(4) {X=[N,Z], Y=[M,Z], Z=[X]}]
7: oeq [X,M,Z] <-> [X,N,Z] [Tran(5,6) {X=[X,M,Z], Y=[X,N,Z], Z=[X,M,Z]}]
"""

ELIMINATE = """
1: od [X] -> [Y] [Premise() {}]
2: oeq [X] <-> [Y,X] [Suf(1) {X=[X], Y=[Y]}]
3: od [X,X] -> [X,Y,X] [Pref(2) {X=[X], Y=[Y,X], Z=[X]}]
4: oeq [X,X] <-> [X] [Norm() {W=[], X=[X], Y=[], V=[]}]
5: oeq [X,Y,X] <-> [X,Y] [Norm() {W=[], X=[X], Y=[Y], V=[]}]
6: od [X] -> [X,Y] [Tran(3,4,5) {X=[X], Y=[X,X], Z=[X,Y,X]}]
7: od [X,Y] -> [X] [Ref() {X=[X], Y=[Y]}]
8: oeq [X] <-> [X,Y] [Tran(6,7) {X=[X], Y=[X,Y], Z=[X]}]
9: oeq [M,X,N,Y,W] <-> [M,X,Y,N,Y,W] [Rep(8) {X=[M], M=[X], N=[X,Y], Z=[N,Y,W]}]
10: oeq [M,X,Y,N,Y,W] <-> [M,X,Y,N,W] [Norm() {W=[M,X], X=[Y], Y=[N], V=[W]}]
11: oeq [M,X,Y,N,W] <-> [M,X,N,W] [Rep(8) {X=[M], M=[X,Y], N=[X], Z=[N,W]}]
12: od [M,X,N,Y,W] -> [M,X,N,W] [Tran(9,10,11) {X=[M,X,N,Y,W], Y=[M,X,Y,N,Y,W], Z=[M,X,N,W]}]
13: od [M,X,N,W] -> [M,X,N,Y,W] [Tran(9,10,11) {X=[M,X,N,W], Y=[M,X,Y,N,Y,W], Z=[M,X,N,Y,W]}]
14: oeq [M,X,N,Y,W] <-> [M,X,N,W] [Ref(12,13) {X=[], Y=[]}]
"""

LEFT_ELIMINATE = """
1: od [X] -> [Y] [Premise() {}]
2: oeq [X] <-> [Y,X] [Suf(1) {X=[X], Y=[Y]}]
3: oeq [V,Y,X,Z] <-> [V,X,Z] [Rep(1,2) {X=[V], M=[Y,X], N=[X], Z=[Z]}]
"""

DROP = """
1: od [X] -> [V,Y,Z,W] [Premise() {}]
2: oeq [X] <-> [V] [Premise() {}]
3: od [V,Y,Z,W] -> [X,Y,Z,W] [Rep(2) {X=[], M=[V], N=[X], Z=[Y,Z,W]}]
4: od [X] -> [X,Y,Z,W] [Tran(1,3) {X=[X], Y=[V,Y,Z,W], Z=[X,Y,Z,W]}]
5: od [X] -> [X,Y] [Dec(4) {X=[X], Y=[Z,W], Z=[X,Y]}]
6: od [X,Z,W] -> [X,Y] [Aug(5) {X=[X], Y=[X,Y], Z=[Z,W]}]
7: oeq [X,Z,W] <-> [X,Y,X,Z,W] [Suf(6) {X=[X,Z,W], Y=[X,Y]}]
8: oeq [X,Y,X,Z,W] <-> [X,Y,Z,W] [Norm() {W=[], X=[X], Y=[Y], V=[Z,W]}]
9: oeq [X,Z,W] <-> [X,Y,Z,W] [Tran(7,8) {X=[X,Z,W], Y=[X,Y,X,Z,W], Z=[X,Y,Z,W]}]
10: od [X] -> [X,Z,W] [Tran(4,9) {X=[X], Y=[X,Y,Z,W], Z=[X,Z,W]}]
11: od [X,Z,W] -> [V,Z,W] [Rep(2) {X=[], M=[X], N=[V], Z=[Z,W]}]
12: od [X] -> [V,Z,W] [Tran(10,11) {X=[X], Y=[X,Z,W], Z=[V,Z,W]}]
13: od [X] -> [V,Z] [Dec(12) {X=[X], Y=[W], Z=[V,Z]}]
"""

PATH = """
1: od [X] -> [Y,W] [Premise() {}]
2: oeq [Y] <-> [V,M,N] [Premise() {}]
3: od [X] -> [Y] [Dec(1) {X=[X], Y=[W], Z=[Y]}]
4: od [X] -> [V,M,N] [Tran(2,3) {X=[X], Y=[Y], Z=[V,M,N]}]
5: od [X] -> [Y,V,M,N] [Union(3,4) {X=[X], Y=[Y], Z=[V,M,N]}]
6: oeq [Y,V,M,N] <-> [Y,V,M,N,M] [Norm() {W=[Y,V], X=[M], Y=[N], V=[]}]
7: od [X] -> [Y,V,M,N,M] [Tran(5,6) {X=[X], Y=[Y,V,M,N], Z=[Y,V,M,N,M]}]
8: oeq [Y,V,M,N,M] <-> [Y,M] [Elim(2) {M=[], X=[Y], N=[], Y=[V,M,N], W=[M]}]
9: od [X] -> [Y,M] [Tran(7,8) {X=[X], Y=[Y,V,M,N,M], Z=[Y,M]}]
10: od [X] -> [Y,M,Y,W] [Union(1,9) {X=[X], Y=[Y,M], Z=[Y,W]}]
11: oeq [Y,M,Y,W] <-> [Y,M,W] [Norm() {W=[], X=[Y], Y=[M], V=[W]}]
12: od [X] -> [Y,M,W] [Tran(10,11) {X=[X], Y=[Y,M,Y,W], Z=[Y,M,W]}]
"""

# the last step needs set(Y) = set(Z), so this trace is checked on a
# sample binding rather than over bare variables
PARTITION = """
1: od [X] -> [Y] [Premise() {}]
2: od [X] -> [Z] [Premise() {}]
3: oeq [X] <-> [Y,X] [Suf(1) {X=[X], Y=[Y]}]
4: od [X] -> [X] [Ref() {X=[X], Y=[]}]
5: od [X] -> [X,Y] [Union(1,4) {X=[X], Y=[X], Z=[Y]}]
6: oeq [X] <-> [X,Y,X] [Suf(5) {X=[X], Y=[X,Y]}]
7: od [X,Y] -> [Y,X] [Tran(3,6) {X=[X,Y], Y=[X], Z=[Y,X]}]
8: od [Y,X] -> [X,Y] [Tran(3,5) {X=[Y,X], Y=[X], Z=[X,Y]}]
9: oc [X] ~ [Y] [Ref(7,8) {X=[], Y=[]}]
10: oeq [X] <-> [Z,X] [Suf(2) {X=[X], Y=[Z]}]
11: od [X] -> [X,Z] [Union(2,4) {X=[X], Y=[X], Z=[Z]}]
12: oeq [X] <-> [X,Z,X] [Suf(11) {X=[X], Y=[X,Z]}]
13: od [X,Z] -> [Z,X] [Tran(10,12) {X=[X,Z], Y=[X], Z=[Z,X]}]
14: od [Z,X] -> [X,Z] [Tran(10,11) {X=[Z,X], Y=[X], Z=[X,Z]}]
15: oc [X] ~ [Z] [Ref(13,14) {X=[], Y=[]}]
16: od [X,Y] -> [X] [Ref() {X=[X], Y=[Y]}]
17: od [X,Z] -> [X] [Ref() {X=[X], Y=[Z]}]
18: od [X,Y] -> [X,Z] [Tran(11,16) {X=[X,Y], Y=[X], Z=[X,Z]}]
19: od [X,Z] -> [X,Y] [Tran(5,17) {X=[X,Z], Y=[X], Z=[X,Y]}]
20: oeq [X,Y] <-> [X,Z,X,Y] [Suf(18) {X=[X,Y], Y=[X,Z]}]
21: oeq [X,Z] <-> [X,Y,X,Z] [Suf(19) {X=[X,Z], Y=[X,Y]}]
22: od [X,Y,X,Z] -> [X,Y] [Tran(19,21) {X=[X,Y,X,Z], Y=[X,Z], Z=[X,Y]}]
23: od [X,Y,X,Z] -> [X,Z,X,Y] [Tran(20,22) {X=[X,Y,X,Z], Y=[X,Y], Z=[X,Z,X,Y]}]
24: od [X,Z,X,Y] -> [X,Z] [Tran(18,20) {X=[X,Z,X,Y], Y=[X,Y], Z=[X,Z]}]
25: od [X,Z,X,Y] -> [X,Y,X,Z] [Tran(21,24) {X=[X,Z,X,Y], Y=[X,Z], Z=[X,Y,X,Z]}]
26: oc [X,Y] ~ [X,Z] [Ref(23,25) {X=[], Y=[]}]
27: oc [Y] ~ [Z] [Chain(9,15,26) {X=[Y], Y1=[X], Z=[Z]}]
28: oeq [Y] <-> [Z] [Ref(27) {X=[], Y=[]}]
"""

DOWNWARD_CLOSURE = """
1: oc [X,Y] ~ [Z,V] [Premise() {}]
2: od [Z,V,X,Y] -> [Z] [Ref() {X=[Z], Y=[V,X,Y]}]
3: od [X,Y,Z,V] -> [Z] [Tran(1,2) {X=[X,Y,Z,V], Y=[Z,V,X,Y], Z=[Z]}]
4: od [X,Y,Z,V] -> [X] [Ref() {X=[X], Y=[Y,Z,V]}]
5: od [X,Y,Z,V] -> [X,Z] [Union(3,4) {X=[X,Y,Z,V], Y=[X], Z=[Z]}]
6: od [X,Y,Z,V] -> [Z,X] [Union(3,4) {X=[X,Y,Z,V], Y=[Z], Z=[X]}]
7: oc [X] ~ [Z] [Part(5,6) {X=[X,Y,Z,V], Y=[X,Z], Z=[Z,X]}]
"""

OD_COMPOSE = """
1: od [X] -> [X,Y] [Premise() {}]
2: oc [X] ~ [Y] [Premise() {}]
3: od [X] -> [Y,X] [Tran(1,2) {X=[X], Y=[X,Y], Z=[Y,X]}]
4: od [Y,X] -> [Y] [Ref() {X=[Y], Y=[X]}]
5: od [X] -> [Y] [Tran(3,4) {X=[X], Y=[Y,X], Z=[Y]}]
"""

OD_DECOMPOSE = """
1: od [X] -> [Y] [Premise() {}]
2: oeq [X] <-> [Y,X] [Suf(1) {X=[X], Y=[Y]}]
3: od [X] -> [X] [Ref() {X=[X], Y=[]}]
4: od [X] -> [X,Y] [Union(1,3) {X=[X], Y=[X], Z=[Y]}]
5: oeq [X] <-> [X,Y,X] [Suf(4) {X=[X], Y=[X,Y]}]
6: od [X,Y] -> [Y,X] [Tran(2,5) {X=[X,Y], Y=[X], Z=[Y,X]}]
7: od [Y,X] -> [X,Y] [Tran(2,4) {X=[Y,X], Y=[X], Z=[X,Y]}]
8: oc [X] ~ [Y] [Ref(6,7) {X=[], Y=[]}]
"""


def _substitute_proof(proof, values):
    """
    Instantiate a proof written over variables.
    """
    steps = [
        ProofStep(
            step.statement.substitute(values), step.rule, step.premises,
            step.binding.substitute(values),
        )
        for step in proof.steps
    ]
    return Proof(steps, proof.goal.substitute(values))


class DerivedRule(RuleSchema):
    """
    A rule justified by a proof trace over its variables.

    rule: The Rule it implements.
    variables: Its variable names (the attribute names of the trace).
    trace: The proof trace; its Premise steps are the rule's premises
        and its last statement is the conclusion.
    sample: A binding the trace is validated on, for rules whose
        side condition does not hold over bare variables.
    """
    def __init__(self, rule, variables, trace, sample=None):
        self.rule = rule
        self.variables = tuple(variables)
        self.trace = trace
        self.sample = sample
        self._template = None

    def template(self):
        if self._template is None:
            self._template = parse_proof(self.trace)
        return self._template

    def requirements(self, v):
        return [dep.substitute(v) for dep in self.template().premises()]

    def conclusion(self, v):
        return self.template().goal.substitute(v)

    def proof_for(self, binding):
        """
        The trace instantiated with a binding.
        """
        values = self.bind(binding)
        self.check_side_condition(values)
        return _substitute_proof(self.template(), values)

    def sample_proof(self):
        """
        The proof self-validation checks.
        """
        if self.sample is None:
            return self.template()
        return self.proof_for(Binding(self.sample))

    def apply(self, binding, premises):
        if not is_trusted(self.rule):
            raise RuleApplicationError(
                self.rule.token, 'schema', "rule failed self-validation"
            )
        return super(DerivedRule, self).apply(binding, premises)


class PartitionRule(DerivedRule):
    """
    X -> Y, X -> Z with set(Y) = set(Z)  gives  Y <-> Z
    """
    def check_side_condition(self, v):
        if set(v['Y']) != set(v['Z']):
            raise RuleApplicationError(
                self.rule.token, 'side-condition',
                "set({0}) differs from set({1})".format(v['Y'], v['Z'])
            )


class PermutationRule(DerivedRule):
    """
    X -> XY  gives  X' -> X'Y'  for lists X', Y' ordering the same
    sets as X and Y.

    The proof depends on the length of Y, so it is built per binding:
    each attribute of Y' is split off with Decomposition, Prefix,
    Normalization and Drop, and the pieces are joined with Union.
    """
    def __init__(self, sample):
        super(PermutationRule, self).__init__(
            Rule.PERMUTATION, ('X', 'Y', 'Xp', 'Yp'), None, sample=sample
        )

    def template(self):
        return self.proof_for(Binding(self.sample))

    def requirements(self, v):
        return [OrderDep(v['X'], v['X'] + v['Y'])]

    def conclusion(self, v):
        return OrderDep(v['Xp'], v['Xp'] + v['Yp'])

    def check_side_condition(self, v):
        for original, reordered in (('X', 'Xp'), ('Y', 'Yp')):
            if set(v[original]) != set(v[reordered]):
                raise RuleApplicationError(
                    self.rule.token, 'side-condition',
                    "{0}={1} does not reorder {2}={3}".format(
                        reordered, v[reordered], original, v[original]
                    )
                )

    def proof_for(self, binding):
        v = self.bind(binding)
        self.check_side_condition(v)
        x, y, xp, yp = v['X'], v['Y'], v['Xp'], v['Yp']

        steps = [ProofStep(OrderDep(x, x + y), Rule.PREMISE)]

        def _add(statement, rule, premises=(), **binding):
            steps.append(ProofStep(
                statement, rule, premises,
                Binding((name, binding[name]) for name in sorted(binding))
            ))
            return len(steps)

        targets = yp.canonical()
        if not targets:
            _add(OrderDep(xp, xp), Rule.REFLEXIVITY, X=xp, Y=[])
            return Proof(steps, self.conclusion(v))

        singles = []
        for attr in targets:
            k = y.index(attr) + 1
            head = y[:k]
            dec = _add(
                OrderDep(x, x + head), Rule.DECOMPOSITION, [1],
                X=x, Y=y[k:], Z=x + head,
            )
            pref = _add(
                OrderDep(xp + x, xp + x + head), Rule.PREFIX, [dec],
                X=x, Y=x + head, Z=xp,
            )
            norm = _add(
                OrderEquiv(xp + x, xp), Rule.NORMALIZATION,
                W=xp, X=[], Y=[], V=x,
            )
            norm_head = _add(
                OrderEquiv(xp + x + head, xp + head), Rule.NORMALIZATION,
                W=xp, X=[], Y=[], V=x + head,
            )
            longer = _add(
                OrderDep(xp, xp + x + head), Rule.TRANSITIVITY, [pref, norm],
                X=xp, Y=xp + x, Z=xp + x + head,
            )
            shorter = _add(
                OrderDep(xp, xp + head), Rule.TRANSITIVITY, [longer, norm_head],
                X=xp, Y=xp + x + head, Z=xp + head,
            )
            same = _add(OrderEquiv(xp, xp), Rule.REFLEXIVITY, X=xp, Y=[])
            singles.append(_add(
                OrderDep(xp, xp + [attr]), Rule.DROP, [shorter, same],
                X=xp, V=xp, Y=y[:k - 1], Z=[attr], W=[],
            ))

        joined = singles[0]
        for count in range(1, len(targets)):
            joined = _add(
                OrderDep(xp, xp + targets[:count + 1]), Rule.UNION,
                [joined, singles[count]],
                X=xp, Y=xp + targets[:count], Z=xp + targets[count:count + 1],
            )

        if targets != yp:
            _add(self.conclusion(v), Rule.REFLEXIVITY, [joined], X=[], Y=[])

        return Proof(steps, self.conclusion(v))


DERIVED = dict((schema.rule, schema) for schema in (
    DerivedRule(Rule.UNION, 'XYZ', UNION),
    DerivedRule(Rule.AUGMENTATION, 'XYZ', AUGMENTATION),
    DerivedRule(Rule.SHIFT, 'WVXY', SHIFT),
    DerivedRule(Rule.DECOMPOSITION, 'XYZ', DECOMPOSITION),
    DerivedRule(Rule.REPLACE, 'XMNZ', REPLACE),
    DerivedRule(Rule.ELIMINATE, 'MXNYW', ELIMINATE),
    DerivedRule(Rule.LEFT_ELIMINATE, 'VYXZ', LEFT_ELIMINATE),
    DerivedRule(Rule.DROP, 'XVYZW', DROP),
    DerivedRule(Rule.PATH, 'XYWVMN', PATH),
    PartitionRule(
        Rule.PARTITION, 'XYZ', PARTITION,
        sample={'X': ['A'], 'Y': ['B', 'C'], 'Z': ['C', 'B']},
    ),
    DerivedRule(Rule.DOWNWARD_CLOSURE, 'XYZV', DOWNWARD_CLOSURE),
    PermutationRule(
        sample={'X': ['A', 'B'], 'Y': ['C', 'D'], 'Xp': ['B', 'A'], 'Yp': ['D', 'C']},
    ),
    DerivedRule(Rule.OD_COMPOSE, 'XY', OD_COMPOSE),
    DerivedRule(Rule.OD_DECOMPOSE, 'XY', OD_DECOMPOSE),
))


def derived_for(rule):
    """
    The schema of a derived rule, or None.
    """
    return DERIVED.get(rule)


def _supplying(statement, cited, steps):
    """
    The new step numbers that establish a template premise: a single
    cited step when one suffices, else all of them.
    """
    needed = statement.atoms()

    for number in cited:
        if needed <= steps[number - 1].statement.atoms():
            return [number]

    supplied = set()
    for number in cited:
        supplied.update(steps[number - 1].statement.atoms())
    if needed <= supplied:
        return list(cited)

    raise RuleApplicationError(
        'Premise', str(statement), "no cited step supplies it"
    )


def expand(proof):
    """
    Inline every derived step of a proof, recursively, so that only
    Premise steps and the six axioms remain. A derived step whose
    statement differs from its rule's conclusion is followed by a
    restating Ref step.
    """
    steps = []
    numbering = {}

    for number, step in enumerate(proof.steps, 1):
        cited = sorted(set(
            new for old in step.premises for new in numbering[old]
        ))

        if not step.rule.is_derived:
            steps.append(ProofStep(step.statement, step.rule, cited, step.binding))
            numbering[number] = [len(steps)]
            continue

        inner = expand(DERIVED[step.rule].proof_for(step.binding))
        local = {}
        for inner_number, inner_step in enumerate(inner.steps, 1):
            if inner_step.rule is Rule.PREMISE:
                local[inner_number] = _supplying(inner_step.statement, cited, steps)
                continue

            refs = sorted(set(
                new for old in inner_step.premises for new in local[old]
            ))
            steps.append(ProofStep(
                inner_step.statement, inner_step.rule, refs, inner_step.binding
            ))
            local[inner_number] = [len(steps)]

        last = local[len(inner.steps)]
        if len(last) == 1 and steps[last[0] - 1].statement == step.statement:
            numbering[number] = last
        else:
            steps.append(ProofStep(
                step.statement, Rule.REFLEXIVITY, sorted(set(last + cited)),
                RESTATE,
            ))
            numbering[number] = [len(steps)]

    return Proof(steps, proof.goal)


# rule -> CheckResult of its self-validation; None while in progress
_VALIDATED = {}


def validate(rule):
    """
    Expand a derived rule's trace to primitive steps and check it.
    The result is cached; failures are logged once.
    """
    if rule in _VALIDATED and _VALIDATED[rule] is not None:
        return _VALIDATED[rule]

    _VALIDATED[rule] = None
    schema = DERIVED[rule]

    try:
        proof = schema.sample_proof()
        premises = ConstraintSet(proof.premises())
        result = check_steps(premises, expand(proof), axiom_for)
    except OdEngineError as error:
        result = CheckResult(False, None, str(error))

    if result:
        logger.debug("derived rule %s validated", rule.token)
    else:
        logger.warning(
            "derived rule %s failed self-validation: %s", rule.token, result
        )

    _VALIDATED[rule] = result
    return result


def is_trusted(rule):
    return bool(validate(rule))


def validate_all():
    """
    Validate every derived rule; returns {Rule: CheckResult}.
    """
    return dict((rule, validate(rule)) for rule in DERIVED)
