"""
Reasoning with proofs: applying rules, checking and expanding proofs,
searching for them, and moving between FDs and ODs.
"""
from collections import namedtuple
import logging

from odengine.axioms import AXIOMS, axiom_for
from odengine.core import (
    AttrSet, Constant, FuncDep, MarkedList, OrderCompat, OrderDep,
    OrderEquiv, canonical_lists,
)
from odengine.derived import (
    DERIVED, RESTATE, derived_for, expand, validate_all,
)
from odengine.exceptions import RuleApplicationError, ShapeError
from odengine.proofs import (
    Binding, CheckResult, Proof, ProofStep, Rule, check_steps,
)
from odengine.settings import get_settings


__all__ = [
    'apply_axiom', 'apply_derived', 'schema_for', 'check_proof',
    'expand_proof', 'validate_all', 'SearchStats', 'ProofSearch',
    'search_proof', 'fd_to_od', 'od_to_fd', 'attribute_closure',
    'functional_projection', 'fd_implied', 'random_instance', 'CheckResult',
]


logger = logging.getLogger(__name__)


def _binding(binding):
    if isinstance(binding, Binding):
        return binding
    return Binding(binding)


def apply_axiom(rule, binding, premises=()):
    """
    Apply one of the six primitive rules.

    rule: A primitive Rule.
    binding: A Binding (or a mapping of variable -> list of names).
    premises: The statements the rule's premises are read from.
    """
    schema = axiom_for(rule)
    if schema is None:
        raise RuleApplicationError(
            getattr(rule, 'token', rule), 'rule', "not a primitive rule"
        )
    return schema.apply(_binding(binding), list(premises))


def apply_derived(rule, binding, premises=()):
    """
    Apply a derived rule. Its conclusion is only produced once the
    rule's own proof has checked out against the axioms.
    """
    schema = derived_for(rule)
    if schema is None:
        raise RuleApplicationError(
            getattr(rule, 'token', rule), 'rule', "not a derived rule"
        )
    return schema.apply(_binding(binding), list(premises))


def schema_for(rule):
    """
    The schema applying a rule, primitive or derived.
    """
    return AXIOMS.get(rule) or DERIVED.get(rule)


def check_proof(m, proof):
    """
    Check a proof against the constraint set m. Returns a CheckResult,
    falsy (with the failing step and reason) when the proof is invalid.
    """
    result = check_steps(m, proof, schema_for)
    if not result:
        logger.debug("proof rejected: %s", result)
    return result


def expand_proof(m, proof):
    """
    The same proof with every derived step replaced by primitive steps.
    The proof is checked first; an invalid one raises
    RuleApplicationError naming the failing step.
    """
    result = check_proof(m, proof)
    if not result:
        slot = 'goal' if result.step is None else "step {0}".format(result.step)
        rule = 'proof' if result.step is None else proof.step(result.step).rule.token
        raise RuleApplicationError(rule, slot, result.reason)

    return expand(proof)


SearchStats = namedtuple('SearchStats', 'rounds facts stop_reason')


class _Fact(namedtuple('_Fact', 'statement rule premises binding')):
    """
    How a canonical atom was derived: premises are the atoms it used.
    """
    __slots__ = ()


class ProofSearch(object):
    """
    Bounded forward chaining over canonical OD atoms.

    Facts start from the atoms of m and the Reflexivity instances over
    canonical lists; each round applies Transitivity, Suffix, Prefix by
    a single attribute and Chain over single attributes to what the
    previous round produced. Lists longer than max_list_len are not
    kept. Not finding a proof says nothing about implication.
    """
    def __init__(self, m, goal, max_depth=None, max_list_len=None, settings=None):
        if settings is None:
            settings = get_settings()

        self._m = m
        self._goal = goal
        self._universe = m.universe | goal.attributes()
        self._max_depth = settings.search_depth if max_depth is None else max_depth
        self._max_len = (
            len(self._universe) if max_list_len is None else max_list_len
        )
        self._facts = {}
        self._by_lhs = {}
        self._by_rhs = {}
        self.rounds = 0
        self.stop_reason = None

    @property
    def stats(self):
        return SearchStats(self.rounds, len(self._facts), self.stop_reason)

    def _fits(self, atom):
        return len(atom[0]) <= self._max_len and len(atom[1]) <= self._max_len

    def _add(self, atom, rule, premises=(), **binding):
        if atom in self._facts or not self._fits(atom):
            return False

        self._facts[atom] = _Fact(
            OrderDep(*atom), rule, tuple(premises),
            Binding((name, binding[name]) for name in sorted(binding)),
        )
        self._by_lhs.setdefault(atom[0], set()).add(atom)
        self._by_rhs.setdefault(atom[1], set()).add(atom)
        return True

    def _seed(self):
        new = set()

        for dep in self._m:
            for atom in sorted(dep.atoms()):
                if self._add(atom, Rule.PREMISE):
                    new.add(atom)

        for whole in canonical_lists(self._universe, self._max_len):
            for cut in range(len(whole) + 1):
                atom = (whole, whole[:cut])
                if self._add(atom, Rule.REFLEXIVITY, X=whole[:cut], Y=whole[cut:]):
                    new.add(atom)

        return new

    def _compatible(self, first, second):
        pair = MarkedList([first, second])
        return (pair, pair[::-1]) in self._facts and (pair[::-1], pair) in self._facts

    def _step(self, delta):
        new = set()

        def _derive(atom, rule, premises, **binding):
            if self._add(atom, rule, premises, **binding):
                new.add(atom)

        for atom in sorted(delta):
            x, y = atom

            for following in sorted(self._by_lhs.get(y, ())):
                _derive(
                    (x, following[1]), Rule.TRANSITIVITY, [atom, following],
                    X=x, Y=y, Z=following[1],
                )
            for preceding in sorted(self._by_rhs.get(x, ())):
                _derive(
                    (preceding[0], y), Rule.TRANSITIVITY, [preceding, atom],
                    X=preceding[0], Y=x, Z=y,
                )

            joined = (y + x).canonical()
            _derive((x, joined), Rule.SUFFIX, [atom], X=x, Y=y)
            _derive((joined, x), Rule.SUFFIX, [atom], X=x, Y=y)

            for name in sorted(self._universe):
                front = MarkedList([name])
                _derive(
                    ((front + x).canonical(), (front + y).canonical()),
                    Rule.PREFIX, [atom], X=x, Y=y, Z=front,
                )

        names = sorted(self._universe)
        for a in names:
            for b in names:
                if b == a or not self._compatible(a, b):
                    continue
                for c in names:
                    if c in (a, b) or not self._compatible(b, c):
                        continue
                    # YX ~ YZ with Y=[b] is the atom pair [b,a,c] <-> [b,c,a]
                    bac, bca = MarkedList([b, a, c]), MarkedList([b, c, a])
                    if (bac, bca) not in self._facts or (bca, bac) not in self._facts:
                        continue
                    ab, ac, ca = MarkedList([a, b]), MarkedList([a, c]), MarkedList([c, a])
                    bc = MarkedList([b, c])
                    used = [(ab, ab[::-1]), (ab[::-1], ab), (bc, bc[::-1]),
                            (bc[::-1], bc), (bac, bca), (bca, bac)]
                    for atom in ((ac, ca), (ca, ac)):
                        _derive(
                            atom, Rule.CHAIN, used,
                            X=[a], Y1=[b], Z=[c],
                        )

        return new

    def _reached(self):
        return self._goal.atoms() <= set(self._facts)

    def run(self):
        """
        Search; returns a checked Proof or None.
        """
        delta = self._seed()

        while True:
            if self._reached():
                self.stop_reason = 'goal'
                break
            if not delta:
                self.stop_reason = 'fixpoint'
                break
            if self.rounds >= self._max_depth:
                self.stop_reason = 'depth'
                break

            self.rounds += 1
            delta = self._step(delta)
            logger.debug(
                "search round %d: %d new facts, %d total",
                self.rounds, len(delta), len(self._facts)
            )

        logger.debug("search for %s stopped: %s", self._goal, self.stats)
        if self.stop_reason != 'goal':
            return None

        proof = self._extract()
        result = check_proof(self._m, proof)
        if not result:
            logger.error("search produced an invalid proof: %s", result)
            return None
        return proof

    def _extract(self):
        steps = []
        numbers = {}

        def _emit(atom):
            if atom in numbers:
                return numbers[atom]
            fact = self._facts[atom]
            cited = [_emit(premise) for premise in fact.premises]
            steps.append(ProofStep(
                fact.statement, fact.rule, sorted(set(cited)), fact.binding
            ))
            numbers[atom] = len(steps)
            return numbers[atom]

        targets = [_emit(atom) for atom in sorted(self._goal.atoms())]

        if steps[targets[-1] - 1].statement != self._goal or len(targets) > 1:
            steps.append(ProofStep(
                self._goal, Rule.REFLEXIVITY, sorted(set(targets)), RESTATE
            ))

        return Proof(steps, self._goal)


def search_proof(m, goal, max_depth=None, max_list_len=None, settings=None):
    """
    Look for a proof of goal from m within the budget: max_depth rounds
    (default settings.search_depth) and lists of at most max_list_len
    attributes (default: the size of the universe).
    """
    return ProofSearch(
        m, goal, max_depth=max_depth, max_list_len=max_list_len,
        settings=settings,
    ).run()


def _ordering(names, attrs, side):
    names = MarkedList(names)
    if len(names) != len(attrs) or set(names) != set(attrs):
        raise ShapeError(
            "{side} order {names} does not list {attrs} exactly once".format(
                side=side, names=names, attrs=attrs
            )
        )
    return names


def fd_to_od(fd, lhs_order=None, rhs_order=None):
    """
    The order dependency X -> XY for an FD, with X and Y ordering its
    two sides (sorted by default).
    """
    x = fd.lhs.ordered() if lhs_order is None else _ordering(lhs_order, fd.lhs, 'lhs')
    y = fd.rhs.ordered() if rhs_order is None else _ordering(rhs_order, fd.rhs, 'rhs')
    return OrderDep(x, x + y)


def od_to_fd(od):
    """
    The FD X => Y of an order dependency of the shape X -> XY.
    """
    lhs, rhs = od.lhs.canonical(), od.rhs.canonical()
    if rhs[:len(lhs)] != lhs:
        raise ShapeError(
            "{0} is not of the form X -> XY".format(od)
        )
    return FuncDep(lhs, rhs[len(lhs):])


def attribute_closure(attrs, fds):
    """
    Every attribute functionally determined by attrs under fds.
    """
    closed = set(attrs)
    fds = list(fds)

    changed = True
    while changed:
        changed = False
        for fd in fds:
            if fd.lhs <= closed and not fd.rhs <= closed:
                closed |= fd.rhs
                changed = True

    return AttrSet(closed)


def functional_projection(m):
    """
    The FDs every dependency of m carries: an OD X -> Y gives
    set(X) => set(Y), an equivalence gives both directions, a constant
    A gives {} => {A}. Compatibilities carry none.
    """
    fds = []
    for dep in m:
        if isinstance(dep, FuncDep):
            fds.append(dep)
        elif isinstance(dep, Constant):
            fds.append(FuncDep([], [dep.attr]))
        elif isinstance(dep, (OrderDep, OrderEquiv)):
            for od in dep.order_deps():
                fds.append(FuncDep(od.lhs, od.rhs))
        elif not isinstance(dep, OrderCompat):
            raise TypeError("unexpected dependency {0!r}".format(dep))
    return fds


def fd_implied(fds, fd):
    """
    Whether fds imply fd (Armstrong closure).
    """
    return fd.rhs <= attribute_closure(fd.lhs, fds)


def random_instance(rule, rng, attrs, max_len=2):
    """
    A random instance of a primitive rule over some attributes:
    (binding, premises, conclusion). Chain gets one or two links.

    rng: A random.Random.
    """
    schema = axiom_for(rule)
    if schema is None:
        raise RuleApplicationError(
            getattr(rule, 'token', rule), 'rule', "not a primitive rule"
        )

    attrs = sorted(attrs)
    if rule is Rule.CHAIN:
        links = rng.randint(1, 2)
        names = ['X'] + ['Y{0}'.format(i) for i in range(1, links + 1)] + ['Z']
    else:
        names = schema.variables

    binding = Binding(
        (name, [rng.choice(attrs) for _ in range(rng.randint(0, max_len))])
        for name in names
    )
    premises, conclusion = schema.instantiate(binding)
    return binding, premises, conclusion
