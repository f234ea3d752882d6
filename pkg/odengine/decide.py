"""
Exact implication of dependencies by enumerating how two abstract rows
can compare on each attribute.

Every dependency is a property of pairs of rows, and a table satisfies
it iff every two-row sub-table does. So m implies a goal iff no
assignment of Lt, Eq or Gt to the attributes satisfies m and falsifies
the goal, and a failing assignment materializes as a two-row
counterexample.
"""
from collections import namedtuple
import logging

import six

from odengine.core import (
    AttrSet, Comparison, Constant, OrderDep, canonical_lists,
)
from odengine.exceptions import ResourceError, SchemaError
from odengine.instances import TableInstance
from odengine.mixins import FrozenAttr
from odengine.settings import get_settings


__all__ = [
    'Lt', 'Eq', 'Gt', 'PairPattern', 'Verdict', 'Oracle', 'eval_on_pattern',
    'decide', 'closure', 'equivalent_sets', 'is_constant', 'constants',
]


logger = logging.getLogger(__name__)


Lt = Comparison.PRECEDES
Eq = Comparison.EQUAL
Gt = Comparison.FOLLOWS

# enumeration order within one attribute
_VALUES = (Lt.value, Eq.value, Gt.value)

# (first row, second row) cell values of a materialized pattern
_CELLS = {Lt: (0, 1), Eq: (0, 0), Gt: (1, 0)}

# universes up to this size keep every satisfying pattern in memory
CACHE_LIMIT = 8


class PairPattern(FrozenAttr):
    """
    How an abstract pair of rows (s, t) compares on each attribute:
    Lt (s before t), Eq or Gt.
    """
    def __init__(self, relations=None):
        if relations is None:
            relations = {}
        self._setattr(
            '_relations',
            dict(
                (name, Comparison(value))
                for name, value in dict(relations).items()
            )
        )

    @classmethod
    def from_values(cls, universe, values):
        """
        Build a pattern from the sorted universe and a tuple of -1/0/1.
        """
        return cls(zip(sorted(universe), values))

    def _configuration(self):
        return None

    @classmethod
    def _constructor(cls, mapping, configuration):
        return cls(mapping)

    def __getitem__(self, key):
        return self._relations[key]

    def __len__(self):
        return len(self._relations)

    def __iter__(self):
        return iter(sorted(self._relations))

    def materialize(self):
        """
        The two-row table this pattern describes, with cells in {0,1}.
        """
        columns = sorted(self._relations)
        first = dict((name, _CELLS[self._relations[name]][0]) for name in columns)
        second = dict((name, _CELLS[self._relations[name]][1]) for name in columns)
        return TableInstance(columns, [first, second])

    def __str__(self):
        names = {Lt: 'Lt', Eq: 'Eq', Gt: 'Gt'}
        return ",".join(
            "{0}={1}".format(name, names[self._relations[name]]) for name in self
        )

    def __repr__(self):
        return six.u("PairPattern({0})").format(str(self))


class Verdict(namedtuple('Verdict', 'implied counterexample pattern')):
    """
    The answer to an implication question. Truthy when implied;
    otherwise carries the failing PairPattern and its two-row table.
    """
    __slots__ = ()

    def __bool__(self):
        return self.implied

    __nonzero__ = __bool__

    def __str__(self):
        if self.implied:
            return 'IMPLIED'
        return 'NOT-IMPLIED'


IMPLIED = Verdict(True, None, None)


def _compare(values, indices):
    for index in indices:
        value = values[index]
        if value:
            return value
    return 0


def _atom_holds(values, atom):
    lhs, rhs = atom
    on_rhs = _compare(values, rhs)
    return on_rhs == 0 or on_rhs == _compare(values, lhs)


class _Compiled(object):
    """
    Dependency atoms as index tuples into the sorted universe, grouped
    by the position at which they become fully assigned.
    """
    def __init__(self, positions, deps):
        self.by_depth = {}
        for dep in deps:
            for lhs, rhs in dep.atoms():
                indices = [positions[name] for name in lhs + rhs]
                depth = max(indices) if indices else -1
                atom = (
                    tuple(positions[name] for name in lhs),
                    tuple(positions[name] for name in rhs),
                )
                self.by_depth.setdefault(depth, []).append(atom)

    def satisfied_at(self, values, depth):
        for atom in self.by_depth.get(depth, ()):
            if not _atom_holds(values, atom):
                return False
        return True


class Oracle(object):
    """
    Answers implication questions for one constraint set.

    m: The ConstraintSet.
    universe: Extra attributes goals may mention.
    settings: Settings (for the max_attrs cap); defaults to
        get_settings().

    Satisfying patterns of small universes are enumerated once and
    reused for every goal; larger universes run a pruned search per
    goal. Both return the lexicographically first counterexample in
    the order Lt < Eq < Gt over the sorted universe.
    """
    def __init__(self, m, universe=(), settings=None):
        if settings is None:
            settings = get_settings()

        universe = m.universe | AttrSet(universe)
        if len(universe) > settings.max_attrs:
            raise ResourceError(
                "universe of {count} attributes exceeds the cap of {cap} "
                "(ODENGINE_MAX_ATTRS); split the problem into independent "
                "attribute groups".format(count=len(universe), cap=settings.max_attrs)
            )

        self._m = m
        self._universe = universe
        self._names = sorted(universe)
        self._positions = dict((name, i) for i, name in enumerate(self._names))
        self._premises = _Compiled(self._positions, m)
        self._models = None
        self.explored = 0

    @property
    def universe(self):
        return self._universe

    @property
    def constraints(self):
        return self._m

    def _search(self, relevant, goal=None, first_only=False):
        """
        Depth-first enumeration of the patterns satisfying m (and
        falsifying goal, when given). Attributes not in relevant only
        take Lt.
        """
        size = len(self._names)
        values = [0] * size
        found = []

        def _consistent(depth):
            if not self._premises.satisfied_at(values, depth):
                return False
            # prune once every goal atom is settled and holds
            if goal_depth == depth and all(
                    _atom_holds(values, atom) for atom in goal_atoms):
                return False
            return True

        def _visit(depth):
            self.explored += 1
            if depth == size:
                found.append(tuple(values))
                return first_only
            choices = _VALUES if relevant[depth] else _VALUES[:1]
            for value in choices:
                values[depth] = value
                if _consistent(depth) and _visit(depth + 1):
                    return True
            values[depth] = 0
            return False

        goal_atoms = []
        goal_depth = None
        if goal is not None:
            for atoms in goal.by_depth.values():
                goal_atoms.extend(atoms)
            goal_depth = max(goal.by_depth)
            if goal_depth == -1 and all(
                    _atom_holds(values, atom) for atom in goal_atoms):
                return found

        if self._premises.satisfied_at(values, -1):
            _visit(0)

        return found

    def models(self):
        """
        Every satisfying pattern, as value tuples over the sorted
        universe, in enumeration order.
        """
        if self._models is None:
            self._models = self._search([True] * len(self._names))
            logger.debug(
                "%d of %d patterns over %d attributes satisfy the constraints",
                len(self._models), 3 ** len(self._names), len(self._names)
            )
        return self._models

    def _compile_goal(self, goal):
        missing = goal.attributes() - self._universe
        if missing:
            raise SchemaError(
                "goal mentions {0} outside universe {1}".format(
                    missing, self._universe
                )
            )
        return _Compiled(self._positions, [goal])

    def decide(self, goal):
        """
        Verdict for whether m implies goal.
        """
        compiled = self._compile_goal(goal)

        if self._models is not None or len(self._names) <= CACHE_LIMIT:
            atoms = [atom for group in compiled.by_depth.values() for atom in group]
            for values in self.models():
                if not all(_atom_holds(values, atom) for atom in atoms):
                    return self._refuted(values)
            return IMPLIED

        mentioned = goal.attributes()
        for dep in self._m:
            mentioned = mentioned | dep.attributes()
        relevant = [name in mentioned for name in self._names]

        before = self.explored
        found = self._search(relevant, goal=compiled, first_only=True)
        logger.debug(
            "searched %d nodes deciding %s", self.explored - before, goal
        )

        if found:
            return self._refuted(found[0])
        return IMPLIED

    def implies(self, goal):
        return self.decide(goal).implied

    def _refuted(self, values):
        pattern = PairPattern.from_values(self._names, values)
        return Verdict(False, pattern.materialize(), pattern)


def eval_on_pattern(dep, pattern):
    """
    Whether a dependency holds on the pair of rows a pattern describes
    (in both pair orders).
    """
    missing = dep.attributes() - AttrSet(pattern)
    if missing:
        raise SchemaError(
            "pattern does not cover attribute(s) {0}".format(missing)
        )

    for lhs, rhs in dep.atoms():
        on_lhs = _compare([pattern[name].value for name in lhs], range(len(lhs)))
        on_rhs = _compare([pattern[name].value for name in rhs], range(len(rhs)))
        if not (on_rhs == 0 or on_rhs == on_lhs):
            return False

    return True


def decide(m, goal, settings=None):
    """
    Decide whether the constraint set m implies goal.

    Attributes of goal that m never mentions are added to the universe;
    they are unconstrained.
    """
    return Oracle(m, goal.attributes(), settings=settings).decide(goal)


def closure(m, max_len, settings=None):
    """
    Every OrderDep between canonical lists over m's universe of length
    at most max_len that m implies.
    """
    oracle = Oracle(m, settings=settings)
    lists = list(canonical_lists(oracle.universe, max_len))

    implied = set()
    for lhs in lists:
        for rhs in lists:
            od = OrderDep(lhs, rhs)
            if oracle.implies(od):
                implied.add(od)

    logger.debug(
        "closure: %d of %d candidate ODs implied", len(implied), len(lists) ** 2
    )
    return implied


def equivalent_sets(first, second, settings=None):
    """
    Whether two constraint sets over the same universe imply each other.
    """
    if first.universe != second.universe:
        raise SchemaError(
            "universes differ: {0} vs {1}".format(first.universe, second.universe)
        )

    forward = Oracle(second, settings=settings)
    if not all(forward.implies(dep) for dep in first):
        return False

    backward = Oracle(first, settings=settings)
    return all(backward.implies(dep) for dep in second)


def is_constant(m, attr, settings=None):
    """
    Whether m forces attr to a single value ([] -> [attr] is implied).
    """
    m.require([attr])
    return decide(m, Constant(attr), settings=settings).implied


def constants(m, settings=None):
    """
    The attributes of m's universe that m forces to be constant.
    """
    oracle = Oracle(m, settings=settings)
    return AttrSet(
        name for name in oracle.universe if oracle.implies(Constant(name))
    )
