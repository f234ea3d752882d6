"""
Attribute lists, attribute sets, values, dependency statements and the
lexicographic comparison they are all defined by.
"""
from abc import ABCMeta, abstractmethod
from collections import namedtuple
from enum import IntEnum
from itertools import permutations

import six

from odengine.exceptions import SchemaError, ShapeError, ValueTypeError
from odengine.mixins import valid_name


__all__ = [
    'Comparison', 'MarkedList', 'AttrSet', 'value_tag', 'compare_values',
    'lex_compare', 'canonicalize', 'canonical_lists', 'Dependency',
    'OrderDep', 'OrderEquiv', 'OrderCompat', 'FuncDep', 'Constant',
    'ConstraintSet',
]


class Comparison(IntEnum):
    """
    The outcome of comparing two rows on a list: s before t, tied, or
    s after t.
    """
    PRECEDES = -1
    EQUAL = 0
    FOLLOWS = 1

    def mirror(self):
        """
        The outcome of the same comparison with the rows swapped.
        """
        return Comparison(-self.value)


def _check_attribute(name):
    if not valid_name(name):
        raise SchemaError(
            "invalid attribute name {0!r}".format(name)
        )
    return name


class MarkedList(tuple):
    """
    An ordered sequence of attribute names. Duplicates are permitted;
    canonical() removes every occurrence after the first.

    A MarkedList compares and hashes like the tuple of its names, so
    [A,B] and [B,A] differ while [A,B,A] and [A,B] differ until
    canonicalized.
    """
    __slots__ = ()

    def __new__(cls, items=()):
        if isinstance(items, six.string_types):
            raise TypeError(
                "MarkedList needs a sequence of names, not {0!r}".format(items)
            )

        return super(MarkedList, cls).__new__(
            cls, tuple(_check_attribute(item) for item in items)
        )

    def __add__(self, other):
        """
        Concatenate two lists (the list written XY).
        """
        return MarkedList(tuple(self) + tuple(other))

    def __radd__(self, other):
        return MarkedList(tuple(other) + tuple(self))

    def __getitem__(self, index):
        item = tuple.__getitem__(self, index)
        if isinstance(index, slice):
            return MarkedList(item)
        return item

    def canonical(self):
        """
        This list with non-leftmost duplicate occurrences removed.
        """
        seen = set()
        kept = []

        for name in self:
            if name not in seen:
                seen.add(name)
                kept.append(name)

        return MarkedList(kept)

    def is_canonical(self):
        return len(set(self)) == len(self)

    def set(self):
        """
        The attributes of this list, as an AttrSet.
        """
        return AttrSet(self)

    def without(self, attrs):
        """
        Remove every occurrence of the given attributes.
        """
        attrs = frozenset(attrs)
        return MarkedList(name for name in self if name not in attrs)

    def substitute(self, mapping):
        """
        Replace each attribute by the list it is mapped to; unmapped
        attributes are kept.
        """
        result = []
        for name in self:
            if name in mapping:
                result.extend(mapping[name])
            else:
                result.append(name)
        return MarkedList(result)

    def __str__(self):
        return "[{0}]".format(",".join(self))

    def __repr__(self):
        return six.u("MarkedList({0})").format(str(self))


class AttrSet(frozenset):
    """
    An unordered set of attribute names.
    """
    __slots__ = ()

    def __new__(cls, items=()):
        if isinstance(items, six.string_types):
            raise TypeError(
                "AttrSet needs a collection of names, not {0!r}".format(items)
            )

        return super(AttrSet, cls).__new__(
            cls, (_check_attribute(item) for item in items)
        )

    def ordered(self):
        """
        The members as a list, sorted by name.
        """
        return MarkedList(sorted(self))

    def __or__(self, other):
        return AttrSet(frozenset.__or__(self, frozenset(other)))

    def __and__(self, other):
        return AttrSet(frozenset.__and__(self, frozenset(other)))

    def __sub__(self, other):
        return AttrSet(frozenset.__sub__(self, frozenset(other)))

    def __str__(self):
        return "{{{0}}}".format(",".join(sorted(self)))

    def __repr__(self):
        return six.u("AttrSet({0})").format(str(self))


def value_tag(value):
    """
    The tag of a cell value: 'int' or 'text'.
    """
    if isinstance(value, bool):
        raise ValueTypeError("booleans are not table values")
    if isinstance(value, six.integer_types):
        return 'int'
    if isinstance(value, six.string_types):
        return 'text'

    raise ValueTypeError(
        "unsupported value {0!r} of type {1}".format(
            value, type(value).__name__
        )
    )


def compare_values(left, right):
    """
    Compare two values of the same tag.

    Integers compare numerically, text by code point. Mixing the two
    is a ValueTypeError.
    """
    left_tag = value_tag(left)
    right_tag = value_tag(right)

    if left_tag != right_tag:
        raise ValueTypeError(
            "cannot compare {0} value {1!r} with {2} value {3!r}".format(
                left_tag, left, right_tag, right
            )
        )

    if left < right:
        return Comparison.PRECEDES
    if left > right:
        return Comparison.FOLLOWS
    return Comparison.EQUAL


def lex_compare(x, s, t):
    """
    Compare rows s and t lexicographically on the list x.

    x: A MarkedList (or any sequence of names).
    s, t: Mappings from attribute name to value.

    The first attribute of x on which s and t differ decides; the
    empty list compares EQUAL.
    """
    for name in x:
        try:
            left = s[name]
            right = t[name]
        except KeyError:
            raise SchemaError("attribute {0} is missing from a row".format(name))

        outcome = compare_values(left, right)
        if outcome is not Comparison.EQUAL:
            return outcome

    return Comparison.EQUAL


def canonicalize(x):
    """
    Leftmost-occurrence deduplication of a list.
    """
    return MarkedList(x).canonical()


def canonical_lists(attrs, max_len=None):
    """
    Every duplicate-free list over attrs of length at most max_len,
    shortest first and in name order within a length.
    """
    names = sorted(attrs)
    if max_len is None:
        max_len = len(names)

    for length in range(0, min(max_len, len(names)) + 1):
        for combo in permutations(names, length):
            yield MarkedList(combo)


@six.add_metaclass(ABCMeta)
class Dependency(object):
    """
    A statement about tables: an order dependency, order equivalence,
    order compatibility, functional dependency or constant.

    Every dependency is semantically equivalent to the conjunction of
    the order dependencies returned by order_deps(); atoms() gives the
    canonical form of those, which is what proofs and the decision
    procedure reason about.
    """
    __slots__ = ()

    keyword = None

    @abstractmethod
    def attributes(self):
        """
        The set of attributes mentioned.
        """

    @abstractmethod
    def order_deps(self):
        """
        Equivalent order dependencies, as a tuple of OrderDep.
        """

    @abstractmethod
    def canonical(self):
        """
        The same statement with every list canonicalized.
        """

    @abstractmethod
    def project(self, attrs):
        """
        Remove all occurrences of the given (constant) attributes.
        Returns None when nothing is left to state.
        """

    @abstractmethod
    def substitute(self, mapping):
        """
        Replace attributes by lists (used to instantiate rule schemas).
        """

    def atoms(self):
        """
        The canonical (lhs, rhs) pairs of the equivalent order
        dependencies.
        """
        return frozenset(
            (od.lhs.canonical(), od.rhs.canonical())
            for od in self.order_deps()
        )

    def __eq__(self, other):
        return type(self) is type(other) and tuple.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((type(self).__name__, tuple(self)))


_Pair = namedtuple('_Pair', 'lhs rhs')


class _ListPair(Dependency, _Pair):
    """
    Shared behaviour of the three statements between two lists.
    """
    __slots__ = ()

    arrow = None

    def __new__(cls, lhs, rhs):
        return _Pair.__new__(cls, MarkedList(lhs), MarkedList(rhs))

    def attributes(self):
        return AttrSet(self.lhs) | AttrSet(self.rhs)

    def canonical(self):
        return type(self)(self.lhs.canonical(), self.rhs.canonical())

    def project(self, attrs):
        return type(self)(self.lhs.without(attrs), self.rhs.without(attrs))

    def substitute(self, mapping):
        return type(self)(
            self.lhs.substitute(mapping), self.rhs.substitute(mapping)
        )

    def __str__(self):
        return "{keyword} {lhs} {arrow} {rhs}".format(
            keyword=self.keyword, lhs=self.lhs, arrow=self.arrow, rhs=self.rhs
        )

    def __repr__(self):
        return "{cls}({lhs}, {rhs})".format(
            cls=type(self).__name__, lhs=self.lhs, rhs=self.rhs
        )


class OrderDep(_ListPair):
    """
    X ↦ Y: whenever s precedes or ties t on X, s precedes or ties t
    on Y.
    """
    __slots__ = ()

    keyword = 'od'
    arrow = '->'

    def order_deps(self):
        return (self,)

    def agrees(self, on_lhs, on_rhs):
        """
        Whether a pair of rows that compares on_lhs on X and on_rhs on
        Y respects this dependency, in both pair orders.
        """
        return on_rhs == 0 or on_rhs == on_lhs


class OrderEquiv(_ListPair):
    """
    X ↔ Y: X ↦ Y and Y ↦ X.
    """
    __slots__ = ()

    keyword = 'oeq'
    arrow = '<->'

    def order_deps(self):
        return (OrderDep(self.lhs, self.rhs), OrderDep(self.rhs, self.lhs))


class OrderCompat(_ListPair):
    """
    X ∼ Y: XY ↔ YX, the two lists admit a common sort order.
    """
    __slots__ = ()

    keyword = 'oc'
    arrow = '~'

    def order_deps(self):
        forward = self.lhs + self.rhs
        backward = self.rhs + self.lhs
        return (OrderDep(forward, backward), OrderDep(backward, forward))


_Sets = namedtuple('_Sets', 'lhs rhs')


class FuncDep(Dependency, _Sets):
    """
    A functional dependency between attribute sets, equivalent to the
    order dependency X ↦ XY for lists X, Y ordering the two sets.
    """
    __slots__ = ()

    keyword = 'fd'
    arrow = '=>'

    def __new__(cls, lhs, rhs):
        return _Sets.__new__(cls, AttrSet(lhs), AttrSet(rhs))

    def attributes(self):
        return self.lhs | self.rhs

    def order_deps(self):
        ordered = self.lhs.ordered()
        return (OrderDep(ordered, ordered + self.rhs.ordered()),)

    def canonical(self):
        return self

    def project(self, attrs):
        return FuncDep(self.lhs - attrs, self.rhs - attrs)

    def substitute(self, mapping):
        def _replace(names):
            result = set()
            for name in names:
                result.update(mapping.get(name, (name,)))
            return result

        return FuncDep(_replace(self.lhs), _replace(self.rhs))

    def __str__(self):
        return "fd {lhs} => {rhs}".format(lhs=self.lhs, rhs=self.rhs)

    def __repr__(self):
        return "FuncDep({lhs}, {rhs})".format(lhs=self.lhs, rhs=self.rhs)


_Single = namedtuple('_Single', 'attr')


class Constant(Dependency, _Single):
    """
    A is constant: [] ↦ [A], so every table has one value for A.
    """
    __slots__ = ()

    keyword = 'const'

    def __new__(cls, attr):
        return _Single.__new__(cls, _check_attribute(attr))

    def attributes(self):
        return AttrSet([self.attr])

    def order_deps(self):
        return (OrderDep([], [self.attr]),)

    def canonical(self):
        return self

    def project(self, attrs):
        if self.attr in attrs:
            return None
        return self

    def substitute(self, mapping):
        replaced = mapping.get(self.attr, (self.attr,))
        if len(replaced) != 1:
            raise ShapeError(
                "const {0} cannot be instantiated with {1}".format(
                    self.attr, MarkedList(replaced)
                )
            )
        return Constant(replaced[0])

    def __str__(self):
        return "const {0}".format(self.attr)

    def __repr__(self):
        return "Constant({0})".format(self.attr)


class ConstraintSet(object):
    """
    A finite set of dependencies over a universe of attributes.

    deps: The dependencies. Order is kept (for formatting) and
        duplicates are dropped.
    universe: Extra attributes to include. Every attribute mentioned by
        a dependency is always part of the universe.
    """
    def __init__(self, deps=(), universe=()):
        kept = []
        seen = set()

        for dep in deps:
            if not isinstance(dep, Dependency):
                raise TypeError(
                    "expected a Dependency, got {0!r}".format(dep)
                )
            if dep not in seen:
                seen.add(dep)
                kept.append(dep)

        mentioned = AttrSet()
        for dep in kept:
            mentioned = mentioned | dep.attributes()

        self._deps = tuple(kept)
        self._universe = AttrSet(universe) | mentioned

    @property
    def deps(self):
        return self._deps

    @property
    def universe(self):
        return self._universe

    def __iter__(self):
        return iter(self._deps)

    def __len__(self):
        return len(self._deps)

    def __contains__(self, dep):
        return dep in self._deps

    def __eq__(self, other):
        if not isinstance(other, ConstraintSet):
            return NotImplemented
        return (
            self._universe == other._universe and
            set(self._deps) == set(other._deps)
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.fingerprint())

    def require(self, attrs):
        """
        Raise SchemaError unless every attribute is in the universe.
        """
        missing = AttrSet(attrs) - self._universe
        if missing:
            raise SchemaError(
                "attribute(s) {0} not in universe {1}".format(
                    missing, self._universe
                )
            )

    def extended(self, deps, universe=()):
        """
        A new set with more dependencies (and optionally attributes).
        """
        return ConstraintSet(
            self._deps + tuple(deps), self._universe | AttrSet(universe)
        )

    def with_constants(self, attrs):
        """
        A new set that additionally declares the attributes constant.
        """
        return self.extended(Constant(name) for name in sorted(attrs))

    def project(self, attrs):
        """
        Remove the given attributes everywhere: from every list and set,
        and from the universe.
        """
        projected = []
        for dep in self._deps:
            dep = dep.project(attrs)
            if dep is not None:
                projected.append(dep)

        return ConstraintSet(projected, self._universe - attrs)

    def fingerprint(self):
        """
        A hashable key that identifies the set up to order of
        declarations and canonicalization of lists.
        """
        return (
            tuple(sorted(self._universe)),
            tuple(sorted(set(str(dep.canonical()) for dep in self._deps))),
        )

    def __str__(self):
        return "\n".join(str(dep) for dep in self._deps)

    def __repr__(self):
        return "ConstraintSet([{deps}], universe={universe})".format(
            deps=", ".join(repr(dep) for dep in self._deps),
            universe=self._universe,
        )
