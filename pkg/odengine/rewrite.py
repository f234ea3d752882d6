"""
Query rewrites driven by dependencies: shortening order-by and
group-by lists and deciding whether one sort order can stand in for
another.
"""
from collections import namedtuple
import logging

from odengine.core import AttrSet, FuncDep, MarkedList, OrderDep, OrderEquiv
from odengine.decide import Oracle
from odengine.inference import attribute_closure, functional_projection
from odengine.proofs import Rule


__all__ = [
    'Removal', 'RewriteReport', 'reduce_order', 'reduce_order_star',
    'reduce_group_by', 'can_substitute_order',
]


logger = logging.getLogger(__name__)


Removal = namedtuple('Removal', 'attr rule dependency')
Removal.__doc__ = """
One dropped attribute: the rule that justifies dropping it and the
dependency the rule was applied to.
"""


class RewriteReport(namedtuple('RewriteReport', 'source result removals')):
    """
    The outcome of a rewrite: the input, the output (a MarkedList for
    order-by, an AttrSet for group-by) and the removals in the order
    they were made.
    """
    __slots__ = ()

    @property
    def changed(self):
        return bool(self.removals)

    def __str__(self):
        return str(self.result)


class _OrderSweep(object):
    """
    Right-to-left sweeps over an order-by list, repeated until nothing
    more can be dropped. Every drop is confirmed with the oracle before
    it is kept.
    """
    def __init__(self, store, star, settings=None):
        self.oracle = Oracle(store, settings=settings)
        self.star = star
        self.removals = []

    def _confirmed(self, current, candidate):
        if self.oracle.implies(OrderEquiv(candidate, current)):
            return True
        logger.warning(
            "rewrite of %s to %s failed its equivalence check", current, candidate
        )
        return False

    def _functional_drop(self, current, position):
        attr = current[position]
        determined = FuncDep(current[:position], [attr])
        if not self.oracle.implies(determined):
            return None

        candidate = current[:position] + current[position + 1:]
        if not self._confirmed(current, candidate):
            return None

        self.removals.append(Removal(attr, Rule.ELIMINATE.token, determined))
        return candidate

    def _ordered_drop(self, current, position):
        """
        Drop the block current[position:end] when a list directly after
        it orders it. Shorter blocks are tried first, and for each block
        the longest following list.
        """
        size = len(current)
        for end in range(position + 1, size):
            block = current[position:end]
            for stop in range(size, end, -1):
                ordering = OrderDep(current[end:stop], block)
                if not self.oracle.implies(ordering):
                    continue

                candidate = current[:position] + current[end:]
                if not self._confirmed(current, candidate):
                    continue

                self.removals.extend(
                    Removal(attr, Rule.LEFT_ELIMINATE.token, ordering)
                    for attr in block
                )
                return candidate
        return None

    def sweep(self, current):
        position = len(current) - 1
        while position >= 0:
            reduced = self._functional_drop(current, position)
            if reduced is None and self.star:
                reduced = self._ordered_drop(current, position)
            if reduced is not None:
                logger.debug("reduced %s to %s", current, reduced)
                current = reduced
            position -= 1
        return current

    def run(self, order):
        current = order
        while True:
            reduced = self.sweep(current)
            if reduced == current:
                return reduced
            current = reduced


def _widened(store, attrs):
    # attributes no dependency mentions are unconstrained columns
    return store.extended([], universe=attrs)


def reduce_order(o, store, settings=None):
    """
    Drop every attribute of an order-by list that the attributes before
    it functionally determine, sweeping right to left.
    """
    o = MarkedList(o).canonical()
    sweep = _OrderSweep(_widened(store, o), star=False, settings=settings)
    return RewriteReport(o, sweep.run(o), tuple(sweep.removals))


def reduce_order_star(o, store, settings=None):
    """
    reduce_order, also dropping a block of attributes when the list
    directly after it orders it (VYXZ <-> VXZ given X -> Y).
    """
    o = MarkedList(o).canonical()
    sweep = _OrderSweep(_widened(store, o), star=True, settings=settings)
    return RewriteReport(o, sweep.run(o), tuple(sweep.removals))


def reduce_group_by(g, store, preference=None):
    """
    Drop group-by attributes the remaining ones functionally determine.

    preference: Attributes to keep when several determine each other,
        most wanted first. Others are ranked by name after them.
    """
    g = AttrSet(g)
    fds = functional_projection(store)

    preference = list(preference or ())
    ranked = sorted(g, key=lambda name: (
        preference.index(name) if name in preference else len(preference), name
    ))

    kept = set(g)
    removals = []
    for attr in reversed(ranked):
        rest = kept - set([attr])
        if attr in attribute_closure(rest, fds):
            kept = rest
            removals.append(Removal(attr, 'closure', FuncDep(rest, [attr])))

    return RewriteReport(g, AttrSet(kept), tuple(removals))


def can_substitute_order(plan, query, store, settings=None):
    """
    Whether a stream sorted by plan is sorted by query too.
    """
    plan, query = MarkedList(plan), MarkedList(query)
    store = _widened(store, plan + query)
    return Oracle(store, settings=settings).implies(OrderDep(plan, query))
