"""
odengine reasons about order dependencies: it checks them on tables,
decides implication between them, checks and searches for proofs, and
uses them to rewrite order-by and group-by lists.
"""
from odengine.core import (
    AttrSet, ConstraintSet, Constant, FuncDep, MarkedList, OrderCompat,
    OrderDep, OrderEquiv,
)
from odengine.decide import closure, decide
from odengine.dsl import parse_constraints, parse_dependency, parse_table
from odengine.inference import check_proof, search_proof
from odengine.instances import TableInstance, find_violation, holds
from odengine.rewrite import (
    can_substitute_order, reduce_group_by, reduce_order, reduce_order_star,
)
from odengine.witness import build_armstrong_table


__all__ = [
    'AttrSet', 'ConstraintSet', 'Constant', 'FuncDep', 'MarkedList',
    'OrderCompat', 'OrderDep', 'OrderEquiv', 'TableInstance', 'holds',
    'find_violation', 'decide', 'closure', 'check_proof', 'search_proof',
    'build_armstrong_table', 'reduce_order', 'reduce_order_star',
    'reduce_group_by', 'can_substitute_order', 'parse_constraints',
    'parse_dependency', 'parse_table',
]
