"""Tiny arithmetic-expression evaluator for the catalog's formula strings.

Formulas such as ``"-2*(n+1) - beta"`` or ``"alpha > -1"`` are parsed with
:mod:`ast` and evaluated against a name mapping. Only arithmetic, comparisons,
boolean connectives and a handful of elementary functions are accepted.
Exact (Fraction) evaluation is used unless a transcendental function is hit.
"""

from __future__ import annotations

import ast
import math
import operator
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}
_CMPOPS = {
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
}
FUNCTIONS = {
    "log": math.log,
    "exp": math.exp,
    "atan": math.atan,
    "sqrt": math.sqrt,
    "sin": math.sin,
    "cos": math.cos,
    "tanh": math.tanh,
    "cosh": math.cosh,
    "sinh": math.sinh,
    "abs": abs,
}


class ExprError(ValueError):
    pass


@lru_cache(maxsize=1024)
def parse(source: str) -> ast.Expression:
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ExprError(f"cannot parse {source!r}: {exc.msg}") from None
    return tree


def names(source: str) -> set[str]:
    return {
        node.id
        for node in ast.walk(parse(source))
        if isinstance(node, ast.Name) and node.id not in FUNCTIONS
    }


def evaluate(source: str, env: Mapping[str, object]):
    return _eval(parse(source).body, env, source)


def _eval(node, env, source):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool):
            return node.value
        if isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node.value, float):
            return Fraction(repr(node.value))
        raise ExprError(f"unsupported literal {node.value!r} in {source!r}")
    if isinstance(node, ast.Name):
        if node.id in env:
            return env[node.id]
        if node.id == "pi":
            return math.pi
        raise ExprError(f"unbound name {node.id!r} in {source!r}")
    if isinstance(node, ast.UnaryOp):
        v = _eval(node.operand, env, source)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
        if isinstance(node.op, ast.Not):
            return not v
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, env, source)
        right = _eval(node.right, env, source)
        if isinstance(node.op, ast.Pow):
            if isinstance(right, Fraction) and right.denominator == 1:
                return left ** int(right)
            return float(left) ** float(right)
        op = _BINOPS.get(type(node.op))
        if op is not None:
            return op(left, right)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env, source)
        for op_node, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env, source)
            if not _CMPOPS[type(op_node)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.BoolOp):
        vals = (_eval(v, env, source) for v in node.values)
        return all(vals) if isinstance(node.op, ast.And) else any(vals)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        fn = FUNCTIONS.get(node.func.id)
        if fn is None:
            raise ExprError(f"unknown function {node.func.id!r} in {source!r}")
        args = [_eval(a, env, source) for a in node.args]
        if fn is abs:
            return abs(args[0])
        return fn(*(float(a) for a in args))
    raise ExprError(f"unsupported syntax {ast.dump(node)[:40]} in {source!r}")
