"""Evaluation of expression trees and rendering of results.

A result is exactly one of: SplitQuaternion, float (scalar), Mat4,
CausalCharacter, or PolarForm. Arithmetic operates on quaternions (floats
promote to scalar quaternions); matrices, characters and polar forms are
display-only values. Library errors raised mid-evaluation are wrapped in
EvalError carrying the span of the offending subexpression.
"""

from __future__ import annotations

from typing import Union

from .algebra import CausalCharacter, SplitQuaternion, format_number, format_quaternion
from .errors import CoquatError, EvalError, ExprError
from .expression import Add, Call, Expr, Literal, Mul, Neg, Pow, Sub, parse_source
from .matrix import Mat4, left_matrix, right_matrix
from .polar import PolarForm, decompose
from .powers import exp_quaternion, pow_closed

Value = Union[SplitQuaternion, float, Mat4, CausalCharacter, PolarForm]


def _describe(value: Value) -> str:
    if isinstance(value, SplitQuaternion):
        return "quaternion"
    if isinstance(value, float):
        return "scalar"
    if isinstance(value, Mat4):
        return "matrix"
    if isinstance(value, CausalCharacter):
        return "causal character"
    return "polar form"


def _as_quaternion(value: Value, node: Expr, what: str) -> SplitQuaternion:
    if isinstance(value, SplitQuaternion):
        return value
    if isinstance(value, float):
        return SplitQuaternion(value)
    raise EvalError(f"{what} requires a quaternion, got a {_describe(value)}",
                    node.start, node.end)


def _as_exponent(value: Value, node: Expr) -> int:
    if isinstance(value, float):
        scalar = value
    elif isinstance(value, SplitQuaternion) and value.vector_part.is_zero():
        scalar = value.q0
    else:
        raise EvalError("pow exponent must be an integer", node.start, node.end)
    if scalar != int(scalar):
        raise EvalError("pow exponent must be an integer", node.start, node.end)
    return int(scalar)


def evaluate(node: Expr) -> Value:
    """Evaluate a parsed expression to a single value."""
    try:
        return _eval(node)
    except ExprError:
        raise
    except CoquatError as exc:
        raise EvalError(str(exc), node.start, node.end, cause=exc) from exc


def _eval(node: Expr) -> Value:
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Neg):
        return -_as_quaternion(_eval(node.operand), node.operand, "negation")
    if isinstance(node, (Add, Sub, Mul)):
        left = _as_quaternion(_eval(node.left), node.left, "arithmetic")
        right = _as_quaternion(_eval(node.right), node.right, "arithmetic")
        try:
            if isinstance(node, Add):
                return left + right
            if isinstance(node, Sub):
                return left - right
            return left * right
        except CoquatError as exc:
            raise EvalError(str(exc), node.start, node.end, cause=exc) from exc
    if isinstance(node, Pow):
        base = _as_quaternion(_eval(node.base), node.base, "power")
        return _call_wrapped(node, pow_closed, base, node.exponent)
    if isinstance(node, Call):
        return _eval_call(node)
    raise AssertionError(f"unhandled node {node!r}")


def _call_wrapped(node: Expr, fn, *args) -> Value:
    try:
        return fn(*args)
    except CoquatError as exc:
        raise EvalError(str(exc), node.start, node.end, cause=exc) from exc


def _eval_call(node: Call) -> Value:
    name = node.name
    if name == "pow":
        base = _as_quaternion(_eval(node.args[0]), node.args[0], "pow")
        exponent = _as_exponent(_eval(node.args[1]), node.args[1])
        return _call_wrapped(node, pow_closed, base, exponent)
    arg = _as_quaternion(_eval(node.args[0]), node.args[0], name)
    if name == "conj":
        return arg.conjugate()
    if name == "norm":
        return arg.norm()
    if name == "iq":
        return arg.iq()
    if name == "classify":
        return arg.classify()
    if name == "polar":
        return _call_wrapped(node, decompose, arg)
    if name == "normalize":
        return _call_wrapped(node, SplitQuaternion.normalize, arg)
    if name == "inv":
        return _call_wrapped(node, SplitQuaternion.inverse, arg)
    if name == "exp":
        return _call_wrapped(node, exp_quaternion, arg)
    if name == "matl":
        return left_matrix(arg)
    if name == "matr":
        return right_matrix(arg)
    raise AssertionError(f"unregistered function {name!r}")


def evaluate_source(src: str) -> Value:
    """Tokenize, parse and evaluate one expression line."""
    return evaluate(parse_source(src))


# -- rendering ---------------------------------------------------------------


def _matrix_lines(m: Mat4) -> list[str]:
    rows = m.rows()
    out = []
    for idx, row in enumerate(rows):
        body = ", ".join(format_number(x) for x in row)
        prefix = "[[" if idx == 0 else " ["
        suffix = "]]" if idx == 3 else "],"
        out.append(prefix + body + suffix)
    return out


def render_text(value: Value) -> str:
    """Human-readable form of a result (one line except for matrices)."""
    if isinstance(value, SplitQuaternion):
        return format_quaternion(value)
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, Mat4):
        return "\n".join(_matrix_lines(value))
    if isinstance(value, CausalCharacter):
        return value.value
    sign = "+1" if value.sign > 0 else "-1"
    eps = ", ".join(format_number(u) for u in (value.eps.u1, value.eps.u2, value.eps.u3))
    return (f"polar{{kind={value.kind.value}, n={format_number(value.n)}, "
            f"theta={format_number(value.theta)}, eps=({eps}), sign={sign}}}")


def render_json(value: Value) -> str:
    """JSON wire form; numbers use shortest round-trip encoding."""
    if isinstance(value, SplitQuaternion):
        q = ",".join(format_number(c) for c in value.components())
        return f'{{"type":"quat","q":[{q}]}}'
    if isinstance(value, float):
        return f'{{"type":"scalar","value":{format_number(value)}}}'
    if isinstance(value, Mat4):
        rows = ",".join(
            "[" + ",".join(format_number(x) for x in row) + "]" for row in value.rows()
        )
        return f'{{"type":"matrix","rows":[{rows}]}}'
    if isinstance(value, CausalCharacter):
        return f'{{"type":"character","value":"{value.value}"}}'
    eps = ",".join(format_number(u) for u in (value.eps.u1, value.eps.u2, value.eps.u3))
    return (f'{{"type":"polar","kind":"{value.kind.value}","n":{format_number(value.n)},'
            f'"theta":{format_number(value.theta)},"eps":[{eps}],"sign":{value.sign}}}')


def render_error(src: str, err: ExprError) -> str:
    """Caret-annotated error block pointing into the source line."""
    start = max(0, min(err.start, len(src)))
    end = max(start + 1, min(err.end, len(src) + 1))
    caret = " " * start + "^" * (end - start)
    kind = type(err).__name__
    return f"error: {kind}: {err.message}\n  {src}\n  {caret}"
