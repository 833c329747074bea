"""Deterministic tree-walking evaluator for the JavaScript subset.

Numbers are IEEE doubles (Python floats throughout; no ints leak in).
`var` and function declarations bind function-scoped at the point of
execution; `let`/`const` bind block-scoped. There is no hoisting, no
`this`, and no prototype chain. Every run with the same (program, budget,
seed, source_text) produces an identical Trace.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable, Optional

from . import ast
from .errors import JsRuntimeError
from .printer import format_number, render
from .source import SourceSpan


@dataclass(frozen=True)
class Trace:
    """Observable behavior of one evaluation.

    ``result`` is the display string of the last top-level expression
    statement's value (None if none executed). ``halted`` is set when the
    step budget ran out; output up to that point is preserved.
    """

    output: tuple[str, ...]
    result: Optional[str]
    halted: bool


class JsUndefined:
    _instance: Optional["JsUndefined"] = None

    def __new__(cls) -> "JsUndefined":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "undefined"


UNDEFINED = JsUndefined()


@dataclass
class JsFunction:
    name: Optional[str]
    params: list[str]
    body: ast.Block
    env: "_Scope"


@dataclass
class JsBuiltin:
    name: str
    fn: Callable[[list[object], SourceSpan], object]


@dataclass
class JsRegExp:
    """Literal substring matcher; metacharacters are not interpreted."""

    pattern: str


class _Scope:
    __slots__ = ("vars", "consts", "parent", "is_function")

    def __init__(self, parent: Optional["_Scope"], is_function: bool):
        self.vars: dict[str, object] = {}
        self.consts: set[str] = set()
        self.parent = parent
        self.is_function = is_function

    def lookup(self, name: str) -> object:
        scope: Optional[_Scope] = self
        while scope is not None:
            if name in scope.vars:
                return scope.vars[name]
            scope = scope.parent
        raise KeyError(name)

    def assign(self, name: str, value: object) -> bool:
        scope: Optional[_Scope] = self
        while scope is not None:
            if name in scope.vars:
                if name in scope.consts:
                    return False
                scope.vars[name] = value
                return True
            scope = scope.parent
        raise KeyError(name)

    def function_scope(self) -> "_Scope":
        scope = self
        while not scope.is_function:
            assert scope.parent is not None
            scope = scope.parent
        return scope


class _BudgetExceeded(Exception):
    pass


class _BreakSignal(Exception):
    pass


class _ContinueSignal(Exception):
    pass


class _ReturnSignal(Exception):
    def __init__(self, value: object):
        self.value = value


# --- conversions ------------------------------------------------------------

_NUMERIC_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\Z")


def js_to_string(value: object) -> str:
    if value is UNDEFINED:
        return "undefined"
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        return ",".join(
            "" if item is None or item is UNDEFINED else js_to_string(item) for item in value
        )
    if isinstance(value, dict):
        return "[object Object]"
    if isinstance(value, JsFunction):
        return f"function {value.name or ''}() {{ [code] }}"
    if isinstance(value, JsBuiltin):
        return f"function {value.name}() {{ [native] }}"
    if isinstance(value, JsRegExp):
        return f"/{value.pattern}/"
    raise TypeError(f"unexpected runtime value {value!r}")


def js_to_number(value: object) -> float:
    if isinstance(value, bool):
        return 1.0 if value else 0.0
    if isinstance(value, float):
        return value
    if value is None:
        return 0.0
    if value is UNDEFINED:
        return math.nan
    if isinstance(value, str):
        text = value.strip()
        if not text:
            return 0.0
        if text in ("Infinity", "+Infinity"):
            return math.inf
        if text == "-Infinity":
            return -math.inf
        if _NUMERIC_RE.match(text):
            return float(text)
        return math.nan
    if isinstance(value, (list, dict)):
        return js_to_number(js_to_string(value))
    return math.nan


def js_truthy(value: object) -> bool:
    if value is UNDEFINED or value is None:
        return False
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        return value != 0 and not math.isnan(value)
    if isinstance(value, str):
        return bool(value)
    return True


def js_typeof(value: object) -> str:
    if value is UNDEFINED:
        return "undefined"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, float):
        return "number"
    if isinstance(value, str):
        return "string"
    if isinstance(value, (JsFunction, JsBuiltin)):
        return "function"
    return "object"  # null, arrays, objects, regexps


def js_strict_equals(a: object, b: object) -> bool:
    a_bool, b_bool = isinstance(a, bool), isinstance(b, bool)
    if a_bool or b_bool:
        return a_bool and b_bool and a == b
    if isinstance(a, float) and isinstance(b, float):
        return a == b  # NaN falls out naturally
    if isinstance(a, str) and isinstance(b, str):
        return a == b
    if a is None or b is None or a is UNDEFINED or b is UNDEFINED:
        return a is b
    return a is b  # reference identity for objects/arrays/functions


def _js_div(left: float, right: float) -> float:
    if math.isnan(left) or math.isnan(right):
        return math.nan
    if right == 0:
        if left == 0:
            return math.nan
        sign = math.copysign(1.0, left) * math.copysign(1.0, right)
        return math.inf * sign
    return left / right


def _js_mod(left: float, right: float) -> float:
    if math.isnan(left) or math.isnan(right) or math.isinf(left) or right == 0:
        return math.nan
    if math.isinf(right):
        return left
    return math.fmod(left, right)


def _to_primitive(value: object) -> object:
    if isinstance(value, (list, dict, JsFunction, JsBuiltin, JsRegExp)):
        return js_to_string(value)
    return value


def js_add(a: object, b: object) -> object:
    pa, pb = _to_primitive(a), _to_primitive(b)
    if isinstance(pa, str) or isinstance(pb, str):
        return js_to_string(pa) + js_to_string(pb)
    return js_to_number(pa) + js_to_number(pb)


def _compare(op: str, a: object, b: object) -> bool:
    pa, pb = _to_primitive(a), _to_primitive(b)
    if isinstance(pa, str) and isinstance(pb, str):
        la, lb = pa, pb
    else:
        la, lb = js_to_number(pa), js_to_number(pb)
        if math.isnan(la) or math.isnan(lb):
            return False
    if op == "<":
        return la < lb
    if op == "<=":
        return la <= lb
    if op == ">":
        return la > lb
    return la >= lb


# --- interpreter ------------------------------------------------------------


def evaluate(
    program: ast.Program,
    budget: int = 10_000_000,
    seed: int = 0,
    source_text: Optional[str] = None,
) -> Trace:
    """Run ``program`` and capture its Trace.

    ``budget`` bounds evaluation steps; exceeding it yields halted=True
    rather than an exception. ``source_text`` overrides what selfText()
    returns (defaults to rendering the program by its compact flag).
    """
    interp = _Interp(program, budget, seed, source_text)
    return interp.run()


class _Interp:
    def __init__(
        self,
        program: ast.Program,
        budget: int,
        seed: int,
        source_text: Optional[str],
    ):
        self.program = program
        self.budget = budget
        self.steps = 0
        self.output: list[str] = []
        self.last_result: Optional[str] = None
        self.source_text = source_text
        self._rng_state = (seed ^ 0x5DEECE66D) & 0xFFFFFFFF
        self.globals = self._make_globals()

    def run(self) -> Trace:
        scope = _Scope(self.globals, is_function=True)
        halted = False
        try:
            for stmt in self.program.body:
                value = self.exec_stmt(stmt, scope)
                if isinstance(stmt, ast.ExprStmt):
                    self.last_result = js_to_string(value)
        except _BudgetExceeded:
            halted = True
        except _ReturnSignal:
            raise JsRuntimeError("'return' outside function", self.program.span)
        return Trace(output=tuple(self.output), result=self.last_result, halted=halted)

    # --- builtins ---

    def _make_globals(self) -> _Scope:
        scope = _Scope(None, is_function=True)

        def _print(args: list[object], span: SourceSpan) -> object:
            self.output.append(" ".join(js_to_string(a) for a in args))
            return UNDEFINED

        def _string(args: list[object], span: SourceSpan) -> object:
            return js_to_string(args[0]) if args else ""

        def _number(args: list[object], span: SourceSpan) -> object:
            return js_to_number(args[0]) if args else 0.0

        def _floor(args: list[object], span: SourceSpan) -> object:
            x = js_to_number(args[0]) if args else math.nan
            if math.isnan(x) or math.isinf(x):
                return x
            return float(math.floor(x))

        def _abs(args: list[object], span: SourceSpan) -> object:
            x = js_to_number(args[0]) if args else math.nan
            return abs(x)

        def _rand(args: list[object], span: SourceSpan) -> object:
            # 32-bit LCG (Numerical Recipes constants); deterministic per seed.
            self._rng_state = (1664525 * self._rng_state + 1013904223) & 0xFFFFFFFF
            return self._rng_state / 4294967296.0

        def _regexp(args: list[object], span: SourceSpan) -> object:
            pattern = js_to_string(args[0]) if args else ""
            return JsRegExp(pattern)

        def _self_text(args: list[object], span: SourceSpan) -> object:
            if self.source_text is None:
                self.source_text = render(self.program)
            return self.source_text

        scope.vars.update({
            "print": JsBuiltin("print", _print),
            "String": JsBuiltin("String", _string),
            "Number": JsBuiltin("Number", _number),
            "Math": {"floor": JsBuiltin("floor", _floor), "abs": JsBuiltin("abs", _abs)},
            "rand": JsBuiltin("rand", _rand),
            "RegExp": JsBuiltin("RegExp", _regexp),
            "selfText": JsBuiltin("selfText", _self_text),
        })
        return scope

    # --- bookkeeping ---

    def tick(self) -> None:
        self.steps += 1
        if self.steps > self.budget:
            raise _BudgetExceeded()

    # --- statements ---

    def exec_stmt(self, node: ast.Node, scope: _Scope) -> object:
        self.tick()
        kind = type(node)
        if kind is ast.ExprStmt:
            return self.eval_expr(node.expression, scope)
        if kind is ast.VarDecl:
            self.exec_var_decl(node, scope)
        elif kind is ast.FunctionDecl:
            fn = JsFunction(node.name, list(node.params), node.body, scope)
            target = scope.function_scope()
            target.vars[node.name] = fn
            target.consts.discard(node.name)
        elif kind is ast.Block:
            self.exec_block(node, _Scope(scope, is_function=False))
        elif kind is ast.If:
            if js_truthy(self.eval_expr(node.test, scope)):
                self.exec_block(node.consequent, _Scope(scope, is_function=False))
            elif node.alternate is not None:
                if isinstance(node.alternate, ast.If):
                    self.exec_stmt(node.alternate, scope)
                else:
                    self.exec_block(node.alternate, _Scope(scope, is_function=False))
        elif kind is ast.While:
            while js_truthy(self.eval_expr(node.test, scope)):
                self.tick()
                try:
                    self.exec_block(node.body, _Scope(scope, is_function=False))
                except _BreakSignal:
                    break
                except _ContinueSignal:
                    continue
        elif kind is ast.DoWhile:
            while True:
                self.tick()
                try:
                    self.exec_block(node.body, _Scope(scope, is_function=False))
                except _BreakSignal:
                    break
                except _ContinueSignal:
                    pass
                if not js_truthy(self.eval_expr(node.test, scope)):
                    break
        elif kind is ast.For:
            loop_scope = _Scope(scope, is_function=False)
            if isinstance(node.init, ast.VarDecl):
                self.exec_var_decl(node.init, loop_scope)
            elif node.init is not None:
                self.eval_expr(node.init, loop_scope)
            while node.test is None or js_truthy(self.eval_expr(node.test, loop_scope)):
                self.tick()
                try:
                    self.exec_block(node.body, _Scope(loop_scope, is_function=False))
                except _BreakSignal:
                    break
                except _ContinueSignal:
                    pass
                if node.update is not None:
                    self.eval_expr(node.update, loop_scope)
        elif kind is ast.Switch:
            self.exec_switch(node, scope)
        elif kind is ast.Return:
            value = UNDEFINED if node.argument is None else self.eval_expr(node.argument, scope)
            raise _ReturnSignal(value)
        elif kind is ast.Break:
            raise _BreakSignal()
        elif kind is ast.Continue:
            raise _ContinueSignal()
        elif kind is ast.EmptyStmt or kind is ast.DebuggerStmt:
            pass
        else:
            raise JsRuntimeError(f"cannot execute {kind.__name__}", node.span)
        return UNDEFINED

    def exec_block(self, block: ast.Block, scope: _Scope) -> None:
        for stmt in block.body:
            self.exec_stmt(stmt, scope)

    def exec_var_decl(self, node: ast.VarDecl, scope: _Scope) -> None:
        for decl in node.declarators:
            if node.kind == "var":
                target = scope.function_scope()
                if decl.init is not None:
                    target.vars[decl.name] = self.eval_expr(decl.init, scope)
                elif decl.name not in target.vars:
                    # Re-declaring without an initializer keeps the old value.
                    target.vars[decl.name] = UNDEFINED
            else:
                if decl.name in scope.vars:
                    raise JsRuntimeError(f"redeclaration of '{decl.name}'", decl.span)
                value = UNDEFINED if decl.init is None else self.eval_expr(decl.init, scope)
                scope.vars[decl.name] = value
                if node.kind == "const":
                    scope.consts.add(decl.name)

    def exec_switch(self, node: ast.Switch, scope: _Scope) -> None:
        discriminant = self.eval_expr(node.discriminant, scope)
        body_scope = _Scope(scope, is_function=False)
        start = None
        for i, case in enumerate(node.cases):
            if case.test is not None and js_strict_equals(
                discriminant, self.eval_expr(case.test, body_scope)
            ):
                start = i
                break
        if start is None:
            for i, case in enumerate(node.cases):
                if case.test is None:
                    start = i
                    break
        if start is None:
            return
        try:
            for case in node.cases[start:]:
                for stmt in case.body:
                    self.exec_stmt(stmt, body_scope)
        except _BreakSignal:
            pass

    # --- expressions ---

    def eval_expr(self, node: ast.Node, scope: _Scope) -> object:
        self.tick()
        kind = type(node)
        if kind is ast.Literal:
            return node.value
        if kind is ast.Identifier:
            try:
                return scope.lookup(node.name)
            except KeyError:
                raise JsRuntimeError(f"'{node.name}' is not defined", node.span) from None
        if kind is ast.Binary:
            return self.eval_binary(node, scope)
        if kind is ast.Unary:
            return self.eval_unary(node, scope)
        if kind is ast.Assign:
            return self.eval_assign(node, scope)
        if kind is ast.Conditional:
            if js_truthy(self.eval_expr(node.test, scope)):
                return self.eval_expr(node.consequent, scope)
            return self.eval_expr(node.alternate, scope)
        if kind is ast.Call:
            return self.eval_call(node, scope)
        if kind is ast.New:
            callee = self.eval_expr(node.callee, scope)
            args = [self.eval_expr(a, scope) for a in node.args]
            return self.call_value(callee, args, node.span)
        if kind is ast.Member:
            obj = self.eval_expr(node.obj, scope)
            if node.computed:
                key = self.eval_expr(node.index, scope)
                return self.get_member(obj, key, node.span, computed=True)
            return self.get_member(obj, node.name, node.span, computed=False)
        if kind is ast.ArrayLiteral:
            return [self.eval_expr(e, scope) for e in node.elements]
        if kind is ast.ObjectLiteral:
            return {prop.key: self.eval_expr(prop.value, scope) for prop in node.properties}
        if kind is ast.FunctionExpr:
            return JsFunction(node.name, list(node.params), node.body, scope)
        raise JsRuntimeError(f"cannot evaluate {kind.__name__}", node.span)

    def eval_binary(self, node: ast.Binary, scope: _Scope) -> object:
        op = node.op
        if op == "&&":
            left = self.eval_expr(node.left, scope)
            return self.eval_expr(node.right, scope) if js_truthy(left) else left
        if op == "||":
            left = self.eval_expr(node.left, scope)
            return left if js_truthy(left) else self.eval_expr(node.right, scope)
        left = self.eval_expr(node.left, scope)
        right = self.eval_expr(node.right, scope)
        if op == "+":
            return js_add(left, right)
        if op == "-":
            return js_to_number(left) - js_to_number(right)
        if op == "*":
            return js_to_number(left) * js_to_number(right)
        if op == "/":
            return _js_div(js_to_number(left), js_to_number(right))
        if op == "%":
            return _js_mod(js_to_number(left), js_to_number(right))
        if op == "===":
            return js_strict_equals(left, right)
        if op == "!==":
            return not js_strict_equals(left, right)
        if op in ("<", "<=", ">", ">="):
            return _compare(op, left, right)
        raise JsRuntimeError(f"unsupported operator '{op}'", node.span)

    def eval_unary(self, node: ast.Unary, scope: _Scope) -> object:
        if node.op == "typeof" and isinstance(node.operand, ast.Identifier):
            # typeof tolerates unresolved names.
            try:
                return js_typeof(scope.lookup(node.operand.name))
            except KeyError:
                return "undefined"
        value = self.eval_expr(node.operand, scope)
        if node.op == "!":
            return not js_truthy(value)
        if node.op == "-":
            return -js_to_number(value)
        if node.op == "+":
            return js_to_number(value)
        if node.op == "typeof":
            return js_typeof(value)
        raise JsRuntimeError(f"unsupported unary operator '{node.op}'", node.span)

    def eval_assign(self, node: ast.Assign, scope: _Scope) -> object:
        target = node.target
        if isinstance(target, ast.Identifier):
            if node.op == "=":
                value = self.eval_expr(node.value, scope)
            else:
                old = self.eval_expr(target, scope)
                value = self.apply_compound(node.op, old, self.eval_expr(node.value, scope))
            try:
                if not scope.assign(target.name, value):
                    raise JsRuntimeError(f"assignment to constant '{target.name}'", node.span)
            except KeyError:
                raise JsRuntimeError(f"'{target.name}' is not defined", node.span) from None
            return value
        if isinstance(target, ast.Member):
            obj = self.eval_expr(target.obj, scope)
            if target.computed:
                key = self.eval_expr(target.index, scope)
            else:
                key = target.name
            if node.op == "=":
                value = self.eval_expr(node.value, scope)
            else:
                old = self.get_member(obj, key, target.span, computed=target.computed)
                value = self.apply_compound(node.op, old, self.eval_expr(node.value, scope))
            self.set_member(obj, key, value, target.span, computed=target.computed)
            return value
        raise JsRuntimeError("invalid assignment target", node.span)

    def apply_compound(self, op: str, old: object, operand: object) -> object:
        if op == "+=":
            return js_add(old, operand)
        if op == "-=":
            return js_to_number(old) - js_to_number(operand)
        if op == "*=":
            return js_to_number(old) * js_to_number(operand)
        if op == "/=":
            return _js_div(js_to_number(old), js_to_number(operand))
        return _js_mod(js_to_number(old), js_to_number(operand))

    def eval_call(self, node: ast.Call, scope: _Scope) -> object:
        callee = self.eval_expr(node.callee, scope)
        args = [self.eval_expr(a, scope) for a in node.args]
        return self.call_value(callee, args, node.span)

    def call_value(self, callee: object, args: list[object], span: SourceSpan) -> object:
        if isinstance(callee, JsBuiltin):
            return callee.fn(args, span)
        if not isinstance(callee, JsFunction):
            raise JsRuntimeError(f"{js_typeof(callee)} is not a function", span)
        call_scope = _Scope(callee.env, is_function=True)
        if callee.name:
            call_scope.vars[callee.name] = callee
        for i, param in enumerate(callee.params):
            call_scope.vars[param] = args[i] if i < len(args) else UNDEFINED
        try:
            self.exec_block(callee.body, call_scope)
        except _ReturnSignal as signal:
            return signal.value
        return UNDEFINED

    # --- member access ---

    def get_member(self, obj: object, key: object, span: SourceSpan, computed: bool) -> object:
        if obj is None or obj is UNDEFINED:
            raise JsRuntimeError(f"cannot read properties of {js_to_string(obj)}", span)
        if computed and isinstance(obj, (list, str)) and isinstance(key, float):
            if key == int(key) and 0 <= int(key) < len(obj):
                return obj[int(key)]
            return UNDEFINED
        name = key if isinstance(key, str) else js_to_string(key)
        if isinstance(obj, dict):
            return obj.get(name, UNDEFINED)
        if isinstance(obj, str):
            return self.string_member(obj, name, span)
        if isinstance(obj, list):
            return self.array_member(obj, name, span)
        if isinstance(obj, JsRegExp):
            if name == "test":
                regexp = obj

                def _test(args: list[object], call_span: SourceSpan) -> object:
                    text = js_to_string(args[0]) if args else "undefined"
                    return regexp.pattern in text

                return JsBuiltin("test", _test)
            return UNDEFINED
        return UNDEFINED  # numbers, booleans, functions: no own properties

    def set_member(self, obj: object, key: object, value: object, span: SourceSpan,
                   computed: bool) -> None:
        if isinstance(obj, dict):
            name = key if isinstance(key, str) else js_to_string(key)
            obj[name] = value
            return
        if isinstance(obj, list) and computed and isinstance(key, float) and key == int(key) \
                and key >= 0:
            index = int(key)
            while len(obj) <= index:
                obj.append(UNDEFINED)
            obj[index] = value
            return
        raise JsRuntimeError("cannot set property on this value", span)

    def string_member(self, text: str, name: str, span: SourceSpan) -> object:
        if name == "length":
            return float(len(text))

        if name == "indexOf":
            def _index_of(args: list[object], s: SourceSpan) -> object:
                needle = js_to_string(args[0]) if args else "undefined"
                start = 0
                if len(args) > 1:
                    start = max(0, _to_index(args[1], len(text)))
                return float(text.find(needle, start))
            return JsBuiltin("indexOf", _index_of)

        if name == "slice":
            def _slice(args: list[object], s: SourceSpan) -> object:
                lo, hi = _slice_bounds(len(text), args)
                return text[lo:hi]
            return JsBuiltin("slice", _slice)

        if name == "split":
            def _split(args: list[object], s: SourceSpan) -> object:
                if not args or args[0] is UNDEFINED:
                    return [text]
                sep = js_to_string(args[0])
                if sep == "":
                    return list(text)
                return text.split(sep)
            return JsBuiltin("split", _split)

        if name == "charCodeAt":
            def _char_code_at(args: list[object], s: SourceSpan) -> object:
                index = _to_index(args[0], len(text)) if args else 0
                if 0 <= index < len(text):
                    return float(ord(text[index]))
                return math.nan
            return JsBuiltin("charCodeAt", _char_code_at)

        if name == "concat":
            def _concat(args: list[object], s: SourceSpan) -> object:
                return text + "".join(js_to_string(a) for a in args)
            return JsBuiltin("concat", _concat)

        return UNDEFINED

    def array_member(self, items: list, name: str, span: SourceSpan) -> object:
        if name == "length":
            return float(len(items))

        if name == "push":
            def _push(args: list[object], s: SourceSpan) -> object:
                items.extend(args)
                return float(len(items))
            return JsBuiltin("push", _push)

        if name == "join":
            def _join(args: list[object], s: SourceSpan) -> object:
                sep = "," if not args or args[0] is UNDEFINED else js_to_string(args[0])
                return sep.join(
                    "" if item is None or item is UNDEFINED else js_to_string(item)
                    for item in items
                )
            return JsBuiltin("join", _join)

        if name == "slice":
            def _slice(args: list[object], s: SourceSpan) -> object:
                lo, hi = _slice_bounds(len(items), args)
                return items[lo:hi]
            return JsBuiltin("slice", _slice)

        return UNDEFINED


def _to_index(value: object, length: int) -> int:
    x = js_to_number(value)
    if math.isnan(x):
        return 0
    return int(max(min(x, length), -length))


def _slice_bounds(length: int, args: list[object]) -> tuple[int, int]:
    def norm(value: object, default: int) -> int:
        if value is UNDEFINED:
            return default
        x = js_to_number(value)
        if math.isnan(x):
            x = 0.0
        i = int(x)
        if i < 0:
            return max(length + i, 0)
        return min(i, length)

    start = norm(args[0], 0) if len(args) >= 1 else 0
    end = norm(args[1], length) if len(args) >= 2 else length
    return start, max(start, end)
