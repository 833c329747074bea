"""Semantics-preserving program transforms.

Every ``tf_*`` function deep-copies its input and returns a new tree; the
argument program is never mutated.  ``apply`` chains the techniques of a
config in canonical order with one seeded RNG per technique, so results are
reproducible from (program, config) alone.
"""

from __future__ import annotations

import copy
import random
from typing import Callable

from ..js import ast
from ..js.ast import collect_names, walk
from ..js.source import SYNTHETIC_SPAN
from .config import ObfuscationConfig

# Canonical stacking order. Structural rewrites run before injections so the
# injected material is itself untouched; CMP is a pure layout flag and last.
APPLY_ORDER = ("SIMP", "CFF", "DCI", "SS", "SA", "DP", "SD", "CMP")

_HEX_DIGITS = "0123456789abcdef"


class TransformError(Exception):
    pass


class _NamePool:
    """Fresh ``_0x`` identifiers, collision-checked against the whole tree."""

    def __init__(self, program: ast.Program, rng: random.Random) -> None:
        self.used = collect_names(program)
        self.rng = rng

    def fresh(self) -> str:
        while True:
            name = "_0x" + "".join(self.rng.choice(_HEX_DIGITS) for _ in range(4))
            if name not in self.used:
                self.used.add(name)
                return name


def _num(value: float) -> ast.Literal:
    return ast.Literal(float(value), SYNTHETIC_SPAN)


def _str(value: str) -> ast.Literal:
    return ast.Literal(value, SYNTHETIC_SPAN)


def _ident(name: str) -> ast.Identifier:
    return ast.Identifier(name, SYNTHETIC_SPAN)


def _assign_stmt(name: str, value: ast.Node) -> ast.ExprStmt:
    return ast.ExprStmt(ast.Assign("=", _ident(name), value, SYNTHETIC_SPAN), SYNTHETIC_SPAN)


# Opaque predicates: for every integer n, a*n*n + n is even, since a*n*n + n
# sits on the parity of (a+1)*n for the coefficients below.
_OPAQUE_COEFFS = (7, 1, 3)


def make_opaque_predicate(rng: random.Random, truth: bool) -> ast.Node:
    """Build a constant-looking comparison that always evaluates to ``truth``."""
    a = rng.choice(_OPAQUE_COEFFS)
    n = float(rng.randrange(2, 1000))
    poly = ast.Binary(
        "+",
        ast.Binary("*", ast.Binary("*", _num(a), _num(n), SYNTHETIC_SPAN), _num(n), SYNTHETIC_SPAN),
        _num(n),
        SYNTHETIC_SPAN,
    )
    parity = ast.Binary("%", poly, _num(2), SYNTHETIC_SPAN)
    op = "===" if truth else "!=="
    return ast.Binary(op, parity, _num(0), SYNTHETIC_SPAN)


# ---------------------------------------------------------------------------
# SIMP: merge adjacent declarations, fold symmetric branches.


def tf_simplify(program: ast.Program) -> ast.Program:
    prog = copy.deepcopy(program)
    _simplify_under(prog)
    return prog


def _simplify_under(node: ast.Node) -> None:
    for child in ast.iter_children(node):
        _simplify_under(child)
    if isinstance(node, (ast.Program, ast.Block, ast.SwitchCase)):
        node.body = _simplify_stmt_list(node.body)


def _simplify_stmt_list(stmts: list[ast.Node]) -> list[ast.Node]:
    rewritten = [_fold_if(s) if isinstance(s, ast.If) else s for s in stmts]
    merged: list[ast.Node] = []
    for stmt in rewritten:
        prev = merged[-1] if merged else None
        if (
            isinstance(stmt, ast.VarDecl)
            and isinstance(prev, ast.VarDecl)
            and prev.kind == stmt.kind
        ):
            prev.declarators.extend(stmt.declarators)
        else:
            merged.append(stmt)
    return merged


def _single_stmt(block: ast.Node | None) -> ast.Node | None:
    if isinstance(block, ast.Block) and len(block.body) == 1:
        return block.body[0]
    return None


def _fold_if(stmt: ast.If) -> ast.Node:
    then_one = _single_stmt(stmt.consequent)
    else_one = _single_stmt(stmt.alternate)
    if then_one is None or else_one is None:
        return stmt

    # if (t) { x = a; } else { x = b; }  ->  x = t ? a : b;
    if (
        isinstance(then_one, ast.ExprStmt)
        and isinstance(else_one, ast.ExprStmt)
        and isinstance(then_one.expression, ast.Assign)
        and isinstance(else_one.expression, ast.Assign)
        and isinstance(then_one.expression.target, ast.Identifier)
        and isinstance(else_one.expression.target, ast.Identifier)
        and then_one.expression.target.name == else_one.expression.target.name
        and then_one.expression.op == else_one.expression.op
    ):
        cond = ast.Conditional(
            stmt.test, then_one.expression.value, else_one.expression.value, SYNTHETIC_SPAN
        )
        assign = ast.Assign(
            then_one.expression.op, then_one.expression.target, cond, SYNTHETIC_SPAN
        )
        return ast.ExprStmt(assign, stmt.span)

    # if (t) { return a; } else { return b; }  ->  return t ? a : b;
    if (
        isinstance(then_one, ast.Return)
        and isinstance(else_one, ast.Return)
        and then_one.argument is not None
        and else_one.argument is not None
    ):
        cond = ast.Conditional(stmt.test, then_one.argument, else_one.argument, SYNTHETIC_SPAN)
        return ast.Return(cond, stmt.span)

    return stmt


# ---------------------------------------------------------------------------
# CFF: rewrite function bodies into a dispatcher loop over scrambled cases.


def tf_flatten(program: ast.Program, rng: random.Random, min_stmts: int = 2) -> ast.Program:
    prog = copy.deepcopy(program)
    pool = _NamePool(prog, rng)
    threshold = max(min_stmts, 1)
    functions = [n for n in walk(prog) if isinstance(n, (ast.FunctionDecl, ast.FunctionExpr))]
    for fn in functions:
        if len(fn.body.body) >= threshold:
            fn.body.body = _flatten_body(fn.body.body, rng, pool)
    return prog


def _hoist_decl(stmt: ast.Node, hoisted: list[str]) -> list[ast.Node]:
    """Strip a declaration down to plain assignments, recording its names."""
    if not isinstance(stmt, ast.VarDecl):
        return [stmt]
    out: list[ast.Node] = []
    for decl in stmt.declarators:
        if decl.name not in hoisted:
            hoisted.append(decl.name)
        if decl.init is not None:
            out.append(_assign_stmt(decl.name, decl.init))
    return out


def _flatten_body(stmts: list[ast.Node], rng: random.Random, pool: _NamePool) -> list[ast.Node]:
    n = len(stmts)
    states = list(range(n))
    rng.shuffle(states)
    sentinel = n
    dispatch = pool.fresh()

    hoisted: list[str] = []
    cases: list[ast.SwitchCase] = []
    for i, stmt in enumerate(stmts):
        group = _hoist_decl(stmt, hoisted)
        nxt = states[i + 1] if i + 1 < n else sentinel
        body = group + [
            _assign_stmt(dispatch, _num(nxt)),
            ast.Break(SYNTHETIC_SPAN),
        ]
        cases.append(ast.SwitchCase(_num(states[i]), body, SYNTHETIC_SPAN))

    # Scramble the textual case order; force a swap when the shuffle happens
    # to reproduce execution order, so on-the-page order never matches it.
    order = list(range(n))
    rng.shuffle(order)
    if order == list(range(n)) and n >= 2:
        order[0], order[1] = order[1], order[0]
    cases = [cases[i] for i in order]

    switch = ast.Switch(_ident(dispatch), cases, SYNTHETIC_SPAN)
    loop = ast.While(
        ast.Binary("!==", _ident(dispatch), _num(sentinel), SYNTHETIC_SPAN),
        ast.Block([switch], SYNTHETIC_SPAN),
        SYNTHETIC_SPAN,
    )

    out: list[ast.Node] = []
    if hoisted:
        decls = [ast.Declarator(name, None, SYNTHETIC_SPAN) for name in hoisted]
        out.append(ast.VarDecl("var", decls, SYNTHETIC_SPAN))
    out.append(
        ast.VarDecl("var", [ast.Declarator(dispatch, _num(states[0]), SYNTHETIC_SPAN)], SYNTHETIC_SPAN)
    )
    out.append(loop)
    return out


# ---------------------------------------------------------------------------
# DCI: guard unreachable arithmetic behind opaque predicates.


def tf_dead_code(program: ast.Program, rng: random.Random, ratio: float = 0.3) -> ast.Program:
    prog = copy.deepcopy(program)
    pool = _NamePool(prog, rng)
    holders = [n for n in walk(prog) if isinstance(n, (ast.Program, ast.Block))]
    for holder in holders:
        if rng.random() < ratio:
            _inject_dead_code(holder, rng, pool, allow_wrap=not isinstance(holder, ast.Program))
    return prog


def _dead_statements(rng: random.Random, pool: _NamePool) -> list[ast.Node]:
    a, b = pool.fresh(), pool.fresh()
    k = [float(rng.randrange(2, 98)) for _ in range(4)]
    candidates: list[ast.Node] = [
        ast.VarDecl("var", [ast.Declarator(a, _num(k[0]), SYNTHETIC_SPAN)], SYNTHETIC_SPAN),
        _assign_stmt(
            a,
            ast.Binary(
                "+", ast.Binary("*", _ident(a), _num(k[1]), SYNTHETIC_SPAN), _num(k[2]), SYNTHETIC_SPAN
            ),
        ),
        ast.VarDecl(
            "var",
            [ast.Declarator(b, ast.Binary("%", _ident(a), _num(k[3]), SYNTHETIC_SPAN), SYNTHETIC_SPAN)],
            SYNTHETIC_SPAN,
        ),
        _assign_stmt(
            b,
            ast.Binary(
                "+", _ident(b), ast.Binary("*", _ident(a), _ident(a), SYNTHETIC_SPAN), SYNTHETIC_SPAN
            ),
        ),
    ]
    return candidates[: rng.randrange(2, 5)]


def _inject_dead_code(
    holder: ast.Node, rng: random.Random, pool: _NamePool, allow_wrap: bool
) -> None:
    body = holder.body
    dead = ast.Block(_dead_statements(rng, pool), SYNTHETIC_SPAN)
    # Form A drops an if(false-looking){...} anywhere; form B splits the block
    # and hides its tail behind a true-looking test with the dead code as the
    # else branch.  At program top level only form A is used: the trace keeps
    # its meaning only while the final expression statement stays top-level.
    if allow_wrap and rng.random() < 0.5:
        split = rng.randrange(0, len(body) + 1)
        tail = ast.Block(body[split:], SYNTHETIC_SPAN)
        guard = ast.If(make_opaque_predicate(rng, True), tail, dead, SYNTHETIC_SPAN)
        body[split:] = [guard]
    else:
        guard = ast.If(make_opaque_predicate(rng, False), dead, None, SYNTHETIC_SPAN)
        body.insert(rng.randrange(0, len(body) + 1), guard)


# ---------------------------------------------------------------------------
# SS: split long string literals into concatenation chains.


def _string_literal_slots(root: ast.Node) -> list[tuple[ast.Node, str, int | None, ast.Literal]]:
    """Every (owner, field, index, literal) slot holding a string literal."""
    slots = []
    for node in walk(root):
        for name, value in ast.child_fields(node):
            if isinstance(value, ast.Literal) and type(value.value) is str:
                slots.append((node, name, None, value))
            elif isinstance(value, list):
                for i, item in enumerate(value):
                    if isinstance(item, ast.Literal) and type(item.value) is str:
                        slots.append((node, name, i, item))
    return slots


def _replace_slot(owner: ast.Node, field: str, index: int | None, new: ast.Node) -> None:
    if index is None:
        setattr(owner, field, new)
    else:
        getattr(owner, field)[index] = new


def tf_split_strings(program: ast.Program, chunk_len: int = 4) -> ast.Program:
    if chunk_len < 1:
        raise TransformError(f"chunk_len must be >= 1, got {chunk_len}")
    prog = copy.deepcopy(program)
    for owner, field, index, lit in _string_literal_slots(prog):
        text = lit.value
        if len(text) <= chunk_len:
            continue
        chunks = [text[i : i + chunk_len] for i in range(0, len(text), chunk_len)]
        expr: ast.Node = _str(chunks[0])
        for chunk in chunks[1:]:
            expr = ast.Binary("+", expr, _str(chunk), SYNTHETIC_SPAN)
        _replace_slot(owner, field, index, expr)
    return prog


# ---------------------------------------------------------------------------
# SA: pool string literals into a shuffled table behind a decoder function.


def tf_string_array(
    program: ast.Program, rng: random.Random, index_shift: int = 0
) -> ast.Program:
    prog = copy.deepcopy(program)
    slots = _string_literal_slots(prog)
    seen: dict[str, None] = {}
    for _, _, _, lit in slots:
        if len(lit.value) >= 1:
            seen.setdefault(lit.value)
    entries = list(seen)
    if not entries:
        return prog

    rng.shuffle(entries)
    table_len = len(entries)
    entry_index = {text: i for i, text in enumerate(entries)}
    # Keep decoder arithmetic non-negative: (key + shift) % len stays a valid
    # index only while key + shift >= 0.
    shift = index_shift % table_len

    pool = _NamePool(prog, rng)
    table_name = pool.fresh()
    decoder_name = pool.fresh()
    param = pool.fresh()

    for owner, field, index, lit in slots:
        if len(lit.value) < 1:
            continue
        key = (entry_index[lit.value] - shift) % table_len
        call = ast.Call(_ident(decoder_name), [_num(key)], SYNTHETIC_SPAN)
        _replace_slot(owner, field, index, call)

    table = ast.VarDecl(
        "var",
        [
            ast.Declarator(
                table_name,
                ast.ArrayLiteral([_str(text) for text in entries], SYNTHETIC_SPAN),
                SYNTHETIC_SPAN,
            )
        ],
        SYNTHETIC_SPAN,
    )
    lookup = ast.Member(
        _ident(table_name),
        computed=True,
        name=None,
        index=ast.Binary(
            "%",
            ast.Binary("+", _ident(param), _num(shift), SYNTHETIC_SPAN),
            _num(table_len),
            SYNTHETIC_SPAN,
        ),
        span=SYNTHETIC_SPAN,
    )
    decoder = ast.FunctionDecl(
        decoder_name,
        [param],
        ast.Block([ast.Return(lookup, SYNTHETIC_SPAN)], SYNTHETIC_SPAN),
        SYNTHETIC_SPAN,
    )
    prog.body[:0] = [table, decoder]
    return prog


# ---------------------------------------------------------------------------
# DP: drop debugger statements at every entry point.


def tf_debug_protection(program: ast.Program) -> ast.Program:
    prog = copy.deepcopy(program)
    functions = [n for n in walk(prog) if isinstance(n, (ast.FunctionDecl, ast.FunctionExpr))]
    for fn in functions:
        fn.body.body.insert(0, ast.DebuggerStmt(SYNTHETIC_SPAN))
    prog.body.insert(0, ast.DebuggerStmt(SYNTHETIC_SPAN))
    return prog


# ---------------------------------------------------------------------------
# SD: run the program only when its own source text is in compact form.


def tf_self_defending(program: ast.Program, rng: random.Random) -> ast.Program:
    prog = copy.deepcopy(program)
    pool = _NamePool(prog, rng)
    guard_name = pool.fresh()
    marker_name = pool.fresh()

    guard = ast.FunctionDecl(
        guard_name, [], ast.Block(list(prog.body), SYNTHETIC_SPAN), SYNTHETIC_SPAN
    )
    marker = ast.VarDecl(
        "var", [ast.Declarator(marker_name, _num(1), SYNTHETIC_SPAN)], SYNTHETIC_SPAN
    )
    # The probe pattern "<marker>=1" only occurs in the compact rendering of
    # the marker declaration; it is built by concatenation so the pattern
    # never appears verbatim inside its own source.
    pattern = ast.Binary("+", _str(marker_name), _str("=1"), SYNTHETIC_SPAN)
    regexp = ast.Call(_ident("RegExp"), [pattern], SYNTHETIC_SPAN)
    test = ast.Call(
        ast.Member(regexp, computed=False, name="test", index=None, span=SYNTHETIC_SPAN),
        [ast.Call(_ident("selfText"), [], SYNTHETIC_SPAN)],
        SYNTHETIC_SPAN,
    )
    probe = ast.Binary(
        "&&", test, ast.Call(_ident(guard_name), [], SYNTHETIC_SPAN), SYNTHETIC_SPAN
    )

    prog.body = [guard, marker, ast.ExprStmt(probe, SYNTHETIC_SPAN)]
    prog.requires_compact = True
    return prog


# ---------------------------------------------------------------------------
# CMP: flip the layout flag; the printers do the rest.


def tf_compact(program: ast.Program) -> ast.Program:
    prog = copy.deepcopy(program)
    prog.compact = True
    return prog


def apply(program: ast.Program, config: ObfuscationConfig) -> ast.Program:
    """Apply every technique of ``config`` in canonical order."""
    if not config.techniques:
        raise TransformError("config selects no techniques")
    effective = set(config.effective_techniques)
    unknown = effective - set(APPLY_ORDER)
    if unknown:
        raise TransformError(f"unknown techniques: {sorted(unknown)}")

    prog = program
    params = config.params
    for index, tech in enumerate(APPLY_ORDER):
        if tech not in effective:
            continue
        rng = random.Random(config.seed * len(APPLY_ORDER) + index)
        if tech == "SIMP":
            prog = tf_simplify(prog)
        elif tech == "CFF":
            prog = tf_flatten(prog, rng, params.cff_min_stmts)
        elif tech == "DCI":
            prog = tf_dead_code(prog, rng, params.dci_ratio)
        elif tech == "SS":
            prog = tf_split_strings(prog, params.ss_chunk_len)
        elif tech == "SA":
            prog = tf_string_array(prog, rng, params.sa_index_shift)
        elif tech == "DP":
            prog = tf_debug_protection(prog)
        elif tech == "SD":
            prog = tf_self_defending(prog, rng)
        elif tech == "CMP":
            prog = tf_compact(prog)
    if prog.requires_compact and not prog.compact:
        raise TransformError("self-defending output must be rendered compact")
    return prog
