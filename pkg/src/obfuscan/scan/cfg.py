"""Control flow graph construction.

Nodes hold straight-line statement runs; compound statements live in the
block where their test is evaluated (so an ``if`` terminates its block and
a loop header is its own block).  Entry and exit are synthetic ids outside
the node list.  Bare nested blocks are transparent containers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..js import ast

ENTRY = 0
EXIT = 1


@dataclass
class CfgNode:
    id: int
    stmts: list[ast.Node] = field(default_factory=list)


@dataclass
class Cfg:
    nodes: list[CfgNode]
    edges: list[tuple[int, int]]
    entry: int = ENTRY
    exit: int = EXIT

    def successors(self, node_id: int) -> list[int]:
        return [b for a, b in self.edges if a == node_id]

    def reachable(self) -> set[int]:
        seen = {self.entry}
        frontier = [self.entry]
        while frontier:
            for nxt in self.successors(frontier.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return seen


@dataclass(frozen=True)
class _JumpCtx:
    break_to: int
    continue_to: int | None  # None for switch entries


class _Builder:
    def __init__(self) -> None:
        self.nodes: list[CfgNode] = []
        self.edges: set[tuple[int, int]] = set()
        self.next_id = 2

    def new_block(self) -> CfgNode:
        node = CfgNode(self.next_id)
        self.next_id += 1
        self.nodes.append(node)
        return node

    def edge(self, src: int, dst: int) -> None:
        self.edges.add((src, dst))

    def header_for(self, current: CfgNode) -> CfgNode:
        """A block to evaluate a loop test in; reuse ``current`` when empty."""
        if not current.stmts:
            return current
        header = self.new_block()
        self.edge(current.id, header.id)
        return header

    # Returns the open block after the statement run, or None when every
    # path diverged (return/break/continue).
    def run(self, stmts: list[ast.Node], current: CfgNode | None, ctx: list[_JumpCtx]) -> CfgNode | None:
        for stmt in stmts:
            if current is None:
                current = self.new_block()  # unreachable continuation
            current = self.statement(stmt, current, ctx)
        return current

    def statement(self, stmt: ast.Node, current: CfgNode, ctx: list[_JumpCtx]) -> CfgNode | None:
        if isinstance(stmt, ast.Block):
            return self.run(stmt.body, current, ctx)

        if isinstance(stmt, ast.If):
            current.stmts.append(stmt)
            then_block = self.new_block()
            self.edge(current.id, then_block.id)
            then_end = self.run(stmt.consequent.body, then_block, ctx)
            else_end = None
            has_else = stmt.alternate is not None
            if has_else:
                else_block = self.new_block()
                self.edge(current.id, else_block.id)
                alt_stmts = (
                    stmt.alternate.body if isinstance(stmt.alternate, ast.Block) else [stmt.alternate]
                )
                else_end = self.run(alt_stmts, else_block, ctx)
            join = self.new_block()
            if not has_else:
                self.edge(current.id, join.id)
            if then_end is not None:
                self.edge(then_end.id, join.id)
            if else_end is not None:
                self.edge(else_end.id, join.id)
            return join

        if isinstance(stmt, (ast.While, ast.For)):
            header = self.header_for(current)
            header.stmts.append(stmt)
            body_block = self.new_block()
            self.edge(header.id, body_block.id)
            after = self.new_block()
            self.edge(header.id, after.id)
            body_end = self.run(stmt.body.body, body_block, ctx + [_JumpCtx(after.id, header.id)])
            if body_end is not None:
                self.edge(body_end.id, header.id)
            return after

        if isinstance(stmt, ast.DoWhile):
            body_block = self.new_block()
            self.edge(current.id, body_block.id)
            cond_block = self.new_block()
            cond_block.stmts.append(stmt)
            after = self.new_block()
            body_end = self.run(
                stmt.body.body, body_block, ctx + [_JumpCtx(after.id, cond_block.id)]
            )
            if body_end is not None:
                self.edge(body_end.id, cond_block.id)
            self.edge(cond_block.id, body_block.id)
            self.edge(cond_block.id, after.id)
            return after

        if isinstance(stmt, ast.Switch):
            current.stmts.append(stmt)
            after = self.new_block()
            inner = ctx + [_JumpCtx(after.id, None)]
            fallthrough: CfgNode | None = None
            has_default = any(case.test is None for case in stmt.cases)
            for case in stmt.cases:
                case_block = self.new_block()
                self.edge(current.id, case_block.id)
                if fallthrough is not None:
                    self.edge(fallthrough.id, case_block.id)
                fallthrough = self.run(case.body, case_block, inner)
            if fallthrough is not None:
                self.edge(fallthrough.id, after.id)
            if not has_default:
                self.edge(current.id, after.id)
            return after

        if isinstance(stmt, ast.Return):
            current.stmts.append(stmt)
            self.edge(current.id, EXIT)
            return None

        if isinstance(stmt, ast.Break):
            current.stmts.append(stmt)
            self.edge(current.id, ctx[-1].break_to)
            return None

        if isinstance(stmt, ast.Continue):
            current.stmts.append(stmt)
            target = next(c.continue_to for c in reversed(ctx) if c.continue_to is not None)
            self.edge(current.id, target)
            return None

        # straight-line statements, function declarations included
        current.stmts.append(stmt)
        return current


def build_cfg(function: ast.Node) -> Cfg:
    """Build the graph of one function body (or a whole program's top level)."""
    body = function.body if isinstance(function, ast.Program) else function.body.body
    builder = _Builder()
    first = builder.new_block()
    builder.edge(ENTRY, first.id)
    last = builder.run(body, first, [])
    if last is not None:
        builder.edge(last.id, EXIT)
    return Cfg(nodes=builder.nodes, edges=sorted(builder.edges))
