"""Tests for control-flow graph construction."""

from __future__ import annotations

from obfuscan.js import ast, parse_source
from obfuscan.scan.cfg import ENTRY, EXIT, build_cfg


def cfg_of(src):
    return build_cfg(parse_source(src))


def fn_cfg(src, index=0):
    program = parse_source(src)
    fns = [s for s in program.body if isinstance(s, ast.FunctionDecl)]
    return build_cfg(fns[index])


def node_map(cfg):
    return {n.id: n for n in cfg.nodes}


def placeable(stmts):
    """Every statement the builder should assign to exactly one block."""
    out = []
    for s in stmts:
        if isinstance(s, ast.Block):
            out.extend(placeable(s.body))
            continue
        out.append(s)
        if isinstance(s, ast.If):
            out.extend(placeable(s.consequent.body))
            if s.alternate is not None:
                alt = s.alternate.body if isinstance(s.alternate, ast.Block) else [s.alternate]
                out.extend(placeable(alt))
        elif isinstance(s, (ast.While, ast.For, ast.DoWhile)):
            out.extend(placeable(s.body.body))
        elif isinstance(s, ast.Switch):
            for case in s.cases:
                out.extend(placeable(case.body))
    return out


def test_straight_line_is_one_block():
    cfg = cfg_of("var a = 1;\nvar b = 2;\nprint(a + b);\n")
    assert len(cfg.nodes) == 1
    assert len(cfg.nodes[0].stmts) == 3
    assert cfg.edges == [(ENTRY, 2), (2, EXIT)]


def test_if_else_is_a_diamond():
    cfg = cfg_of("var x = 1;\nif (x) {\n  print(1);\n} else {\n  print(2);\n}\nprint(3);\n")
    assert len(cfg.nodes) == 4
    assert cfg.edges == [(ENTRY, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, EXIT)]
    nodes = node_map(cfg)
    # the branch statement terminates the block it was appended to
    assert isinstance(nodes[2].stmts[-1], ast.If)
    assert isinstance(nodes[5].stmts[0], ast.ExprStmt)


def test_if_without_else_has_skip_edge():
    cfg = cfg_of("var x = 1;\nif (x) {\n  print(1);\n}\nprint(2);\n")
    assert len(cfg.nodes) == 3
    assert cfg.edges == [(ENTRY, 2), (2, 3), (2, 4), (3, 4), (4, EXIT)]


def test_else_if_chain_places_nested_if():
    src = "var x = 2;\nif (x === 1) {\n  print(1);\n} else if (x === 2) {\n  print(2);\n}\nprint(3);\n"
    cfg = cfg_of(src)
    program = parse_source(src)
    expected = placeable(program.body)
    placed = [s for n in cfg.nodes for s in n.stmts]
    assert len(placed) == len(expected)


def test_while_has_back_edge_and_exit_edge():
    cfg = cfg_of("var i = 0;\nwhile (i < 3) {\n  i = i + 1;\n}\nprint(i);\n")
    assert cfg.edges == [(ENTRY, 2), (2, 3), (3, 4), (3, 5), (4, 3), (5, EXIT)]
    nodes = node_map(cfg)
    assert isinstance(nodes[3].stmts[0], ast.While)


def test_while_reuses_empty_entry_block_as_header():
    cfg = cfg_of("while (x) {\n  x = 0;\n}\n")
    assert cfg.edges == [(ENTRY, 2), (2, 3), (2, 4), (3, 2), (4, EXIT)]


def test_for_behaves_like_while():
    cfg = cfg_of("var s = 0;\nfor (var i = 0; i < 4; i = i + 1) {\n  s = s + i;\n}\nprint(s);\n")
    assert (4, 3) in cfg.edges  # body back to header
    assert (3, 5) in cfg.edges  # header to after
    nodes = node_map(cfg)
    assert isinstance(nodes[3].stmts[0], ast.For)


def test_do_while_enters_body_first():
    cfg = cfg_of("var x = 0;\ndo {\n  x = x + 1;\n} while (x < 2);\nprint(x);\n")
    # body block precedes the condition block; condition loops back to body
    assert cfg.edges == [(ENTRY, 2), (2, 3), (3, 4), (4, 3), (4, 5), (5, EXIT)]
    nodes = node_map(cfg)
    assert isinstance(nodes[4].stmts[0], ast.DoWhile)
    assert len(nodes[3].stmts) == 1


def test_switch_fallthrough_and_break():
    src = (
        "var x = 1;\n"
        "switch (x) {\n"
        "case 1:\n  print(1);\ncase 2:\n  print(2);\n  break;\ndefault:\n  print(3);\n"
        "}\n"
        "print(4);\n"
    )
    cfg = cfg_of(src)
    assert (4, 5) in cfg.edges  # case 1 falls through into case 2
    assert (5, 3) in cfg.edges  # break jumps to the after block
    assert (6, 3) in cfg.edges  # default runs off the end
    assert (2, 3) not in cfg.edges  # a default case means no skip edge


def test_switch_without_default_can_skip():
    cfg = cfg_of("var x = 9;\nswitch (x) {\ncase 1:\n  print(1);\n  break;\n}\nprint(2);\n")
    assert (2, 3) in cfg.edges  # discriminant block straight to after


def test_return_edges_to_exit():
    cfg = fn_cfg("function f(x) {\n  if (x) {\n    return 1;\n  }\n  return 2;\n}\n")
    assert cfg.edges == [(ENTRY, 2), (2, 3), (2, 4), (3, EXIT), (4, EXIT)]


def test_code_after_return_is_unreachable():
    cfg = fn_cfg("function f() {\n  return 1;\n  print(2);\n}\n")
    reachable = cfg.reachable()
    unreachable = {n.id for n in cfg.nodes} - reachable
    assert len(unreachable) == 1
    orphan = node_map(cfg)[unreachable.pop()]
    assert isinstance(orphan.stmts[0], ast.ExprStmt)


def test_break_exits_the_loop():
    cfg = cfg_of("var x = 5;\nwhile (x) {\n  if (x === 2) {\n    break;\n  }\n  x = x - 1;\n}\nprint(x);\n")
    nodes = node_map(cfg)
    break_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.Break))
    header = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[0], ast.While))
    after = max(cfg.successors(header.id))
    assert cfg.successors(break_block.id) == [after]
    assert nodes[after] is not header


def test_continue_returns_to_loop_header():
    src = "var s = 0;\nfor (var i = 0; i < 9; i = i + 1) {\n  if (i % 2) {\n    continue;\n  }\n  s = s + i;\n}\nprint(s);\n"
    cfg = cfg_of(src)
    header = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[0], ast.For))
    cont_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.Continue))
    assert cfg.successors(cont_block.id) == [header.id]


def test_continue_in_nested_loop_targets_inner_header():
    src = (
        "var s = 0;\n"
        "for (var i = 0; i < 3; i = i + 1) {\n"
        "  for (var j = 0; j < 3; j = j + 1) {\n"
        "    if (j === 1) {\n      continue;\n    }\n"
        "    s = s + 1;\n"
        "  }\n"
        "}\n"
        "print(s);\n"
    )
    cfg = cfg_of(src)
    headers = [n for n in cfg.nodes if n.stmts and isinstance(n.stmts[0], ast.For)]
    inner = max(headers, key=lambda n: n.id)
    cont_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.Continue))
    assert cfg.successors(cont_block.id) == [inner.id]


def test_continue_skips_switch_context():
    src = (
        "var s = 0;\n"
        "for (var i = 0; i < 4; i = i + 1) {\n"
        "  switch (i) {\n"
        "  case 0:\n    continue;\n"
        "  default:\n    s = s + i;\n"
        "  }\n"
        "}\n"
        "print(s);\n"
    )
    cfg = cfg_of(src)
    header = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[0], ast.For))
    cont_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.Continue))
    assert cfg.successors(cont_block.id) == [header.id]


def test_break_inside_switch_targets_switch_after():
    src = "var x = 1;\nswitch (x) {\ncase 1:\n  break;\n}\nprint(x);\n"
    cfg = cfg_of(src)
    break_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.Break))
    after_block = next(n for n in cfg.nodes if n.stmts and isinstance(n.stmts[0], ast.ExprStmt))
    assert cfg.successors(break_block.id) == [after_block.id]


def test_function_decl_is_a_straight_line_statement():
    cfg = cfg_of("function f() {\n  return 1;\n}\nprint(f());\n")
    assert len(cfg.nodes) == 1
    assert len(cfg.nodes[0].stmts) == 2


SNIPPETS = [
    "var a = 1;\nprint(a);\n",
    "var x = 1;\nif (x) {\n  print(1);\n} else {\n  print(2);\n}\n",
    "var i = 0;\nwhile (i < 3) {\n  i = i + 1;\n  if (i === 2) {\n    continue;\n  }\n  print(i);\n}\n",
    "do {\n  print(1);\n} while (false);\n",
    "var x = 2;\nswitch (x) {\ncase 1:\n  print(1);\ncase 2:\n  print(2);\n  break;\ndefault:\n  print(0);\n}\n",
    "for (var i = 0; i < 2; i = i + 1) {\n  for (var j = 0; j < 2; j = j + 1) {\n    if (i === j) {\n      break;\n    }\n    print(i, j);\n  }\n}\n",
    "function f(x) {\n  if (x) {\n    return 1;\n  }\n  return 2;\n}\nprint(f(1));\n",
    "var x = 1;\nif (x === 1) {\n  print(1);\n} else if (x === 2) {\n  print(2);\n} else {\n  print(3);\n}\n",
]


def test_every_statement_lands_in_exactly_one_block():
    for src in SNIPPETS:
        program = parse_source(src)
        cfg = build_cfg(program)
        expected = {id(s) for s in placeable(program.body)}
        placed = [id(s) for n in cfg.nodes for s in n.stmts]
        assert len(placed) == len(set(placed)), src
        assert set(placed) == expected, src


def test_structured_code_is_fully_reachable():
    for src in SNIPPETS:
        cfg = build_cfg(parse_source(src))
        reachable = cfg.reachable()
        assert {n.id for n in cfg.nodes} <= reachable, src
        assert EXIT in reachable, src


def test_edges_are_sorted_and_unique():
    for src in SNIPPETS:
        cfg = build_cfg(parse_source(src))
        assert cfg.edges == sorted(set(cfg.edges)), src


def test_node_ids_are_unique_and_start_after_sentinels():
    for src in SNIPPETS:
        cfg = build_cfg(parse_source(src))
        ids = [n.id for n in cfg.nodes]
        assert len(ids) == len(set(ids))
        assert all(i >= 2 for i in ids)
        assert cfg.entry == ENTRY
        assert cfg.exit == EXIT


def test_flattened_function_keeps_dispatch_shape():
    # sanity link between the obfuscator's output and graph construction:
    # a while wrapping a switch produces header, case blocks, and a join
    from obfuscan.obfuscate import ObfuscationConfig, apply

    src = "function f(a) {\n  var x = a + 1;\n  var y = x * 2;\n  return y;\n}\nprint(f(3));\n"
    program = apply(parse_source(src), ObfuscationConfig(techniques=frozenset({"CFF"}), seed=5))
    fn = next(s for s in program.body if isinstance(s, ast.FunctionDecl))
    cfg = build_cfg(fn)
    headers = [n for n in cfg.nodes if n.stmts and isinstance(n.stmts[-1], ast.While)]
    assert len(headers) == 1
    reachable = cfg.reachable()
    assert EXIT in reachable
