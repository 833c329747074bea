"""Parser structure, precedence, error reporting, and span soundness."""

import pytest

from obfuscan.js import ParseError, ast, parse_source, span_encloses, walk


def first_stmt(source):
    return parse_source(source).body[0]


def test_if_equality_assignment_shape():
    stmt = first_stmt("if(a===1){b=2;}")
    assert isinstance(stmt, ast.If)
    assert isinstance(stmt.test, ast.Binary)
    assert stmt.test.op == "==="
    inner = stmt.consequent.body[0]
    assert isinstance(inner, ast.ExprStmt)
    assert isinstance(inner.expression, ast.Assign)
    assert inner.expression.op == "="


def test_multiplication_binds_tighter_than_addition():
    stmt = first_stmt("x = 1 + 2 * 3;")
    value = stmt.expression.value
    assert isinstance(value, ast.Binary) and value.op == "+"
    assert isinstance(value.right, ast.Binary) and value.right.op == "*"


def test_logical_operators_nest_with_equality():
    stmt = first_stmt("ok = a === 1 && b !== 2 || c < 3;")
    value = stmt.expression.value
    assert value.op == "||"
    assert value.left.op == "&&"
    assert value.left.left.op == "==="
    assert value.left.right.op == "!=="
    assert value.right.op == "<"


def test_missing_semicolon_is_rejected_with_expected_set():
    with pytest.raises(ParseError) as err:
        parse_source("var a = 1")
    assert "';'" in err.value.expected


def test_no_automatic_semicolon_insertion():
    with pytest.raises(ParseError):
        parse_source("var a = 1\nvar b = 2;")


def test_loose_equality_does_not_parse():
    with pytest.raises(ParseError):
        parse_source("x = a == b;")
    with pytest.raises(ParseError):
        parse_source("x = a != b;")


def test_break_outside_loop_rejected():
    with pytest.raises(ParseError):
        parse_source("break;")
    with pytest.raises(ParseError):
        parse_source("function f() { break; }")


def test_continue_inside_switch_needs_a_loop():
    with pytest.raises(ParseError):
        parse_source("switch (x) { case 1: continue; }")
    # ...but break is fine in a switch, and continue in a loop-wrapped switch.
    parse_source("switch (x) { case 1: break; }")
    parse_source("while (a) { switch (x) { case 1: continue; } }")


def test_break_in_nested_function_does_not_inherit_loop():
    with pytest.raises(ParseError):
        parse_source("while (a) { var f = function () { break; }; }")


def test_var_decl_multiple_declarators():
    stmt = first_stmt("var a = 1, b, c = 'x';")
    assert isinstance(stmt, ast.VarDecl)
    assert [d.name for d in stmt.declarators] == ["a", "b", "c"]
    assert stmt.declarators[1].init is None


def test_const_and_let_kinds():
    assert first_stmt("const k = 1;").kind == "const"
    assert first_stmt("let m = 2;").kind == "let"


def test_loop_bodies_require_blocks():
    with pytest.raises(ParseError):
        parse_source("while (a) b = 1;")
    with pytest.raises(ParseError):
        parse_source("if (a) b = 1;")


def test_else_if_chains():
    stmt = first_stmt("if (a) { x = 1; } else if (b) { x = 2; } else { x = 3; }")
    assert isinstance(stmt.alternate, ast.If)
    assert isinstance(stmt.alternate.alternate, ast.Block)


def test_switch_cases_and_default():
    stmt = first_stmt("switch (v) { case 1: a = 1; break; default: a = 0; }")
    assert isinstance(stmt, ast.Switch)
    assert len(stmt.cases) == 2
    assert stmt.cases[0].test is not None
    assert stmt.cases[1].test is None


def test_duplicate_default_rejected():
    with pytest.raises(ParseError):
        parse_source("switch (v) { default: ; default: ; }")


def test_for_header_variants():
    full = first_stmt("for (var i = 0; i < 3; i = i + 1) { ; }")
    assert isinstance(full.init, ast.VarDecl)
    bare = first_stmt("for (;;) { break; }")
    assert bare.init is None and bare.test is None and bare.update is None


def test_member_call_and_new_shapes():
    stmt = first_stmt("r = new RegExp(pat).test(input[0]);")
    call = stmt.expression.value
    assert isinstance(call, ast.Call)
    assert isinstance(call.callee, ast.Member) and call.callee.name == "test"
    assert isinstance(call.callee.obj, ast.New)
    arg = call.args[0]
    assert isinstance(arg, ast.Member) and arg.computed


def test_object_and_array_literals():
    stmt = first_stmt('x = { name: "n", "quoted key": 2, nested: [1, 2, f(3)] };')
    obj = stmt.expression.value
    assert isinstance(obj, ast.ObjectLiteral)
    assert [p.key for p in obj.properties] == ["name", "quoted key", "nested"]
    assert obj.properties[1].quoted
    assert isinstance(obj.properties[2].value, ast.ArrayLiteral)


def test_function_expression_optional_name():
    anon = first_stmt("f = function (a) { return a; };").expression.value
    named = first_stmt("g = function rec(n) { return rec; };").expression.value
    assert isinstance(anon, ast.FunctionExpr) and anon.name is None
    assert named.name == "rec"


def test_conditional_expression_right_associates():
    stmt = first_stmt("x = a ? 1 : b ? 2 : 3;")
    cond = stmt.expression.value
    assert isinstance(cond, ast.Conditional)
    assert isinstance(cond.alternate, ast.Conditional)


def test_invalid_assignment_target():
    with pytest.raises(ParseError):
        parse_source("1 = 2;")
    with pytest.raises(ParseError):
        parse_source("f() = 2;")


def test_debugger_and_empty_statements():
    program = parse_source("debugger;;")
    assert isinstance(program.body[0], ast.DebuggerStmt)
    assert isinstance(program.body[1], ast.EmptyStmt)


SPAN_SNIPPETS = [
    "var a = 1 + 2 * f(x), b = 'txt';",
    "function f(a, b) { if (a < b) { return a; } else { return b; } }",
    "while (i < 10) { i += 1; continue; }",
    "do { x = x - 1; } while (x > 0);",
    "for (var i = 0; i < n; i = i + 1) { total = total + data[i]; }",
    "switch (k) { case 1: one(); break; default: other(); }",
    "obj.field[idx] = cfg ? left._0x : right.alt;",
    "r = new Maker('p').build(a, b)[0];",
    "v = { a: [1, 2], 'b c': function () { return null; } };",
    "flag = !done && typeof x === 'number' || -y < +z;",
]


@pytest.mark.parametrize("source", SPAN_SNIPPETS)
def test_every_node_span_encloses_children(source):
    program = parse_source(source)
    for node in walk(program):
        assert node.span.start_line >= 1 and node.span.start_col >= 1
        for child in ast.iter_children(node):
            assert span_encloses(node.span, child.span), (
                f"{type(node).__name__} span does not enclose {type(child).__name__}"
            )
