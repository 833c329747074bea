"""Lexer behavior: token shapes, escapes, trivia, and failure modes."""

import pytest

from obfuscan.js import LexError, tokenize


def kinds(source):
    return [t.kind for t in tokenize(source)]


def texts(source):
    return [t.text for t in tokenize(source) if t.kind != "eof"]


def test_simple_declaration_token_stream():
    toks = tokenize("var a=1;")
    assert [(t.kind, t.text) for t in toks] == [
        ("kw", "var"),
        ("ident", "a"),
        ("punct", "="),
        ("num", "1"),
        ("punct", ";"),
        ("eof", ""),
    ]


def test_number_values_are_floats():
    toks = tokenize("1 2.5 3e2 4.25e-1")
    values = [t.value for t in toks if t.kind == "num"]
    assert values == [1.0, 2.5, 300.0, 0.425]
    assert all(isinstance(v, float) for v in values)


def test_string_escape_decoding():
    # \x41 is "A"; the lexeme keeps the raw spelling.
    toks = tokenize(r'"a\x41"')
    assert toks[0].value == "aA"
    assert toks[0].text == r'"a\x41"'


@pytest.mark.parametrize(
    "source,expected",
    [
        (r'"\n\t"', "\n\t"),
        (r'"\"\'\\"', "\"'\\"),
        (r'"Aé"', "Aé"),
        (r"'single'", "single"),
        (r'"\q"', "q"),  # lenient unknown escape, like JS
    ],
)
def test_escape_table(source, expected):
    assert tokenize(source)[0].value == expected


def test_unterminated_string_reports_start_column():
    with pytest.raises(LexError) as err:
        tokenize('"unterminated')
    assert err.value.span.start_line == 1
    assert err.value.span.start_col == 1


def test_string_may_not_span_lines():
    with pytest.raises(LexError):
        tokenize('"one\ntwo"')


def test_malformed_hex_escape():
    with pytest.raises(LexError):
        tokenize(r'"\x4g"')


def test_unterminated_block_comment():
    with pytest.raises(LexError):
        tokenize("var a; /* never closed")


def test_unexpected_character():
    with pytest.raises(LexError):
        tokenize("var a = @;")


def test_comments_and_whitespace_become_trivia():
    toks = tokenize("// leading\nvar a = 1; /* mid */ var b;")
    assert kinds("// leading\nvar a = 1; /* mid */ var b;").count("kw") == 2
    assert "// leading" in toks[0].trivia
    second_var = [t for t in toks if t.text == "var"][1]
    assert "/* mid */" in second_var.trivia


def test_trailing_trivia_attaches_to_eof():
    toks = tokenize("var a; // done")
    assert toks[-1].kind == "eof"
    assert "// done" in toks[-1].trivia


def test_maximal_munch_on_operators():
    assert texts("a===b!==c") == ["a", "===", "b", "!==", "c"]
    assert texts("a<=b>=c") == ["a", "<=", "b", ">=", "c"]
    assert texts("a+=1") == ["a", "+=", "1"]
    # == and != tokenize (the parser rejects them later)
    assert texts("a==b") == ["a", "==", "b"]


def test_spans_are_one_based_and_ordered():
    toks = tokenize("var abc = 12;\nabc = abc + 1;")
    for tok in toks:
        assert tok.span.start_line >= 1
        assert tok.span.start_col >= 1
        assert (tok.span.start_line, tok.span.start_col) <= (tok.span.end_line, tok.span.end_col)
    abc = next(t for t in toks if t.text == "abc")
    assert (abc.span.start_line, abc.span.start_col) == (1, 5)
    assert (abc.span.end_line, abc.span.end_col) == (1, 7)


def test_keywords_are_distinct_from_identifiers():
    toks = tokenize("varx var lettuce let")
    assert [(t.kind, t.text) for t in toks[:-1]] == [
        ("ident", "varx"),
        ("kw", "var"),
        ("ident", "lettuce"),
        ("kw", "let"),
    ]


def test_dollar_and_underscore_identifiers():
    assert texts("_0x12ab $tmp __x") == ["_0x12ab", "$tmp", "__x"]
