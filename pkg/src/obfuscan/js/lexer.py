"""Tokenizer for the JavaScript subset.

Comments and whitespace are not tokens; they are attached as leading trivia
to the following token (the EOF token collects trailing trivia).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LexError
from .source import SourceSpan

KEYWORDS = frozenset({
    "var", "let", "const", "function", "if", "else", "while", "do", "for",
    "switch", "case", "default", "return", "break", "continue", "debugger",
    "new", "typeof", "true", "false", "null",
})

# Longest first so maximal munch falls out of a linear scan.
PUNCTUATORS = (
    "===", "!==", "==", "!=", "<=", ">=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=",
    "=", "<", ">", "+", "-", "*", "/", "%", "!", "?", ":",
    ";", ",", ".", "(", ")", "{", "}", "[", "]",
)

_IDENT_START = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
_IDENT_CONT = _IDENT_START | frozenset("0123456789")
_DIGITS = frozenset("0123456789")

_SIMPLE_ESCAPES = {"n": "\n", "t": "\t", '"': '"', "'": "'", "\\": "\\"}


@dataclass(frozen=True)
class Token:
    kind: str  # one of: num, str, ident, kw, punct, eof
    text: str  # exact lexeme as it appeared
    value: object  # decoded value: float for num, str for str, text otherwise
    span: SourceSpan
    trivia: str = field(default="", compare=False)


class _Cursor:
    def __init__(self, source: str, file_id: int):
        self.src = source
        self.file_id = file_id
        self.pos = 0
        self.line = 1
        self.col = 1

    def peek(self, offset: int = 0) -> str:
        i = self.pos + offset
        return self.src[i] if i < len(self.src) else ""

    def advance(self) -> str:
        ch = self.src[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def at_end(self) -> bool:
        return self.pos >= len(self.src)

    def here(self) -> tuple[int, int]:
        return (self.line, self.col)

    def span_from(self, start: tuple[int, int]) -> SourceSpan:
        # Inclusive end: the last consumed character's position.
        end_line, end_col = self.line, self.col
        if end_col > 1:
            end_col -= 1
        else:
            end_line = max(start[0], end_line - 1)
            end_col = max(1, len(self._line_text(end_line)))
        return SourceSpan(self.file_id, start[0], start[1], end_line, end_col)

    def _line_text(self, line_no: int) -> str:
        return self.src.split("\n")[line_no - 1] if line_no >= 1 else ""


def tokenize(source: str, file_id: int = 0) -> list[Token]:
    """Tokenize ``source``; raises LexError on malformed input."""
    cur = _Cursor(source, file_id)
    tokens: list[Token] = []
    trivia_start = 0

    while True:
        _skip_trivia(cur)
        trivia = source[trivia_start:cur.pos]
        if cur.at_end():
            span = SourceSpan(file_id, cur.line, cur.col, cur.line, cur.col)
            tokens.append(Token("eof", "", None, span, trivia))
            return tokens
        start_pos = cur.pos
        start = cur.here()
        ch = cur.peek()

        if ch in _IDENT_START:
            while not cur.at_end() and cur.peek() in _IDENT_CONT:
                cur.advance()
            text = source[start_pos:cur.pos]
            kind = "kw" if text in KEYWORDS else "ident"
            tokens.append(Token(kind, text, text, cur.span_from(start), trivia))
        elif ch in _DIGITS:
            _scan_digits(cur)
            if cur.peek() == "." and cur.peek(1) in _DIGITS:
                cur.advance()
                _scan_digits(cur)
            if cur.peek() in ("e", "E") and (
                cur.peek(1) in _DIGITS
                or (cur.peek(1) in ("+", "-") and cur.peek(2) in _DIGITS)
            ):
                cur.advance()
                if cur.peek() in ("+", "-"):
                    cur.advance()
                _scan_digits(cur)
            text = source[start_pos:cur.pos]
            tokens.append(Token("num", text, float(text), cur.span_from(start), trivia))
        elif ch in ("'", '"'):
            value = _scan_string(cur)
            text = source[start_pos:cur.pos]
            tokens.append(Token("str", text, value, cur.span_from(start), trivia))
        else:
            for punct in PUNCTUATORS:
                if source.startswith(punct, cur.pos):
                    for _ in punct:
                        cur.advance()
                    tokens.append(Token("punct", punct, punct, cur.span_from(start), trivia))
                    break
            else:
                span = SourceSpan(file_id, start[0], start[1], start[0], start[1])
                raise LexError(f"unexpected character {ch!r}", span)
        trivia_start = cur.pos


def _scan_digits(cur: _Cursor) -> None:
    while not cur.at_end() and cur.peek() in _DIGITS:
        cur.advance()


def _skip_trivia(cur: _Cursor) -> None:
    while not cur.at_end():
        ch = cur.peek()
        if ch in " \t\r\n":
            cur.advance()
        elif ch == "/" and cur.peek(1) == "/":
            while not cur.at_end() and cur.peek() != "\n":
                cur.advance()
        elif ch == "/" and cur.peek(1) == "*":
            start = cur.here()
            cur.advance()
            cur.advance()
            while True:
                if cur.at_end():
                    span = SourceSpan(cur.file_id, start[0], start[1], start[0], start[1])
                    raise LexError("unterminated block comment", span)
                if cur.peek() == "*" and cur.peek(1) == "/":
                    cur.advance()
                    cur.advance()
                    break
                cur.advance()
        else:
            return


def _scan_string(cur: _Cursor) -> str:
    start = cur.here()
    quote = cur.advance()
    out: list[str] = []
    while True:
        if cur.at_end() or cur.peek() == "\n":
            span = SourceSpan(cur.file_id, start[0], start[1], start[0], start[1])
            raise LexError("unterminated string literal", span)
        ch = cur.advance()
        if ch == quote:
            return "".join(out)
        if ch != "\\":
            out.append(ch)
            continue
        if cur.at_end():
            span = SourceSpan(cur.file_id, start[0], start[1], start[0], start[1])
            raise LexError("unterminated string literal", span)
        esc = cur.advance()
        if esc in _SIMPLE_ESCAPES:
            out.append(_SIMPLE_ESCAPES[esc])
        elif esc == "x":
            out.append(chr(_hex_digits(cur, 2, start)))
        elif esc == "u":
            out.append(chr(_hex_digits(cur, 4, start)))
        else:
            # Lenient like JS: "\q" is just "q".
            out.append(esc)


def _hex_digits(cur: _Cursor, count: int, start: tuple[int, int]) -> int:
    digits = []
    for _ in range(count):
        ch = cur.peek()
        if cur.at_end() or ch not in "0123456789abcdefABCDEF":
            span = SourceSpan(cur.file_id, start[0], start[1], start[0], start[1])
            raise LexError("malformed escape sequence", span)
        digits.append(cur.advance())
    return int("".join(digits), 16)
