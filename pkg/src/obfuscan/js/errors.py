"""Error types raised by the JavaScript front end and evaluator."""

from __future__ import annotations

from .source import SourceSpan


class JsError(Exception):
    """Base class; carries the offending source span."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{message} at {span.start_line}:{span.start_col}")
        self.message = message
        self.span = span


class LexError(JsError):
    pass


class ParseError(JsError):
    def __init__(self, message: str, span: SourceSpan, expected: tuple[str, ...] = ()):
        if expected:
            message = f"{message} (expected {', '.join(expected)})"
        super().__init__(message, span)
        self.expected = expected


class JsRuntimeError(JsError):
    pass
