"""JavaScript-subset front end: lexing, parsing, printing, evaluation."""

from . import ast
from .ast import Program, collect_names, iter_functions, structural_eq, walk
from .errors import JsError, JsRuntimeError, LexError, ParseError
from .interp import Trace, evaluate
from .lexer import Token, tokenize
from .parser import parse, parse_source
from .printer import print_compact, print_pretty, render
from .source import SYNTHETIC_SPAN, SourceFile, SourceSpan, span_encloses

__all__ = [
    "ast",
    "Program",
    "collect_names",
    "iter_functions",
    "structural_eq",
    "walk",
    "JsError",
    "JsRuntimeError",
    "LexError",
    "ParseError",
    "Trace",
    "evaluate",
    "Token",
    "tokenize",
    "parse",
    "parse_source",
    "print_compact",
    "print_pretty",
    "render",
    "SYNTHETIC_SPAN",
    "SourceFile",
    "SourceSpan",
    "span_encloses",
]
