"""Tests for the obfuscation detection heuristics."""

from __future__ import annotations

from obfuscan.harness import FLAG_NAMES, detect_obfuscation
from obfuscan.js import parse_source, render
from obfuscan.obfuscate import TECHNIQUES, ObfuscationConfig, apply

CLEAN_SNIPPETS = [
    'var greeting = "hello there";\nprint(greeting);\n',
    (
        "var total = 0;\n"
        "function add(n) {\n"
        "  if (n > 0) {\n"
        "    total = total + n;\n"
        "  }\n"
        "  return total;\n"
        "}\n"
        "print(add(3));\n"
    ),
    (
        "var code = 2;\n"
        "switch (code) {\n"
        'case 1:\n  print("one");\n  break;\n'
        'default:\n  print("other");\n'
        "}\n"
    ),
    (
        "var i = 0;\n"
        "while (i < 3) {\n"
        "  i = i + 1;\n"
        "}\n"
        "print(i);\n"
    ),
]

# two long strings: SS chunking yields 3+ leaf chains, SA builds a 2-entry table
SUBJECT = (
    'var label = "identifier";\n'
    'var suffix = "trailing tag";\n'
    "function describe(n) {\n"
    "  var kind = n % 2;\n"
    "  var text = label + n + suffix;\n"
    "  return text + kind;\n"
    "}\n"
    "print(describe(7));\n"
)


def detect_variant(src, techniques, seed=0):
    config = ObfuscationConfig(techniques=frozenset(techniques), seed=seed)
    variant = apply(parse_source(src), config)
    return detect_obfuscation(parse_source(render(variant)))


def test_clean_snippets_score_zero():
    for src in CLEAN_SNIPPETS:
        result = detect_obfuscation(parse_source(src))
        assert result.score == 0.0, src
        assert result.raised == ()


def test_flag_roster():
    result = detect_obfuscation(parse_source("print(1);\n"))
    assert tuple(name for name, _ in result.flags) == FLAG_NAMES
    assert FLAG_NAMES == ("CMP", "CFF", "DP", "SA", "SS")


def test_compact_variant_raises_only_cmp():
    result = detect_variant(SUBJECT, {"CMP"})
    assert result.raised == ("CMP",)
    assert result.score == 0.2


def test_flattening_variant_raises_only_cff():
    result = detect_variant(SUBJECT, {"CFF"})
    assert result.raised == ("CFF",)


def test_debug_protection_variant_raises_only_dp():
    result = detect_variant(SUBJECT, {"DP"})
    assert result.raised == ("DP",)


def test_string_array_variant_raises_only_sa():
    result = detect_variant(SUBJECT, {"SA"})
    assert result.raised == ("SA",)


def test_split_strings_variant_raises_only_ss():
    result = detect_variant(SUBJECT, {"SS"})
    assert result.raised == ("SS",)


def test_dead_code_variant_raises_nothing():
    for seed in range(5):
        result = detect_variant(SUBJECT, {"DCI"}, seed=seed)
        assert result.raised == ()


def test_simplify_variant_raises_nothing():
    result = detect_variant(SUBJECT, {"SIMP"})
    assert result.raised == ()


def test_self_defending_variant_raises_only_implied_cmp():
    result = detect_variant(SUBJECT, {"SD"})
    assert result.raised == ("CMP",)


def test_all_eight_scores_high():
    for seed in (0, 1, 2):
        result = detect_variant(SUBJECT, TECHNIQUES, seed=seed)
        assert result.score >= 0.6, (seed, result.raised)
        assert result.flag("CFF")
        assert result.flag("DP")


def test_flag_accessor_and_score_agree():
    result = detect_variant(SUBJECT, {"DP", "CFF"})
    assert result.flag("DP") and result.flag("CFF")
    assert result.score == len(result.raised) / 5


# -- hand-built shapes -----------------------------------------------------------


def test_dispatcher_shape_requires_matching_variable():
    dispatching = (
        "var s = 0;\n"
        "while (s !== 2) {\n"
        "  switch (s) {\n"
        "  case 0:\n    s = 1;\n    break;\n"
        "  default:\n    s = 2;\n"
        "  }\n"
        "}\n"
        "print(s);\n"
    )
    result = detect_obfuscation(parse_source(dispatching))
    assert result.flag("CFF")

    unrelated = (
        "var s = 0;\nvar t = 0;\n"
        "while (s < 2) {\n"
        "  switch (t) {\n"
        "  default:\n    s = s + 1;\n"
        "  }\n"
        "}\n"
        "print(s);\n"
    )
    assert not detect_obfuscation(parse_source(unrelated)).flag("CFF")


def test_string_table_needs_both_table_and_decoder():
    table_only = 'var words = ["alpha", "beta"];\nprint(words[0]);\n'
    assert not detect_obfuscation(parse_source(table_only)).flag("SA")

    decoder_only = (
        "var data = [1, 2, 3];\n"
        "function pick(i) {\n  return data[i % 3];\n}\n"
        "print(pick(4));\n"
    )
    assert not detect_obfuscation(parse_source(decoder_only)).flag("SA")

    both = (
        'var words = ["alpha", "beta"];\n'
        "function pick(i) {\n  return words[i % 2];\n}\n"
        "print(pick(3));\n"
    )
    assert detect_obfuscation(parse_source(both)).flag("SA")


def test_concat_chain_needs_three_string_leaves():
    assert not detect_obfuscation(parse_source('print("ab" + "cd");\n')).flag("SS")
    assert detect_obfuscation(parse_source('print("ab" + "cd" + "ef");\n')).flag("SS")
    mixed = 'var x = "tail";\nprint("ab" + "cd" + x);\n'
    assert not detect_obfuscation(parse_source(mixed)).flag("SS")
    nested = 'var x = "tail";\nprint("ab" + "cd" + "ef" + x);\n'
    assert detect_obfuscation(parse_source(nested)).flag("SS")


def test_single_statement_single_line_is_not_compact():
    assert not detect_obfuscation(parse_source("print(1);\n")).flag("CMP")
