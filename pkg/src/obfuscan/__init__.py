"""obfuscan: JavaScript-subset obfuscation, static scanning, and
detection-loss evaluation.

Subpackages:
  js        lexer, parser, printers, structural equality, evaluator
  obfuscate the eight semantics-preserving transforms and stacking pipeline
  scan      rule-based scanner: AST patterns, CFG construction, taint pass
  metrics   SLOC, cyclomatic complexity, Halstead length
  harness   variant generation, finding matching, VDL records and stats
"""

__version__ = "0.1.0"
