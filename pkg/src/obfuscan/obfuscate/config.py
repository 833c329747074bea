"""Obfuscation technique identifiers, configs, and enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

# Technique acronyms, sorted. SD implies CMP at application time: the
# self-defending guard only recognizes its own compact rendering.
TECHNIQUES = ("CFF", "CMP", "DCI", "DP", "SA", "SD", "SIMP", "SS")

TECHNIQUE_NAMES = {
    "CFF": "control flow flattening",
    "CMP": "compact",
    "DCI": "dead code injection",
    "DP": "debug protection",
    "SA": "string array",
    "SD": "self defending",
    "SIMP": "simplify",
    "SS": "split strings",
}


class InvalidMode(ValueError):
    pass


@dataclass(frozen=True)
class TransformParams:
    ss_chunk_len: int = 4
    dci_ratio: float = 0.3
    cff_min_stmts: int = 2
    sa_index_shift: int = 0


@dataclass(frozen=True)
class ObfuscationConfig:
    """A set of techniques plus the seed and tuning parameters.

    ``techniques`` stores the requested set; the CMP implied by SD is added
    only in ``effective_techniques`` (and therefore in labels and plugin
    counts).
    """

    techniques: frozenset[str]
    seed: int = 0
    params: TransformParams = field(default_factory=TransformParams)

    def __post_init__(self) -> None:
        unknown = set(self.techniques) - set(TECHNIQUES)
        if unknown:
            raise ValueError(f"unknown techniques: {sorted(unknown)}")

    @property
    def effective_techniques(self) -> tuple[str, ...]:
        effective = set(self.techniques)
        if "SD" in effective:
            effective.add("CMP")
        return tuple(sorted(effective))

    @property
    def label(self) -> str:
        return "+".join(self.effective_techniques)

    @property
    def plugin_count(self) -> int:
        return len(self.effective_techniques)


def enumerate_configs(
    techniques: tuple[str, ...] | None = None,
    mode: str = "singles",
    seed: int = 0,
    count: int | None = None,
    params: TransformParams | None = None,
) -> list[ObfuscationConfig]:
    """Enumerate configs over ``techniques`` (default: all eight).

    Modes: ``singles`` (one config per technique), ``all_combinations``
    (every non-empty subset), ``by_count`` (subsets of size ``count``).
    Ordering is lexicographic by acronym sequence in every mode.
    """
    pool = tuple(sorted(techniques)) if techniques is not None else TECHNIQUES
    unknown = set(pool) - set(TECHNIQUES)
    if unknown:
        raise InvalidMode(f"unknown techniques: {sorted(unknown)}")
    params = params if params is not None else TransformParams()

    if mode == "singles":
        subsets = [(t,) for t in pool]
    elif mode == "all_combinations":
        subsets = sorted(
            subset for size in range(1, len(pool) + 1) for subset in combinations(pool, size)
        )
    elif mode == "by_count":
        if count is None or not 1 <= count <= len(pool):
            raise InvalidMode(f"by_count needs a count in [1, {len(pool)}], got {count}")
        subsets = list(combinations(pool, count))
    else:
        raise InvalidMode(f"unknown mode {mode!r}")

    return [
        ObfuscationConfig(techniques=frozenset(subset), seed=seed, params=params)
        for subset in subsets
    ]
