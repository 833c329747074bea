"""Variant generation: transformed project trees persisted to disk."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..js import render
from ..obfuscate import ObfuscationConfig, apply
from .projects import Project

BASELINE_LABEL = "baseline"


def variant_label(config: ObfuscationConfig) -> str:
    """`CFF+SA+SS_s7` style label; the empty config is the baseline."""
    if not config.techniques:
        return BASELINE_LABEL
    return f"{config.label}_s{config.seed}"


@dataclass(frozen=True)
class Variant:
    project_id: str
    label: str
    config: ObfuscationConfig
    output_root: str
    files: tuple[str, ...]


def write_variant(project: Project, config: ObfuscationConfig, out_dir: str | Path) -> Variant:
    """Transform every project file under one config and mirror the tree."""
    label = variant_label(config)
    root = Path(out_dir) / label
    for file, program in zip(project.files, project.programs):
        transformed = apply(program, config) if config.techniques else program
        text = render(transformed)
        if not text.endswith("\n"):
            text += "\n"
        target = root / file.path
        target.parent.mkdir(parents=True, exist_ok=True)
        try:
            target.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"writing {target}: {exc}") from exc
    manifest = {
        "project": project.id,
        "label": label,
        "techniques": list(config.effective_techniques),
        "seed": config.seed,
        "params": dataclasses.asdict(config.params),
        "files": list(project.relative_paths),
    }
    manifest_path = root / "manifest.json"
    manifest_path.parent.mkdir(parents=True, exist_ok=True)
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return Variant(
        project_id=project.id,
        label=label,
        config=config,
        output_root=str(root),
        files=project.relative_paths,
    )


def generate_variants(
    project: Project, configs: Sequence[ObfuscationConfig], out_dir: str | Path
) -> list[Variant]:
    """One output tree per config under ``out_dir/<label>/``."""
    return [write_variant(project, config, out_dir) for config in configs]
