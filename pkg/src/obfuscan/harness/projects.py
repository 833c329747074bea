"""Project ingestion: glob matching, parsing, and validation."""

from __future__ import annotations

import fnmatch
import os
from dataclasses import dataclass
from pathlib import Path

from ..js import JsError, SourceFile, ast, parse_source

DEFAULT_INCLUDE = ("**/*.js",)
DEFAULT_EXCLUDE = ("**/node_modules/**",)


class NoFilesMatched(Exception):
    pass


class ParseFailures(Exception):
    """One or more project files failed to parse."""

    def __init__(self, failures: list[tuple[str, str]]):
        self.failures = failures
        listing = "; ".join(f"{path}: {message}" for path, message in failures)
        super().__init__(f"{len(failures)} file(s) failed to parse: {listing}")


@dataclass(frozen=True)
class Project:
    id: str
    root: str
    files: tuple[SourceFile, ...]
    programs: tuple[ast.Program, ...]

    @property
    def relative_paths(self) -> tuple[str, ...]:
        return tuple(f.path for f in self.files)


def _match_segments(pattern: tuple[str, ...], parts: tuple[str, ...]) -> bool:
    if not pattern:
        return not parts
    head, rest = pattern[0], pattern[1:]
    if head == "**":
        return any(_match_segments(rest, parts[i:]) for i in range(len(parts) + 1))
    if not parts:
        return False
    return fnmatch.fnmatchcase(parts[0], head) and _match_segments(rest, parts[1:])


def glob_match(pattern: str, relpath: str) -> bool:
    """Slash-separated glob where ``**`` spans zero or more directories."""
    return _match_segments(tuple(pattern.split("/")), tuple(relpath.split("/")))


def _selected(relpath: str, include: tuple[str, ...], exclude: tuple[str, ...]) -> bool:
    if not any(glob_match(pat, relpath) for pat in include):
        return False
    return not any(glob_match(pat, relpath) for pat in exclude)


def ingest_project(
    path: str | Path,
    include_globs: tuple[str, ...] = DEFAULT_INCLUDE,
    exclude_globs: tuple[str, ...] = DEFAULT_EXCLUDE,
    project_id: str | None = None,
) -> Project:
    """Collect, sort, and parse every matched file under ``path``."""
    root = Path(path)
    matched: list[str] = []
    if root.is_dir():
        for dirpath, dirnames, filenames in os.walk(root):
            dirnames.sort()
            base = Path(dirpath).relative_to(root).as_posix()
            for name in sorted(filenames):
                relpath = name if base == "." else f"{base}/{name}"
                if _selected(relpath, include_globs, exclude_globs):
                    matched.append(relpath)
    if not matched:
        raise NoFilesMatched(f"no files under {root} match {list(include_globs)}")
    matched.sort()

    files: list[SourceFile] = []
    programs: list[ast.Program] = []
    failures: list[tuple[str, str]] = []
    for file_id, relpath in enumerate(matched):
        content = (root / relpath).read_text(encoding="utf-8")
        files.append(SourceFile(path=relpath, content=content, file_id=file_id))
        try:
            programs.append(parse_source(content, file_id=file_id))
        except JsError as exc:
            failures.append((relpath, str(exc)))
    if failures:
        raise ParseFailures(failures)

    return Project(
        id=project_id or root.name,
        root=str(root),
        files=tuple(files),
        programs=tuple(programs),
    )
