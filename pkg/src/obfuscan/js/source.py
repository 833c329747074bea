"""Source files and source spans."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class SourceSpan:
    """Half-open is tempting, but both ends are inclusive 1-based positions.

    ``file_id`` indexes into the owning project's file list; synthesized
    nodes use ``SYNTHETIC_FILE`` (-1).
    """

    file_id: int
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (self.file_id, self.start_line, self.start_col, self.end_line, self.end_col)


SYNTHETIC_FILE = -1
SYNTHETIC_SPAN = SourceSpan(SYNTHETIC_FILE, 1, 1, 1, 1)


@dataclass(frozen=True)
class SourceFile:
    path: str
    content: str
    file_id: int = 0

    @classmethod
    def load(cls, path: str | Path, file_id: int = 0) -> "SourceFile":
        text = Path(path).read_text(encoding="utf-8")
        return cls(path=str(path), content=text, file_id=file_id)


def span_encloses(outer: SourceSpan, inner: SourceSpan) -> bool:
    """True when ``outer`` covers ``inner``. Synthetic spans enclose nothing."""
    if outer.file_id != inner.file_id:
        return False
    starts_ok = (outer.start_line, outer.start_col) <= (inner.start_line, inner.start_col)
    ends_ok = (outer.end_line, outer.end_col) >= (inner.end_line, inner.end_col)
    return starts_ok and ends_ok


def merge_spans(first: SourceSpan, last: SourceSpan) -> SourceSpan:
    return SourceSpan(
        first.file_id,
        first.start_line,
        first.start_col,
        last.end_line,
        last.end_col,
    )
