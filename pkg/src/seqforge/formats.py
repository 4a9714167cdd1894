"""Render and parse sequence windows: b-file, CSV, JSON, and a human table.

b-file is the primary interchange format (one ``index value`` pair per
line, no header); emitting and re-parsing a window is byte-exact. All
numbers render in full decimal, never scientific notation.
"""

from __future__ import annotations

import json

from .recurrences import SequenceWindow

FORMATS = ("table", "csv", "json", "bfile")


def format_bfile(window: SequenceWindow) -> str:
    return "".join(f"{i} {v}\n" for i, v in window.items())


def parse_bfile(text: str, name: str = "bfile") -> SequenceWindow:
    """Inverse of format_bfile; indices must be contiguous and ascending."""
    offset = None
    expected = None
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        index, value = int(parts[0]), int(parts[1])
        if offset is None:
            offset = expected = index
        if index != expected:
            raise ValueError(f"line {lineno}: expected index {expected}, got {index}")
        terms.append(value)
        expected += 1
    if offset is None:
        raise ValueError("empty b-file")
    return SequenceWindow(name, offset, tuple(terms))


def format_csv(window: SequenceWindow) -> str:
    return "index,value\n" + "".join(f"{i},{v}\n" for i, v in window.items())


def format_json(window: SequenceWindow) -> str:
    payload = {
        "schema": 1,
        "family": window.name,
        "offset": window.offset,
        "terms": [str(t) for t in window.terms],
    }
    return json.dumps(payload, indent=2) + "\n"


def format_table(window: SequenceWindow) -> str:
    width = max(len(str(i)) for i, _ in window.items())
    lines = [f"{window.name}  (indices {window.offset}..{window.last_index})"]
    lines += [f"{i:>{width}}  {v}" for i, v in window.items()]
    return "\n".join(lines) + "\n"


def format_window(window: SequenceWindow, fmt: str) -> str:
    if fmt == "bfile":
        return format_bfile(window)
    if fmt == "csv":
        return format_csv(window)
    if fmt == "json":
        return format_json(window)
    if fmt == "table":
        return format_table(window)
    raise ValueError(f"unknown format {fmt!r}; known: {', '.join(FORMATS)}")
