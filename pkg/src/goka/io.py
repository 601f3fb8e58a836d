"""Plain-text digraph format.

Line 1 holds ``n m``; the next m lines each hold one arc ``u v``.  Blank
lines and lines starting with ``#`` are ignored.  Canonical output sorts
arcs lexicographically, so write -> read -> write is byte-identical.
"""
from __future__ import annotations

from typing import Iterator

from .digraph import Digraph, DigraphError


class FormatError(ValueError):
    """Malformed text input; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield line_no, stripped.split()


def _int_fields(line_no: int, fields: list[str], expected: int, what: str) -> list[int]:
    if len(fields) != expected:
        raise FormatError(line_no, f"expected {expected} fields for {what}, got {len(fields)}")
    values = []
    for f in fields:
        try:
            values.append(int(f))
        except ValueError:
            raise FormatError(line_no, f"not an integer: {f!r}") from None
    return values


def parse_digraph(text: str) -> Digraph:
    lines = _data_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError(1, "missing header line 'n m'") from None
    n, m = _int_fields(header_no, header, 2, "header 'n m'")
    if n < 0 or m < 0:
        raise FormatError(header_no, f"negative counts in header: {n} {m}")
    arcs: list[tuple[int, int]] = []
    last_no = header_no
    for _ in range(m):
        try:
            line_no, fields = next(lines)
        except StopIteration:
            raise FormatError(last_no + 1, f"expected {m} arc lines, found {len(arcs)}") from None
        u, v = _int_fields(line_no, fields, 2, "arc 'u v'")
        try:
            Digraph(n, [(u, v)])
        except DigraphError as exc:
            raise FormatError(line_no, str(exc)) from None
        arcs.append((u, v))
        last_no = line_no
    for line_no, _ in lines:
        raise FormatError(line_no, "trailing data after the last arc")
    return Digraph(n, arcs)


def format_digraph(d: Digraph) -> str:
    lines = [f"{d.n} {len(d.arcs)}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def read_digraph(path: str) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def write_digraph(d: Digraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_digraph(d))
