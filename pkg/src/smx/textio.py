"""Read and write the .smx text form of supermatrix unions.

A component sits between brackets. Entries are integers or fractions in
lowest terms, rows end at a newline or ';', a '|' marks a column cut, and a
whole line of dashes (optionally with '+') marks a row cut. A line holding
only 'U' separates components:

    [ 3 0 | 1
      2 1 | 1
      ----+--
      5 2 | 0 ]
    U
    [ 7/2 -1 ]

Parsing accepts CRLF and flexible spacing. Formatting is canonical: cells
right-aligned per column, single spaces inside a block, ' | ' at column
cuts, rule lines with '+' under each '|', LF newlines, trailing newline.
parse(format(u)) reproduces u exactly and format is idempotent.
"""

import re
from fractions import Fraction

from .core import SuperMatrix, make_super
from .errors import EmptyInput, InconsistentCuts, ParseError, RaggedRows
from .union import SuperNMatrix, make_union

_SCALAR = re.compile(r"-?\d+(?:/\d+)?\Z")
_RULE = re.compile(r"[-+]+\Z")
_SEPARATORS = ("U", "∪")
_SCALAR_CHARS = set("0123456789/+-")


def parse_scalar(text):
    """One rational like '-3' or '7/2'. Raises ValueError on anything else."""
    token = text.strip()
    if not _SCALAR.match(token):
        raise ValueError(f"invalid rational {text!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def _is_rule(stripped):
    return bool(_RULE.match(stripped)) and stripped.count("-") >= 2


class _ComponentReader:
    """Accumulates one bracketed component row by row."""

    def __init__(self, open_line, open_col):
        self.open_line = open_line
        self.open_col = open_col
        self.rows = []
        self.row_cuts = []
        self.width = None
        self.col_cuts = None
        self.pending = []
        self.pending_cuts = []

    def add_scalar(self, value):
        self.pending.append(value)

    def add_col_cut(self, line, col):
        if not self.pending:
            raise ParseError("column cut before the first entry of a row", line, col)
        if self.pending_cuts and self.pending_cuts[-1] == len(self.pending):
            raise ParseError("duplicate column cut", line, col)
        self.pending_cuts.append(len(self.pending))

    def end_row(self, line, col, explicit):
        if not self.pending:
            if explicit:
                raise ParseError("empty row", line, col)
            return
        if self.pending_cuts and self.pending_cuts[-1] == len(self.pending):
            raise ParseError("column cut after the last entry of a row", line, col)
        n = len(self.rows) + 1
        if self.width is None:
            self.width = len(self.pending)
            self.col_cuts = tuple(self.pending_cuts)
        else:
            if len(self.pending) != self.width:
                raise RaggedRows(
                    f"row {n} has {len(self.pending)} entries, previous rows have {self.width}",
                    line,
                    col,
                )
            if tuple(self.pending_cuts) != self.col_cuts:
                raise InconsistentCuts(
                    f"row {n} cuts at {self.pending_cuts}, previous rows at {list(self.col_cuts)}",
                    line,
                    col,
                )
        self.rows.append(self.pending)
        self.pending = []
        self.pending_cuts = []

    def add_row_cut(self, line, col):
        if not self.rows:
            raise ParseError("row cut before the first row", line, col)
        if self.row_cuts and self.row_cuts[-1] == len(self.rows):
            raise ParseError("duplicate row cut", line, col)
        self.row_cuts.append(len(self.rows))

    def close(self, line, col):
        if not self.rows:
            raise ParseError("component has no rows", line, col)
        if self.row_cuts and self.row_cuts[-1] == len(self.rows):
            raise ParseError("row cut after the last row", line, col)
        return make_super(self.rows, self.row_cuts, self.col_cuts)


def _scan_line(line, start, line_no, reader):
    """Scan component content from 0-based index start. SuperMatrix if ']' closes it."""
    i = start
    while i < len(line):
        ch = line[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "|":
            reader.add_col_cut(line_no, i + 1)
            i += 1
            continue
        if ch == ";":
            reader.end_row(line_no, i + 1, explicit=True)
            i += 1
            continue
        if ch == "]":
            reader.end_row(line_no, i + 1, explicit=False)
            result = reader.close(line_no, i + 1)
            j = i + 1
            while j < len(line) and line[j] in " \t":
                j += 1
            if j < len(line):
                raise ParseError("unexpected text after ']'", line_no, j + 1)
            return result
        if ch == "[":
            raise ParseError("unexpected '[' inside a component", line_no, i + 1)
        if ch in _SCALAR_CHARS:
            j = i
            while j < len(line) and line[j] in _SCALAR_CHARS:
                j += 1
            token = line[i:j]
            try:
                reader.add_scalar(parse_scalar(token))
            except ValueError as e:
                raise ParseError(str(e), line_no, i + 1) from None
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line_no, i + 1)
    reader.end_row(line_no, len(line) + 1, explicit=False)
    return None


def parse(text):
    """Parse .smx text into a SuperNMatrix."""
    components = []
    reader = None
    pending_sep = None
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if reader is None:
            if not stripped:
                continue
            if stripped in _SEPARATORS:
                if not components:
                    raise ParseError("union separator before the first component", line_no, col)
                if pending_sep:
                    raise ParseError("consecutive union separators", line_no, col)
                pending_sep = (line_no, col)
                continue
            if stripped[0] != "[":
                raise ParseError("expected '[' to open a component", line_no, col)
            if components and not pending_sep:
                raise ParseError("expected 'U' between components", line_no, col)
            pending_sep = None
            reader = _ComponentReader(line_no, col)
            result = _scan_line(line, col, line_no, reader)
        else:
            if not stripped:
                continue
            if stripped in _SEPARATORS:
                raise ParseError("union separator inside a component", line_no, col)
            if _is_rule(stripped):
                reader.add_row_cut(line_no, col)
                continue
            result = _scan_line(line, 0, line_no, reader)
        if result is not None:
            components.append(result)
            reader = None
    if reader is not None:
        raise ParseError("component is never closed", reader.open_line, reader.open_col)
    if pending_sep:
        raise ParseError("union separator with no component after it", *pending_sep)
    if not components:
        raise EmptyInput()
    return make_union(components)


def _format_component(s):
    cells = [[str(x) for x in row] for row in s.data.to_rows()]
    widths = [max(len(cells[r][c]) for r in range(s.rows)) for c in range(s.cols)]
    groups = list(s.col_partition.blocks())
    body = []
    for r, row in enumerate(cells):
        segs = [" ".join(row[c].rjust(widths[c]) for c in range(c0, c1)) for c0, c1 in groups]
        body.append(" | ".join(segs))
        if r + 1 in s.row_cuts:
            rule = "-+-".join("-" * (sum(widths[c0:c1]) + (c1 - c0 - 1)) for c0, c1 in groups)
            if rule.count("-") < 2:
                rule = "--"
            body.append(rule)
    lines = [("[ " if i == 0 else "  ") + ln for i, ln in enumerate(body)]
    lines[-1] += " ]"
    return "\n".join(lines)


def format(u):
    """Canonical .smx text for a SuperMatrix or SuperNMatrix."""
    if isinstance(u, SuperMatrix):
        comps = (u,)
    elif isinstance(u, SuperNMatrix):
        comps = u.components
    else:
        raise TypeError(f"cannot format {type(u).__name__}")
    return "\nU\n".join(_format_component(c) for c in comps) + "\n"
