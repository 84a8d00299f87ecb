"""Text formats for solutions and braces.

Solution file: line 1 is m, followed by m lines each holding a degree-m
permutation as a whitespace-separated image list (row x is σ_x).

Brace file: line 1 is k, then k rows of the addition table, a blank
line, then k rows of the multiplication table.

``#`` starts a comment on input; output is canonical (no comments,
single spaces, trailing newline). parse∘emit is the identity on tables.
"""

from __future__ import annotations

from . import brace as br
from . import solution as sol
from .brace import Brace
from .errors import ParseError
from .solution import Solution


def _content_lines(text):
    """(line_number, stripped content) for every non-blank, non-comment line."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _parse_int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what}: not an integer: {token!r}", line=lineno) from None


def _parse_row(lineno, line, width, upper, what):
    tokens = line.split()
    if len(tokens) != width:
        raise ParseError(
            f"{what}: expected {width} entries, got {len(tokens)}",
            category="count",
            line=lineno,
        )
    row = [_parse_int(t, lineno, what) for t in tokens]
    for v in row:
        if not 0 <= v < upper:
            raise ParseError(
                f"{what}: entry {v} out of range [0, {upper})",
                category="range",
                line=lineno,
            )
    return tuple(row)


def parse_sigma_table(text):
    """Parse a solution file into its raw σ-table (rows validated as
    bijections) without running the axiom checks."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty file", category="count")
    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 1:
        raise ParseError("expected a single size on the first line", line=lineno)
    m = _parse_int(tokens[0], lineno, "size")
    if m < 1:
        raise ParseError(f"size must be at least 1, got {m}", category="range", line=lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(
            f"expected {m} permutation rows, got {len(body)}", category="count"
        )
    rows = []
    for x, (ln, line) in enumerate(body):
        row = _parse_row(ln, line, m, m, f"sigma[{x}]")
        if sorted(row) != list(range(m)):
            raise ParseError(
                f"sigma[{x}] is not a bijection", category="bijection", line=ln
            )
        rows.append(row)
    return rows


def parse_solution(text) -> Solution:
    """Parse and fully validate a solution file (axiom failures raise
    AxiomError carrying the VerifyReport)."""
    return sol.from_sigma(parse_sigma_table(text))


def emit_solution(s: Solution, header: str | None = None) -> str:
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.append(str(s.m))
    lines.extend(" ".join(str(v) for v in row) for row in s.sigma)
    return "\n".join(lines) + "\n"


def parse_brace(text) -> Brace:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty file", category="count")
    lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 1:
        raise ParseError("expected a single order on the first line", line=lineno)
    k = _parse_int(tokens[0], lineno, "order")
    if k < 1:
        raise ParseError(f"order must be at least 1, got {k}", category="range", line=lineno)
    body = lines[1:]
    if len(body) != 2 * k:
        raise ParseError(
            f"expected {2 * k} table rows (add then mul), got {len(body)}",
            category="count",
        )
    add = [_parse_row(ln, line, k, k, f"add[{a}]") for a, (ln, line) in enumerate(body[:k])]
    mul = [_parse_row(ln, line, k, k, f"mul[{a}]") for a, (ln, line) in enumerate(body[k:])]
    return br.brace_from_tables(add, mul)


def emit_brace(b: Brace) -> str:
    lines = [str(b.k)]
    lines.extend(" ".join(str(v) for v in row) for row in b.add)
    lines.append("")
    lines.extend(" ".join(str(v) for v in row) for row in b.mul)
    return "\n".join(lines) + "\n"
