# ──────────────────────────────────────────────────────────────
# junta_bounds/tables/codec.py
# The `bf:v1:n=<arity>:0x<hex>` text format for truth tables.
# ──────────────────────────────────────────────────────────────
import string
import typing as t
from pathlib import Path

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityOverflow, ParseError
from junta_bounds.tables.truth_table import TruthTable

PREFIX = "bf:v1:"
_HEX = set(string.hexdigits)


def format_table(tt: TruthTable) -> str:
    return f"{PREFIX}n={tt.arity}:0x{tt.bits:x}"


def _offset(text: str, index: int) -> int:
    # byte offset, not character offset
    return len(text[:index].encode("utf-8"))


def _first_mismatch(text: str, pos: int, literal: str) -> int:
    for k, ch in enumerate(literal):
        if pos + k >= len(text) or text[pos + k] != ch:
            return pos + k
    return pos + len(literal)


def parse_table(text: str) -> TruthTable:
    """Parse one bf:v1 string; surrounding whitespace is ignored."""
    body = text.strip()
    base = _offset(text, len(text) - len(text.lstrip()))

    def fail(message: str, index: int) -> t.NoReturn:
        raise ParseError(message, base + _offset(body, index), text)

    pos = 0
    for literal in (PREFIX, "n="):
        if not body.startswith(literal, pos):
            fail(f"expected {literal!r}", _first_mismatch(body, pos, literal))
        pos += len(literal)
    start = pos
    while pos < len(body) and body[pos] in string.digits:
        pos += 1
    if pos == start:
        fail("expected arity digits", pos)
    arity = int(body[start:pos])
    if not body.startswith(":0x", pos):
        fail("expected ':0x'", _first_mismatch(body, pos, ":0x"))
    start = pos = pos + 3
    if pos == len(body):
        fail("expected hex digits", pos)
    for k in range(start, len(body)):
        if body[k] not in _HEX:
            fail(f"invalid hex digit {body[k]!r}", k)

    limit = get_settings().n_max
    if arity > limit:
        raise ArityOverflow(arity, limit)
    bits = int(body[start:], 16)
    if bits >> (1 << arity):
        fail(f"table has bits beyond 2^{arity} entries", start)
    return TruthTable(arity, bits)


def read_table(source: t.Union[str, Path]) -> TruthTable:
    """Accept a literal bf:v1 string or a path to a file whose first non-blank line is one."""
    if isinstance(source, str) and source.strip().startswith("bf:"):
        return parse_table(source)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text", e.start) from e
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            return parse_table(line)
    raise ParseError(f"no table found in {path}", 0)
