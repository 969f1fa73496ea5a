"""Plain-text arrangement files.

One line per geometric line, three rationals ``a b c`` meaning
``a*x + b*y + c = 0``. Rationals are integers or ``p/q``. ``#`` starts a
comment; blank lines are ignored.

Example::

    # triangle
    0 1 0
    1 0 0
    1 1 -1
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import TYPE_CHECKING

from arrangement_lattice.errors import ArrangementParseError
from arrangement_lattice.geometry.models import Arrangement, Line

if TYPE_CHECKING:
    from pathlib import Path

logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
TOKEN_PATTERN = re.compile(r"\S+")


def parse_rational(token: str, line: int = 0, column: int = 0) -> Fraction:
    """Parse an integer or ``p/q`` token.

    Raises:
        ArrangementParseError: If the token is malformed or has a zero denominator
    """
    match = RATIONAL_PATTERN.match(token)
    if not match:
        raise ArrangementParseError(f"malformed rational {token!r}", line, column, token)
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ArrangementParseError(f"zero denominator in {token!r}", line, column, token)
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """``p/q``, or the integer when the denominator is 1."""
    return str(value)


def parse_arrangement(text: str) -> Arrangement:
    """Parse arrangement text.

    Args:
        text: File contents

    Returns:
        Arrangement with lines numbered in file order

    Raises:
        ArrangementParseError: With the line and column of the first problem
    """
    lines: list[Line] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in TOKEN_PATTERN.finditer(content)]
        if not tokens:
            continue
        if len(tokens) != 3:
            token, column = tokens[3] if len(tokens) > 3 else (None, len(content.rstrip()) + 1)
            raise ArrangementParseError(f"expected 3 rationals, found {len(tokens)}", lineno, column, token)
        a, b, c = (parse_rational(token, lineno, column) for token, column in tokens)
        if a == 0 and b == 0:
            raise ArrangementParseError("degenerate line: a and b are both zero", lineno, tokens[0][1], tokens[0][0])
        lines.append(Line(a, b, c, id=len(lines)))
    if not lines:
        raise ArrangementParseError("no lines")
    logger.debug(f"Parsed {len(lines)} lines")
    return Arrangement(tuple(lines))


def read_arrangement(path: Path) -> Arrangement:
    """Read and parse an arrangement file."""
    return parse_arrangement(path.read_text(encoding="utf-8"))


def serialize_arrangement(arr: Arrangement, comment: str | None = None) -> str:
    """Arrangement text, one normalized line per row."""
    out = [f"# {row}" for row in comment.splitlines()] if comment else []
    out.extend(f"{format_rational(ln.a)} {format_rational(ln.b)} {format_rational(ln.c)}" for ln in arr)
    return "\n".join(out) + "\n"


def write_arrangement(arr: Arrangement, path: Path, comment: str | None = None) -> None:
    """Write an arrangement file, creating parent directories."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_arrangement(arr, comment), encoding="utf-8")
    logger.info(f"Wrote {arr.size} lines to {path}")
