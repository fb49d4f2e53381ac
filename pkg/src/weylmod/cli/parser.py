"""Parsing of quiver files, Cartan files and command line tokens.

Quiver files::

    # the four-vertex example
    n 4
    arrows: 1 3; 1 4; 2 3; 2 4

Cartan files list the matrix rows after ``cartan:``, either on the same line
separated by ``;`` or on the following lines, and may override valuations::

    cartan:
    2 -1
    -2 2
    valuation: 1 2 1 2

Everything after ``#`` is a comment. Vertices are written ``r:i`` (``r:i^k``
for k copies) and separated by commas; words are space-separated indices.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..algebra import get_registry
from ..coxeter import CartanData, Word
from ..errors import CartanError, InputParseError
from ..grid import ModMultiset, Vertex

logger = logging.getLogger(__name__)


def _int(token: str, source: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputParseError("expected an integer", source=source, line=line, token=token) from None


def _content_lines(text: str) -> List[Tuple[int, str]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((number, content))
    return lines


def parse_quiver_text(text: str, source: str = "<input>") -> CartanData:
    """Parse a quiver file or a Cartan file.

    Raises:
        InputParseError: On malformed lines, with source, line and token.
    """
    n: Optional[int] = None
    arrows: List[Tuple[int, int]] = []
    rows: List[List[int]] = []
    valuation: Dict[Tuple[int, int], Tuple[int, int]] = {}
    in_cartan = False
    first_line = None
    for number, content in _content_lines(text):
        first_line = first_line or number
        keyword, _, rest = content.partition(":") if ":" in content else ("", "", content)
        keyword = keyword.strip().lower()
        if keyword == "arrows":
            in_cartan = False
            for chunk in filter(None, (c.strip() for c in rest.split(";"))):
                parts = chunk.split()
                if len(parts) != 2:
                    raise InputParseError("an arrow is written 'source target'", source=source, line=number, token=chunk)
                arrow = (_int(parts[0], source, number), _int(parts[1], source, number))
                if arrow[0] >= arrow[1]:
                    raise InputParseError(
                        f"arrow {arrow[0]}->{arrow[1]} is not admissible: arrows must go from a smaller to a larger vertex",
                        source=source,
                        line=number,
                        token=chunk,
                    )
                arrows.append(arrow)
        elif keyword == "cartan":
            in_cartan = True
            for chunk in filter(None, (c.strip() for c in rest.split(";"))):
                rows.append([_int(t, source, number) for t in chunk.split()])
        elif keyword == "valuation":
            in_cartan = False
            parts = rest.split()
            if len(parts) != 4:
                raise InputParseError("a valuation is written 'i j a_ij a_ji'", source=source, line=number, token=rest.strip())
            i, j, a_ij, a_ji = (_int(t, source, number) for t in parts)
            valuation[(i, j)] = (a_ij, a_ji)
        elif keyword:
            raise InputParseError(f"unknown keyword '{keyword}'", source=source, line=number, token=keyword)
        elif content.split()[0].lower() == "n":
            parts = content.split()
            if len(parts) != 2:
                raise InputParseError("the vertex count is written 'n <count>'", source=source, line=number, token=content)
            n = _int(parts[1], source, number)
            in_cartan = False
        elif in_cartan:
            rows.append([_int(t, source, number) for t in content.split()])
        else:
            raise InputParseError("unexpected line", source=source, line=number, token=content.split()[0])

    try:
        if rows:
            if n is not None or arrows:
                raise InputParseError("a file gives either a quiver or a Cartan matrix", source=source, line=first_line)
            if any(len(row) != len(rows) for row in rows):
                raise InputParseError(f"the Cartan matrix must be square with {len(rows)} columns", source=source)
            return CartanData.from_matrix(rows, valuation, name=Path(source).stem)
        if n is None:
            raise InputParseError("missing 'n <count>' line", source=source, line=first_line)
        if valuation:
            raise InputParseError("valuations need a Cartan matrix", source=source)
        return CartanData.from_quiver(n, arrows, name=Path(source).stem)
    except CartanError as error:
        raise InputParseError(str(error), source=source) from error


def load_cartan(argument: str) -> CartanData:
    """Return the datum of a file path or a preset name.

    Raises:
        InputParseError: If ``argument`` is neither a readable file nor a preset.
    """
    path = Path(argument)
    if path.is_file():
        logger.debug(f"Reading Cartan datum from {path}")
        return parse_quiver_text(path.read_text(encoding="utf-8"), source=str(path))
    registry = get_registry()
    if registry.is_available(argument):
        cartan = registry.get(argument)
        assert cartan is not None
        return cartan
    raise InputParseError(
        f"no such file or preset; presets: {', '.join(registry.names())}", source="<argv>", token=argument
    )


def parse_word(text: str) -> Word:
    """Parse space-separated 1-based indices."""
    letters = []
    for token in text.replace(",", " ").split():
        if not token.isdigit() or int(token) < 1:
            raise InputParseError("a word lists positive generator indices", source="<argv>", token=token)
        letters.append(int(token))
    return tuple(letters)


def parse_vertex(token: str) -> Vertex:
    try:
        return Vertex.parse(token)
    except InputParseError as error:
        raise InputParseError("expected a vertex r:i", source="<argv>", token=token) from error


def parse_module(text: str) -> ModMultiset:
    """Parse a comma-separated list of ``r:i`` or ``r:i^k``."""
    counts: Dict[Vertex, int] = {}
    for token in filter(None, (t.strip() for t in text.split(","))):
        base, _, power = token.partition("^")
        if power and not power.isdigit():
            raise InputParseError("a multiplicity is a non-negative integer", source="<argv>", token=token)
        vertex = parse_vertex(base)
        counts[vertex] = counts.get(vertex, 0) + (int(power) if power else 1)
    return ModMultiset(counts)


def parse_indices(text: str) -> List[int]:
    """Parse a comma-separated list of 1-based vertex indices."""
    indices = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        if not token.isdigit() or int(token) < 1:
            raise InputParseError("expected a positive vertex index", source="<argv>", token=token)
        indices.append(int(token))
    return indices
