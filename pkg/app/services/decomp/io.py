"""Decomposition files.

    p decomp <n> <l>          header, exactly once
    h <part-index> <vertex>   vertex belongs to part H_index (1..l)
"""

from typing import List, Optional, Tuple

from .exceptions import DecompositionParseError, InvalidPartitionError
from .models import Decomposition


def _all_decimal(tokens: List[str]) -> bool:
    return all(t.isascii() and t.isdecimal() for t in tokens)


def parse_decomposition(text: str) -> Decomposition:
    """Parse decomposition-file content; ``c`` lines are comments.

    Raises:
        DecompositionParseError: On a malformed line, a line before the
            header, or a partition that fails validation (line 0)
    """
    header: Optional[Tuple[int, int]] = None
    parts: List[List[int]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if len(tokens) == 4 and tokens[:2] == ["p", "decomp"] and header is None:
            if not _all_decimal(tokens[2:]):
                raise DecompositionParseError(line_number, line, "malformed header")
            header = (int(tokens[2]), int(tokens[3]))
            parts = [[] for _ in range(header[1])]
            continue
        if tokens[0] != "h" or len(tokens) != 3 or not _all_decimal(tokens[1:]):
            raise DecompositionParseError(line_number, line, "malformed line")
        if header is None:
            raise DecompositionParseError(line_number, line, "part line before header")
        index = int(tokens[1])
        if not 1 <= index <= header[1]:
            raise DecompositionParseError(line_number, line, f"part index outside 1..{header[1]}")
        parts[index - 1].append(int(tokens[2]))
    if header is None:
        raise DecompositionParseError(0, "", "missing header")
    try:
        return Decomposition.of(header[0], parts)
    except InvalidPartitionError as e:
        raise DecompositionParseError(0, "", e.reason) from e


def format_decomposition(d: Decomposition) -> str:
    lines = [f"p decomp {d.n} {d.length}"]
    for index, part in enumerate(d.parts, start=1):
        lines.extend(f"h {index} {v}" for v in sorted(part))
    return "".join(line + "\n" for line in lines)


def read_decomposition(path: str) -> Decomposition:
    with open(path, encoding="utf-8") as fh:
        return parse_decomposition(fh.read())


def write_decomposition(d: Decomposition, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_decomposition(d))
