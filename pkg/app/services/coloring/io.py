"""Colouring files.

    c s <colour-id> <label>    legend line
    <vertex> <colour-id>       assignment

Labels are written as ``3`` (palette colour), ``(1,2)`` (pair colour) or
``[0,-1,1]`` (signature).
"""

from typing import Dict

from .exceptions import ColoringParseError
from .models import Coloring, LegendLabel, SignatureVector


def format_label(label: LegendLabel) -> str:
    if isinstance(label, SignatureVector):
        return str(label)
    if isinstance(label, tuple):
        return "(" + ",".join(str(x) for x in label) + ")"
    return str(label)


def parse_label(text: str) -> LegendLabel:
    """Inverse of format_label.

    Raises:
        ValueError: If the text is not a label
    """
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1]
        return SignatureVector(tuple(int(x) for x in body.split(",")) if body else ())
    if text.startswith("(") and text.endswith(")"):
        first, second = (int(x) for x in text[1:-1].split(","))
        return (first, second)
    return int(text)


def format_coloring(c: Coloring) -> str:
    lines = [f"c s {i} {format_label(c.legend[i])}" for i in sorted(c.legend)]
    lines.extend(f"{v} {c.assignment[v]}" for v in sorted(c.assignment))
    return "".join(line + "\n" for line in lines)


def parse_coloring(text: str) -> Coloring:
    assignment: Dict[int, int] = {}
    legend: Dict[int, LegendLabel] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        try:
            if tokens[0] == "c":
                if len(tokens) >= 4 and tokens[1] == "s":
                    legend[int(tokens[2])] = parse_label(line.split(None, 3)[3])
                continue
            if len(tokens) != 2:
                raise ValueError(line)
            assignment[int(tokens[0])] = int(tokens[1])
        except ValueError as e:
            raise ColoringParseError(line_number, line) from e
    return Coloring(assignment=assignment, legend=legend)


def read_coloring(path: str) -> Coloring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_coloring(c: Coloring, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_coloring(c))
