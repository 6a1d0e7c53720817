"""Reading and writing the line-oriented graph file format.

    c <free text>            comment
    c label <v> <name>       role name for vertex v
    p edge <n> <m>           header, exactly once, before any edge
    e <u> <v>                edge
"""

from typing import Dict, Optional, Set, Tuple

from loguru import logger

from .exceptions import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedLineError,
    MissingHeaderError,
    SelfLoopError,
    UnorderedEdgeError,
    VertexOutOfRangeError,
)
from .models import Edge, Graph

logger = logger.bind(name=__name__)


def _parse_int(token: str, line_number: int, line: str) -> int:
    if not (token.isascii() and token.isdecimal()):
        raise MalformedLineError(line_number, line)
    return int(token)


def parse_graph(text: str) -> Graph:
    """Parse graph-file content.

    Every edge line ``e u v`` must have 1 <= u < v <= n.

    Args:
        text: File content

    Returns:
        The described Graph, labels included

    Raises:
        GraphParseError: One of its subclasses, naming the offending line
    """
    header: Optional[Tuple[int, int, int, str]] = None
    edges: Set[Edge] = set()
    labels: Dict[int, str] = {}
    pending_labels = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "c":
            if len(tokens) >= 4 and tokens[1] == "label":
                vertex = _parse_int(tokens[2], line_number, line)
                name = line.split(None, 3)[3]
                pending_labels.append((line_number, line, vertex, name))
            continue
        if tag == "p":
            if header is not None or len(tokens) != 4 or tokens[1] != "edge":
                raise MalformedLineError(line_number, line)
            n = _parse_int(tokens[2], line_number, line)
            m = _parse_int(tokens[3], line_number, line)
            header = (n, m, line_number, line)
            continue
        if tag == "e":
            if header is None:
                raise MissingHeaderError(line_number, line)
            if len(tokens) != 3:
                raise MalformedLineError(line_number, line)
            n = header[0]
            u = _parse_int(tokens[1], line_number, line)
            v = _parse_int(tokens[2], line_number, line)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexOutOfRangeError(line_number, line, w, n)
            if u == v:
                raise SelfLoopError(line_number, line)
            if u > v:
                raise UnorderedEdgeError(line_number, line)
            edge = (u, v)
            if edge in edges:
                raise DuplicateEdgeError(line_number, line)
            edges.add(edge)
            continue
        raise MalformedLineError(line_number, line)

    if header is None:
        raise MissingHeaderError(0, "")
    n, m, header_line_number, header_line = header
    if m != len(edges):
        raise EdgeCountMismatchError(header_line_number, header_line, m, len(edges))
    for line_number, line, vertex, name in pending_labels:
        if not 1 <= vertex <= n:
            raise VertexOutOfRangeError(line_number, line, vertex, n)
        labels[vertex] = name

    logger.debug(f"Parsed graph with {n} vertices and {m} edges")
    return Graph(n=n, edges=frozenset(edges), labels=labels)


def format_graph(g: Graph, comment: Optional[str] = None) -> str:
    """Serialise g: optional comment, label comments, header, then edges ascending."""
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.extend(f"c label {v} {g.labels[v]}" for v in sorted(g.labels))
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path: str, comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g, comment))
