"""Ordering files: one vertex id per line, smallest first."""

from .exceptions import OrderParseError
from .models import LinearOrder


def parse_order(text: str) -> LinearOrder:
    perm = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token:
            continue
        if not (token.isascii() and token.isdecimal()):
            raise OrderParseError(line_number, line)
        perm.append(int(token))
    return LinearOrder.of(perm)


def format_order(L: LinearOrder) -> str:
    return "".join(f"{v}\n" for v in L)


def read_order(path: str) -> LinearOrder:
    with open(path, encoding="utf-8") as fh:
        return parse_order(fh.read())


def write_order(L: LinearOrder, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_order(L))
