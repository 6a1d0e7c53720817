"""Tests for decomposition files."""

import pytest

from app.services.decomp import Decomposition, format_decomposition, parse_decomposition
from app.services.decomp import read_decomposition, write_decomposition
from app.services.decomp.exceptions import DecompositionParseError


def test_format_lists_vertices_by_part():
    d = Decomposition.of(3, [[3, 1], [2]])
    assert format_decomposition(d) == "p decomp 3 2\nh 1 1\nh 1 3\nh 2 2\n"


def test_parse_skips_comments_and_blank_lines():
    d = parse_decomposition("c peeled\n\np decomp 3 2\nh 2 1\nh 1 2\nh 1 3\n")
    assert d.parts == (frozenset({2, 3}), frozenset({1}))


def test_file_round_trip(tmp_path):
    d = Decomposition.of(4, [[2, 3], [1], [4]])
    target = tmp_path / "d.decomp"
    write_decomposition(d, str(target))
    assert read_decomposition(str(target)) == d


@pytest.mark.parametrize(
    "text,line_number,reason",
    [
        ("p decomp x 1\n", 1, "malformed header"),
        ("p decomp 2 1\nh 1\n", 2, "malformed line"),
        ("p decomp 2 1\nh 1 \u00b2\n", 2, "malformed line"),
        ("p decomp \u00b2 1\n", 1, "malformed header"),
        ("h 1 1\n", 1, "part line before header"),
        ("p decomp 2 1\nh 2 1\n", 2, "part index outside 1..1"),
        ("c nothing\n", 0, "missing header"),
        ("p decomp 2 1\nh 1 1\n", 0, "vertex 2 in no part"),
    ],
)
def test_parse_errors(text, line_number, reason):
    with pytest.raises(DecompositionParseError) as excinfo:
        parse_decomposition(text)
    assert excinfo.value.line_number == line_number
    assert excinfo.value.reason == reason
