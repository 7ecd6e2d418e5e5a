"""Text format round trips and parse diagnostics."""

import itertools

import pytest
from hypothesis import given, strategies as st

from chroma import ColorfulGraph, CgfError, load_cgf, parse_cgf, save_cgf, serialize_cgf


SAMPLE = """\
cgf 1
q 2
n 4
# a square with two colored corners
c 0 1
c 2 1 2
e 0 1
e 0 3
e 1 2
e 2 3
"""


def test_parse_sample():
    g = parse_cgf(SAMPLE)
    assert g.q == 2 and g.n == 4 and g.m == 4
    assert g.colors_of(0) == (1,)
    assert g.colors_of(2) == (1, 2)
    assert g.colors_of(1) == ()


def test_serialize_is_canonical():
    g = parse_cgf(SAMPLE)
    text = serialize_cgf(g)
    # comments are not preserved; data lines are
    assert text == SAMPLE.replace("# a square with two colored corners\n", "")
    assert parse_cgf(text) == g


def test_blank_lines_and_comments_ignored():
    g = parse_cgf("cgf 1\n\nq 0\n# hi\nn 2\n\ne 0 1\n# bye\n")
    assert g.n == 2 and g.m == 1


def test_empty_graph():
    g = parse_cgf("cgf 1\nq 3\nn 0\n")
    assert g.n == 0 and g.m == 0 and g.q == 3
    assert parse_cgf(serialize_cgf(g)) == g


# ------------------------------------------------------------- error lines

@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("", 1, "cgf 1"),
        ("cgf 2\nq 0\nn 0\n", 1, "cgf 1"),
        ("cgf 1\nn 3\nq 1\n", 2, "before q"),
        ("cgf 1\nq 1\nq 1\nn 0\n", 3, "duplicate q"),
        ("cgf 1\nq 1\nn 1\nn 1\n", 4, "duplicate n"),
        ("cgf 1\nq -1\nn 0\n", 2, "nonnegative"),
        ("cgf 1\nq 1\nn 2\ne 0 x\n", 4, "not an integer"),
        ("cgf 1\nq 1\nn 2\ne 1 0\n", 4, "u < v"),
        ("cgf 1\nq 1\nn 2\ne 0 2\n", 4, "out of range"),
        ("cgf 1\nq 1\nn 2\ne 0 1\ne 0 1\n", 5, "duplicate edge"),
        ("cgf 1\nq 1\nn 2\nc 0 1\nc 0 1\n", 5, "duplicate c line"),
        ("cgf 1\nq 1\nn 2\nc 0 2\n", 4, "exceeds q"),
        ("cgf 1\nq 2\nn 2\nc 0 2 1\n", 4, "strictly increasing"),
        ("cgf 1\nq 2\nn 2\nc 0 1 1\n", 4, "strictly increasing"),
        ("cgf 1\nq 1\nn 1\nz 0\n", 4, "unknown line kind"),
        ("cgf 1\ne 0 1\n", 2, "before graph data"),
        ("cgf 1\nq 1\n", 3, "missing q or n"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(CgfError) as exc:
        parse_cgf(text)
    assert exc.value.line == line
    assert needle in str(exc.value)


def test_cgf_error_is_a_value_error():
    assert issubclass(CgfError, ValueError)


# ------------------------------------------------------------- files

def test_save_and_load(tmp_path):
    g = parse_cgf(SAMPLE)
    p = tmp_path / "square.cgf"
    save_cgf(g, str(p))
    assert load_cgf(str(p)) == g
    assert p.read_text() == serialize_cgf(g)


# ------------------------------------------------------------- property

@given(
    st.integers(0, 5),
    st.integers(0, 3),
    st.integers(0, 1 << 10),
    st.lists(st.integers(0, 7), min_size=5, max_size=5),
)
def test_round_trip_any_graph(n, q, bits, pals):
    pairs = list(itertools.combinations(range(n), 2))
    g = ColorfulGraph(
        q,
        tuple(p & ((1 << q) - 1) for p in pals[:n]),
        tuple(pairs[i] for i in range(len(pairs)) if bits >> i & 1),
    )
    assert parse_cgf(serialize_cgf(g)) == g
