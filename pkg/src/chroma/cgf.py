"""CGF: a line-oriented text format for colorful graphs.

Layout (version 1)::

    cgf 1
    q 2
    n 4
    # any comment
    c 0 1
    c 2 1 2
    e 0 1
    e 1 2

Line 1 is the magic "cgf 1".  The header lines "q <Q>" and "n <N>" follow
(in that order).  Then any number of color lines ``c <v> <c1> <c2> ...``
with strictly increasing 1-based colors and edge lines ``e <u> <v>`` with
u < v.  Comment lines start with "#" and are allowed anywhere after line 1.
All parse errors carry the 1-based line number.
"""

from __future__ import annotations

from .core import ColorfulGraph, mask_colors


class CgfError(ValueError):
    """Parse failure; .line is the 1-based offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _int(tok: str, line: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise CgfError(line, f"{what} is not an integer: {tok!r}") from None


def parse_cgf(text: str) -> ColorfulGraph:
    lines = text.split("\n")
    if not lines or lines[0].strip() != "cgf 1":
        raise CgfError(1, "expected header 'cgf 1'")

    q = n = None
    palettes: list[int] = []
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    color_seen: set[int] = set()

    def need_header(lineno: int) -> None:
        if q is None or n is None:
            raise CgfError(lineno, "q and n must come before graph data")

    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        kind = toks[0]
        if kind == "q":
            if q is not None:
                raise CgfError(lineno, "duplicate q line")
            if len(toks) != 2:
                raise CgfError(lineno, "q line needs exactly one value")
            q = _int(toks[1], lineno, "q")
            if q < 0:
                raise CgfError(lineno, f"q must be nonnegative, got {q}")
        elif kind == "n":
            if q is None:
                raise CgfError(lineno, "n line before q line")
            if n is not None:
                raise CgfError(lineno, "duplicate n line")
            if len(toks) != 2:
                raise CgfError(lineno, "n line needs exactly one value")
            n = _int(toks[1], lineno, "n")
            if n < 0:
                raise CgfError(lineno, f"n must be nonnegative, got {n}")
            palettes = [0] * n
        elif kind == "c":
            need_header(lineno)
            if len(toks) < 3:
                raise CgfError(lineno, "c line needs a vertex and at least one color")
            v = _int(toks[1], lineno, "vertex")
            if not 0 <= v < n:  # type: ignore[operator]
                raise CgfError(lineno, f"vertex {v} out of range 0..{n - 1}")
            if v in color_seen:
                raise CgfError(lineno, f"duplicate c line for vertex {v}")
            color_seen.add(v)
            prev = 0
            mask = 0
            for tok in toks[2:]:
                c = _int(tok, lineno, "color")
                if c <= prev:
                    raise CgfError(
                        lineno, f"colors must be strictly increasing, got {c} after {prev}"
                    )
                if c > q:  # type: ignore[operator]
                    raise CgfError(lineno, f"color {c} exceeds q={q}")
                mask |= 1 << (c - 1)
                prev = c
            palettes[v] = mask
        elif kind == "e":
            need_header(lineno)
            if len(toks) != 3:
                raise CgfError(lineno, "e line needs exactly two vertices")
            u = _int(toks[1], lineno, "vertex")
            v = _int(toks[2], lineno, "vertex")
            if not u < v:
                raise CgfError(lineno, f"edge endpoints must satisfy u < v, got {u} {v}")
            if u < 0:
                raise CgfError(lineno, f"vertex {u} out of range 0..{n - 1}")
            if v >= n:  # type: ignore[operator]
                raise CgfError(lineno, f"vertex {v} out of range 0..{n - 1}")
            if (u, v) in edge_seen:
                raise CgfError(lineno, f"duplicate edge {u} {v}")
            edge_seen.add((u, v))
            edges.append((u, v))
        else:
            raise CgfError(lineno, f"unknown line kind {kind!r}")

    if q is None or n is None:
        raise CgfError(len(lines), "missing q or n header line")
    return ColorfulGraph(q, tuple(palettes), tuple(sorted(edges)))


def serialize_cgf(g: ColorfulGraph) -> str:
    """Canonical text: header, c-lines by ascending vertex, e-lines sorted."""
    out = ["cgf 1", f"q {g.q}", f"n {g.n}"]
    for v in range(g.n):
        if g.palettes[v]:
            cols = " ".join(str(c) for c in mask_colors(g.palettes[v]))
            out.append(f"c {v} {cols}")
    for u, v in sorted(g.edges):
        out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"


def load_cgf(path: str) -> ColorfulGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cgf(fh.read())


def save_cgf(g: ColorfulGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_cgf(g))
