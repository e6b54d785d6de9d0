"""Readers and writers for the .gf2, .circ and .graph text formats.

.gf2   optional ``#`` comment lines, then one matrix row per line as a 0/1
       string; column j (left to right) is element j.
.circ  first line ``n``; each further line one circuit as space-separated
       1-based elements.
.graph optional ``#`` comments; optional ``vertices v1 v2 ...`` header;
       edge lines ``label u v`` or ``u v`` (labels then follow file order).
"""

from __future__ import annotations

from pathlib import Path

from .errors import InputError, InvalidCircuitAxioms
from .gf2 import GF2Matrix
from .graphs import LabeledGraph
from .matroid import BinaryMatroid, GeneralMatroid


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((no, line))
    return out


def parse_gf2(text: str) -> BinaryMatroid:
    rows = []
    for no, line in _content_lines(text):
        line = line.replace(" ", "")
        if set(line) - {"0", "1"}:
            raise InputError(f"line {no}: rows must contain only 0 and 1")
        rows.append(line)
    if not rows:
        raise InputError("no matrix rows")
    if len({len(r) for r in rows}) != 1:
        raise InputError("rows have different lengths")
    try:
        return BinaryMatroid(GF2Matrix.from_strings(rows))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_circ(text: str) -> GeneralMatroid:
    lines = _content_lines(text)
    if not lines:
        raise InputError("missing element count")
    try:
        n = int(lines[0][1])
    except ValueError:
        raise InputError(f"line {lines[0][0]}: expected the element count") from None
    circuits = []
    for no, line in lines[1:]:
        try:
            c = [int(t) for t in line.split()]
        except ValueError:
            raise InputError(f"line {no}: circuit elements must be integers") from None
        if any(e < 1 or e > n for e in c):
            raise InputError(f"line {no}: element out of range 1..{n}")
        circuits.append(c)
    try:
        return GeneralMatroid(n, circuits)
    except InvalidCircuitAxioms as exc:
        raise InputError(f"invalid circuits: {exc}") from exc


def parse_graph(text: str) -> LabeledGraph:
    vertices = None
    edges = []
    for no, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "vertices":
            vertices = tokens[1:]
            continue
        if len(tokens) == 2:
            edges.append((None, tokens[0], tokens[1]))
        elif len(tokens) == 3:
            try:
                label = int(tokens[0])
            except ValueError:
                raise InputError(f"line {no}: edge label must be an integer") from None
            edges.append((label, tokens[1], tokens[2]))
        else:
            raise InputError(f"line {no}: expected 'label u v' or 'u v'")
    labelled = [e[0] is not None for e in edges]
    if any(labelled) and not all(labelled):
        raise InputError("either every edge carries a label or none does")
    if edges and not labelled[0]:
        edges = [(i, u, v) for i, (_, u, v) in enumerate(edges, 1)]
    if vertices is None:
        vertices = []
        for _, u, v in edges:
            for x in (u, v):
                if x not in vertices:
                    vertices.append(x)
    try:
        return LabeledGraph(tuple(vertices), tuple(edges))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def read_input(path: str | Path):
    """Load a file by extension: BinaryMatroid, GeneralMatroid or LabeledGraph."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    suffix = path.suffix.lower()
    if suffix == ".gf2":
        return parse_gf2(text)
    if suffix == ".circ":
        return parse_circ(text)
    if suffix == ".graph":
        return parse_graph(text)
    raise InputError(f"unknown file type {suffix!r}; expected .gf2, .circ or .graph")


def format_gf2(m: BinaryMatroid) -> str:
    return "".join(row + "\n" for row in m.matrix.to_strings())


def format_graph(g: LabeledGraph) -> str:
    lines = ["vertices " + " ".join(str(v) for v in g.vertices)]
    lines += [f"{lab} {u} {v}" for lab, u, v in g.edges]
    return "\n".join(lines) + "\n"
