"""
Plain-text graph format.

    g <genus>
    v <vertex_count>
    e <edge_id> <u> <v>      (a loop when u == v)
    n <edge_id> <name>       (optional)

Blank lines and lines starting with ``#`` are ignored.
"""

import logging
from pathlib import Path

from ..core.graph import TrivalentGraph, ensure_valid
from ..exceptions import GraphFormatError

logger = logging.getLogger(__name__)


def _int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError as e:
        raise GraphFormatError(f"Line {line_number}: expected an integer, got {token!r}") from e


def parse_graph(text: str, validate: bool = True) -> TrivalentGraph:
    """Parse the text format; validates the graph unless ``validate`` is False."""
    genus: int | None = None
    vertex_count: int | None = None
    edges: dict[int, tuple[int, int]] = {}
    names: dict[int, str] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, *fields = line.split()

        if kind == "g" and len(fields) == 1:
            genus = _int(fields[0], line_number)
        elif kind == "v" and len(fields) == 1:
            vertex_count = _int(fields[0], line_number)
        elif kind == "e" and len(fields) == 3:
            edge, u, v = (_int(f, line_number) for f in fields)
            if edge in edges:
                raise GraphFormatError(f"Line {line_number}: edge {edge} defined twice")
            edges[edge] = (u, v)
        elif kind == "n" and len(fields) == 2:
            names[_int(fields[0], line_number)] = fields[1]
        else:
            raise GraphFormatError(f"Line {line_number}: cannot parse {line!r}")

    if genus is None or vertex_count is None:
        raise GraphFormatError("Graph text needs both a 'g' and a 'v' line")
    if sorted(edges) != list(range(len(edges))):
        raise GraphFormatError(f"Edge ids must be 0..{len(edges) - 1}, got {sorted(edges)}")
    unknown = sorted(set(names) - set(edges))
    if unknown:
        raise GraphFormatError(f"Names given for unknown edges {unknown}")

    graph = TrivalentGraph(
        genus=genus,
        vertex_count=vertex_count,
        edges=tuple(edges[e] for e in range(len(edges))),
        edge_names=names,
    )
    return ensure_valid(graph) if validate else graph


def serialize_graph(graph: TrivalentGraph) -> str:
    """Inverse of :func:`parse_graph`; names follow the edges, sorted by id."""
    lines = [f"g {graph.genus}", f"v {graph.vertex_count}"]
    lines.extend(f"e {edge} {u} {v}" for edge, (u, v) in enumerate(graph.edges))
    lines.extend(f"n {edge} {name}" for edge, name in sorted(graph.edge_names.items()))
    return "\n".join(lines) + "\n"


def load_graph(path: Path) -> TrivalentGraph:
    """Read and validate a graph file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"Cannot read graph file {path}: {e}") from e
    graph = parse_graph(text)
    logger.debug(f"Loaded genus {graph.genus} graph from {path}")
    return graph
