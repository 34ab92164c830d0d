"""Exhaustive generation of trivalent graphs and the chain graph Gamma_0."""

import logging
from collections.abc import Iterator

import networkx as nx

from ..config import EngineConfig, resolve_config
from ..exceptions import GenusRangeError
from .canonical import CanonicalCertificate, canonical_certificate, canonical_form
from .graph import TrivalentGraph, ensure_valid

logger = logging.getLogger(__name__)


def _labelled_multigraphs(vertex_count: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """
    Backtrack over cubic edge multisets on ``vertex_count`` vertices.

    Vertex ``u`` is saturated before ``u + 1``; its partners are taken in
    nondecreasing order, and among untouched vertices only the lowest one is
    tried since the rest are interchangeable. Closing a component while
    untouched vertices remain is pruned.
    """
    residual = [3] * vertex_count
    touched = [False] * vertex_count
    edges: list[tuple[int, int]] = []

    def extend(u: int, min_partner: int) -> Iterator[tuple[tuple[int, int], ...]]:
        while u < vertex_count and residual[u] == 0:
            u += 1
            min_partner = u
            if all(residual[v] == 0 for v in range(vertex_count) if touched[v]):
                if not all(touched):
                    return
        if u == vertex_count:
            yield tuple(edges)
            return

        untouched_tried = False
        for v in range(max(u, min_partner), vertex_count):
            if v == u:
                if residual[u] < 2:
                    continue
                residual[u] -= 2
                previous = touched[u]
                touched[u] = True
                edges.append((u, u))
                yield from extend(u, v)
                edges.pop()
                touched[u] = previous
                residual[u] += 2
                continue

            if residual[v] == 0:
                continue
            if not touched[v]:
                if untouched_tried:
                    continue
                untouched_tried = True
            residual[u] -= 1
            residual[v] -= 1
            previous_u, previous_v = touched[u], touched[v]
            touched[u] = touched[v] = True
            edges.append((u, v))
            yield from extend(u, v)
            edges.pop()
            touched[u], touched[v] = previous_u, previous_v
            residual[u] += 1
            residual[v] += 1

    yield from extend(0, 0)


def check_genus(genus: int, config: EngineConfig | None = None) -> None:
    config = resolve_config(config)
    if not 2 <= genus <= config.max_genus:
        raise GenusRangeError(
            f"Genus {genus} outside supported range 2..{config.max_genus}"
        )


def enumerate_trivalent_graphs(
    genus: int, config: EngineConfig | None = None
) -> list[TrivalentGraph]:
    """
    One canonical representative per isomorphism class of genus ``genus``.

    Args:
        genus: Genus g, between 2 and ``config.max_genus``
        config: Engine configuration (defaults apply when None)

    Returns:
        Canonical forms sorted by certificate
    """
    check_genus(genus, config)
    vertex_count = 2 * genus - 2
    classes: dict[CanonicalCertificate, TrivalentGraph] = {}
    raw = 0

    for edges in _labelled_multigraphs(vertex_count):
        raw += 1
        graph = TrivalentGraph(genus=genus, vertex_count=vertex_count, edges=edges)
        if not nx.is_connected(graph.to_networkx()):
            continue
        certificate = canonical_certificate(graph)
        if certificate not in classes:
            classes[certificate] = canonical_form(graph)

    logger.info(
        f"Genus {genus}: {raw} labelled candidates, {len(classes)} isomorphism classes"
    )
    return [ensure_valid(classes[c]) for c in sorted(classes)]


def gamma0(genus: int) -> TrivalentGraph:
    """
    Chain graph for a connected sum of ``genus`` tori.

    Loop a1 at the first vertex, bridges c1..c_{g-1}, a double edge
    {a_i, a'_i} for every middle handle, and loop a_g at the last vertex.
    Edge ids run through a1..a_g, then a'2..a'_{g-1}, then c1..c_{g-1}.
    """
    if genus < 2:
        raise GenusRangeError(f"Gamma_0 needs genus >= 2, got {genus}")

    last = 2 * genus - 3
    a_edges: list[tuple[int, int]] = [(0, 0)]
    a_prime_edges: list[tuple[int, int]] = []
    c_edges: list[tuple[int, int]] = [(0, 1)]
    for i in range(2, genus):
        left, right = 2 * i - 3, 2 * i - 2
        a_edges.append((left, right))
        a_prime_edges.append((left, right))
        c_edges.append((right, right + 1))
    a_edges.append((last, last))

    names = {i: f"a{i + 1}" for i in range(genus)}
    names.update({genus + j: f"a'{j + 2}" for j in range(genus - 2)})
    names.update({2 * genus - 2 + j: f"c{j + 1}" for j in range(genus - 1)})

    graph = TrivalentGraph(
        genus=genus,
        vertex_count=2 * genus - 2,
        edges=tuple(a_edges + a_prime_edges + c_edges),
        edge_names=names,
    )
    return ensure_valid(graph)


def gamma0_names(genus: int) -> dict[str, list[str]]:
    """The three name groups of Gamma_0's edges."""
    return {
        "a": [f"a{i}" for i in range(1, genus + 1)],
        "a_prime": [f"a'{i}" for i in range(2, genus)],
        "c": [f"c{i}" for i in range(1, genus)],
    }
