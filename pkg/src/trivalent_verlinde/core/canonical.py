"""
Canonical labeling of small multigraphs.

Colour refinement followed by individualization of the first non-singleton
cell; the certificate is the least encoded edge list over all leaves of the
search tree. Every choice depends only on colours, so the result is a
function of the isomorphism class.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import total_ordering

from .graph import TrivalentGraph

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class CanonicalCertificate:
    """Isomorphism-invariant byte string; ordered bytewise."""

    certificate: bytes

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, CanonicalCertificate):
            return NotImplemented
        return self.certificate < other.certificate

    @property
    def text(self) -> str:
        return self.certificate.decode("ascii")

    def __str__(self) -> str:
        return self.text


class _ColouredGraph:
    """Neighbour multiplicities and loop counts, precomputed once."""

    def __init__(self, graph: TrivalentGraph) -> None:
        self.graph = graph
        self.n = graph.vertex_count
        self.loops = [0] * self.n
        self.neighbours: list[Counter[int]] = [Counter() for _ in range(self.n)]
        for u, v in graph.edges:
            if u == v:
                self.loops[u] += 1
            else:
                self.neighbours[u][v] += 1
                self.neighbours[v][u] += 1

    def refine(self, colours: list[int]) -> list[int]:
        """Refine to the coarsest equitable partition, with canonical colour ids."""
        while True:
            signatures = [
                (
                    colours[v],
                    self.loops[v],
                    tuple(
                        sorted((colours[u], m) for u, m in self.neighbours[v].items())
                    ),
                )
                for v in range(self.n)
            ]
            rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
            refined = [rank[sig] for sig in signatures]
            if len(rank) == len(set(colours)):
                return refined
            colours = refined

    def encode(self, colours: list[int]) -> bytes:
        """Edge list under the discrete colouring, as ASCII."""
        relabelled = sorted(
            (min(colours[u], colours[v]), max(colours[u], colours[v]))
            for u, v in self.graph.edges
        )
        body = ";".join(f"{a}-{b}" for a, b in relabelled)
        return f"v{self.n};{body}".encode("ascii")

    def search(self, colours: list[int]) -> tuple[bytes, list[int]]:
        colours = self.refine(colours)
        if len(set(colours)) == self.n:
            return self.encode(colours), colours

        cell_sizes = Counter(colours)
        target = min(c for c, size in cell_sizes.items() if size > 1)
        best: tuple[bytes, list[int]] | None = None
        for vertex in range(self.n):
            if colours[vertex] != target:
                continue
            individualized = [
                2 * c if v == vertex else 2 * c + 1 for v, c in enumerate(colours)
            ]
            candidate = self.search(individualized)
            if best is None or candidate[0] < best[0]:
                best = candidate
        assert best is not None
        return best


def canonical_labeling(graph: TrivalentGraph) -> tuple[CanonicalCertificate, list[int]]:
    """Return the certificate and the vertex relabeling that produces it."""
    coloured = _ColouredGraph(graph)
    encoded, colours = coloured.search([0] * graph.vertex_count)
    return CanonicalCertificate(encoded), colours


def canonical_certificate(graph: TrivalentGraph) -> CanonicalCertificate:
    """Certificate equal for two graphs iff they are isomorphic."""
    return canonical_labeling(graph)[0]


def canonical_form(graph: TrivalentGraph) -> TrivalentGraph:
    """Relabel vertices canonically and sort edges; edge names travel along."""
    _, relabel = canonical_labeling(graph)
    mapped = [
        ((min(relabel[u], relabel[v]), max(relabel[u], relabel[v])), edge)
        for edge, (u, v) in enumerate(graph.edges)
    ]
    mapped.sort(key=lambda item: (item[0], graph.name_of(item[1])))
    names = {
        new_id: graph.edge_names[old_id]
        for new_id, (_, old_id) in enumerate(mapped)
        if old_id in graph.edge_names
    }
    return TrivalentGraph(
        genus=graph.genus,
        vertex_count=graph.vertex_count,
        edges=tuple(pair for pair, _ in mapped),
        edge_names=names,
    )
