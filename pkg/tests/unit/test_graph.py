"""Tests for the trivalent graph model, canonical forms and the generator."""

import random

import networkx as nx
import pytest

from trivalent_verlinde.core.canonical import canonical_certificate, canonical_form
from trivalent_verlinde.core.generator import (
    enumerate_trivalent_graphs,
    gamma0,
    gamma0_names,
)
from trivalent_verlinde.core.graph import (
    GraphViolation,
    TrivalentGraph,
    bridges,
    ensure_valid,
    is_connected_without,
    parity_rank,
    validate,
    vertex_triples,
)
from trivalent_verlinde.exceptions import (
    DegreeError,
    DisconnectedGraphError,
    EdgeEndpointError,
    GenusMismatchError,
    GenusRangeError,
    GraphCountError,
    GraphValidationError,
    InputValidationError,
)


@pytest.mark.unit
class TestValidation:
    """Test graph invariant checks."""

    def test_valid_graphs(self, theta, dumbbell, gamma0_genus3):
        for graph in (theta, dumbbell, gamma0_genus3):
            assert validate(graph).valid

    def test_endpoint_out_of_range(self):
        graph = TrivalentGraph(genus=2, vertex_count=2, edges=((0, 1), (0, 1), (0, 2)))
        result = validate(graph)
        assert result.violation is GraphViolation.ENDPOINT_RANGE
        with pytest.raises(EdgeEndpointError):
            ensure_valid(graph)

    def test_wrong_degree(self):
        graph = TrivalentGraph(genus=2, vertex_count=2, edges=((0, 0), (0, 1), (1, 1)))
        with pytest.raises(DegreeError):
            ensure_valid(graph)

    def test_disconnected(self):
        # two copies of a theta graph
        edges = ((0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3))
        graph = TrivalentGraph(genus=3, vertex_count=4, edges=edges)
        with pytest.raises(DisconnectedGraphError):
            ensure_valid(graph)

    def test_vertex_count_mismatch(self, theta):
        graph = TrivalentGraph(genus=3, vertex_count=2, edges=theta.edges)
        with pytest.raises(GraphCountError):
            ensure_valid(graph)

    def test_empty_graph(self):
        graph = TrivalentGraph(genus=1, vertex_count=0, edges=())
        with pytest.raises(DisconnectedGraphError):
            ensure_valid(graph)

    def test_error_hierarchy(self):
        for error in (EdgeEndpointError, DegreeError, GenusMismatchError):
            assert issubclass(error, GraphValidationError)
        assert issubclass(GraphValidationError, InputValidationError)


@pytest.mark.unit
class TestStructure:
    """Test structural queries."""

    def test_edges_normalized(self):
        graph = TrivalentGraph(genus=2, vertex_count=2, edges=((1, 0), (0, 1), (1, 0)))
        assert graph.edges == ((0, 1), (0, 1), (0, 1))

    def test_theta(self, theta):
        assert theta.edge_count == 3
        assert theta.betti_number == 2
        assert theta.loops() == ()
        assert bridges(theta) == frozenset()
        assert parity_rank(theta) == 1

    def test_dumbbell(self, dumbbell):
        assert dumbbell.loops() == (0, 1)
        assert bridges(dumbbell) == frozenset({2})
        assert not is_connected_without(dumbbell, 2)
        assert is_connected_without(dumbbell, 0)
        assert parity_rank(dumbbell) == 1

    def test_loop_counted_twice(self, dumbbell):
        triples = vertex_triples(dumbbell)
        assert triples[0].edges == (0, 0, 2)
        assert triples[0].loop_edge == 0
        assert triples[0].distinct_edges == (0, 2)
        assert dumbbell.degree(0) == 3

    def test_names(self, dumbbell):
        assert dumbbell.name_of(2) == "c1"
        assert dumbbell.edge_by_name("a2") == 1
        with pytest.raises(KeyError):
            dumbbell.edge_by_name("a3")


def _relabel(graph: TrivalentGraph, rng: random.Random) -> TrivalentGraph:
    vertices = list(graph.vertices)
    rng.shuffle(vertices)
    edges = [(vertices[u], vertices[v]) for u, v in graph.edges]
    rng.shuffle(edges)
    return TrivalentGraph(graph.genus, graph.vertex_count, tuple(edges))


@pytest.mark.unit
class TestGamma0:
    """Test the chain graph."""

    @pytest.mark.parametrize("genus", [2, 3, 4, 5])
    def test_valid_with_names(self, genus):
        graph = gamma0(genus)
        names = gamma0_names(genus)
        assert validate(graph).valid
        assert graph.has_names(set(names["a"]) | set(names["a_prime"]) | set(names["c"]))
        assert len(graph.loops()) == 2
        assert {graph.name_of(e) for e in bridges(graph)} == set(names["c"])

    def test_genus_three_layout(self, gamma0_genus3):
        assert gamma0_genus3.edge_names == {
            0: "a1",
            1: "a2",
            2: "a3",
            3: "a'2",
            4: "c1",
            5: "c2",
        }
        assert gamma0_genus3.edges[1] == gamma0_genus3.edges[3]

    def test_genus_below_two(self):
        with pytest.raises(GenusRangeError):
            gamma0(1)


@pytest.mark.unit
class TestCanonical:
    """Test canonical certificates."""

    def test_isomorphic_graphs_share_certificate(self, dumbbell):
        relabelled = TrivalentGraph(genus=2, vertex_count=2, edges=((1, 1), (0, 0), (1, 0)))
        assert canonical_certificate(relabelled) == canonical_certificate(dumbbell)

    def test_distinct_classes(self, theta, dumbbell):
        assert canonical_certificate(theta) != canonical_certificate(dumbbell)

    def test_canonical_form_is_idempotent(self, gamma0_genus3):
        form = canonical_form(gamma0_genus3)
        assert canonical_form(form) == form
        assert canonical_certificate(form) == canonical_certificate(gamma0_genus3)

    def test_names_travel(self, gamma0_genus3):
        form = canonical_form(gamma0_genus3)
        assert sorted(form.edge_names.values()) == sorted(
            gamma0_genus3.edge_names.values()
        )
        for edge, name in form.edge_names.items():
            original = gamma0_genus3.edge_by_name(name)
            assert form.is_loop(edge) == gamma0_genus3.is_loop(original)


@pytest.mark.unit
class TestEnumeration:
    """Test isomorphism class enumeration."""

    @pytest.mark.parametrize("genus", [2, 3, 4])
    def test_class_counts(self, genus, golden, config):
        graphs = enumerate_trivalent_graphs(genus, config)
        assert len(graphs) == golden["graph_counts"][str(genus)]
        certificates = [canonical_certificate(g) for g in graphs]
        assert len(set(certificates)) == len(graphs)
        assert certificates == sorted(certificates)

    @pytest.mark.slow
    def test_genus_five(self, golden, config):
        assert len(enumerate_trivalent_graphs(5, config)) == golden["graph_counts"]["5"]

    def test_every_graph_valid(self, config):
        for graph in enumerate_trivalent_graphs(3, config):
            assert validate(graph).valid

    def test_classes_pairwise_non_isomorphic(self, config):
        graphs = [g.to_networkx() for g in enumerate_trivalent_graphs(3, config)]
        for i, first in enumerate(graphs):
            for second in graphs[i + 1 :]:
                assert not nx.is_isomorphic(first, second)

    def test_gamma0_is_enumerated(self, config):
        certificates = {canonical_certificate(g) for g in enumerate_trivalent_graphs(3, config)}
        assert canonical_certificate(gamma0(3)) in certificates

    def test_genus_out_of_range(self, config):
        with pytest.raises(GenusRangeError):
            enumerate_trivalent_graphs(1, config)
        with pytest.raises(GenusRangeError):
            enumerate_trivalent_graphs(config.max_genus + 1, config)


@pytest.mark.unit
class TestInvariantsOverClasses:
    """Test structural invariants on every enumerated class."""

    @pytest.mark.parametrize(
        "genus", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)]
    )
    def test_certificate_survives_relabelling(self, genus, config):
        rng = random.Random(genus)
        for graph in enumerate_trivalent_graphs(genus, config):
            certificate = canonical_certificate(graph)
            for _ in range(5):
                relabelled = _relabel(graph, rng)
                assert canonical_certificate(relabelled) == certificate
                assert canonical_form(relabelled) == canonical_form(graph)

    @pytest.mark.parametrize("genus", [2, 3, 4])
    def test_only_bridges_disconnect(self, genus, config):
        for graph in enumerate_trivalent_graphs(genus, config):
            found = bridges(graph)
            for edge in graph.edge_ids:
                assert is_connected_without(graph, edge) == (edge not in found)
                if graph.is_loop(edge):
                    assert edge not in found

