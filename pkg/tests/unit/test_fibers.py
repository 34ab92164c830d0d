"""Tests for fibre presentations and invariants."""

import dataclasses

import pytest

from trivalent_verlinde.config import EngineConfig
from trivalent_verlinde.core.graph import vertex_triples
from trivalent_verlinde.core.weights import WeightVector
from trivalent_verlinde.fibers.classify import (
    check_inclusion_rules,
    classify_weights,
    edge_group,
    fiber_dimension,
    fiber_invariants,
    fiber_presentation,
    linearized_action,
    vertex_group,
    weight_components,
)
from trivalent_verlinde.fibers.models import FiberInvariants, FiberStatus, GroupTag
from trivalent_verlinde.utils.linalg import (
    cokernel_invariants,
    integer_rank,
    quaternion_rotation,
)


@pytest.mark.unit
class TestGroupTags:
    """Test stabilizer tags."""

    def test_dimensions(self):
        assert [t.dimension for t in GroupTag] == [0, 1, 3]
        assert GroupTag.Z2.is_subgroup_of(GroupTag.U1)
        assert GroupTag.U1.is_subgroup_of(GroupTag.SU2)
        assert not GroupTag.SU2.is_subgroup_of(GroupTag.U1)

    def test_edge_group(self):
        weight = WeightVector(4, (0, 2, 4))
        assert [edge_group(weight, e) for e in range(3)] == [
            GroupTag.SU2,
            GroupTag.U1,
            GroupTag.SU2,
        ]

    @pytest.mark.parametrize(
        "labels, level, expected",
        [
            ((0, 0, 0), 1, GroupTag.SU2),
            ((2, 2, 2), 4, GroupTag.Z2),
            ((1, 1, 2), 3, GroupTag.U1),
            ((1, 1, 0), 2, GroupTag.U1),
            ((2, 3, 3), 4, GroupTag.U1),
        ],
    )
    def test_vertex_group(self, theta, labels, level, expected):
        triple = vertex_triples(theta)[0]
        assert vertex_group(WeightVector(level, labels), triple) is expected


@pytest.mark.unit
class TestPresentation:
    """Test fibre presentations and inclusion rules."""

    def test_sides(self, dumbbell):
        presentation = fiber_presentation(dumbbell, WeightVector(2, (1, 1, 0)))
        assert presentation.sides[0].is_loop
        assert not presentation.sides[2].is_loop
        assert presentation.edge_dimension == 5
        assert presentation.vertex_dimension == 2

    def test_components(self, theta):
        components = weight_components(theta, WeightVector(3, (1, 1, 2)))
        assert components == ((1, (0, 1)), (2, (2,)))

    def test_inclusion_violation(self, theta):
        presentation = fiber_presentation(theta, WeightVector(4, (2, 2, 2)))
        broken = dataclasses.replace(
            presentation, vertex_tags=(GroupTag.SU2, GroupTag.Z2)
        )
        assert any("vertex 0" in v for v in check_inclusion_rules(broken))

    def test_z2_edge_rejected(self, theta):
        presentation = fiber_presentation(theta, WeightVector(4, (2, 2, 2)))
        broken = dataclasses.replace(
            presentation, edge_tags=(GroupTag.Z2, GroupTag.U1, GroupTag.U1)
        )
        assert "edge 0 tagged Z2" in check_inclusion_rules(broken)


@pytest.mark.unit
class TestDimension:
    """Test the fibre dimension from the linearized action."""

    def test_generic_torus(self, theta):
        presentation = fiber_presentation(theta, WeightVector(4, (2, 2, 2)))
        invariants = fiber_invariants(presentation)
        assert invariants.dimension == 3
        assert invariants.status is FiberStatus.EXACT
        assert (invariants.t, invariants.p, invariants.s) == (3, 0, 0)
        assert invariants.h1_free == 3
        assert invariants.consistent()

    def test_tight_vertices_cut_torus(self, theta):
        invariants = fiber_invariants(fiber_presentation(theta, WeightVector(3, (1, 1, 2))))
        assert invariants.dimension == 2
        assert invariants.t == 2
        assert invariants.h1_free == 2
        assert invariants.h1_torsion2 == 0

    def test_trivial_weight(self, theta):
        presentation = fiber_presentation(theta, WeightVector(1, (0, 0, 0)))
        assert fiber_dimension(presentation) == 3
        assert fiber_invariants(presentation).status is FiberStatus.PARTIAL

    def test_mixed_weight(self, dumbbell):
        presentation = fiber_presentation(dumbbell, WeightVector(2, (1, 1, 0)))
        action = linearized_action(presentation)
        assert len(action) == 5
        assert integer_rank(action, presentation.vertex_dimension) == 2
        assert fiber_dimension(presentation) == 3

    def test_partial_has_no_invariants(self, dumbbell):
        invariants = fiber_invariants(fiber_presentation(dumbbell, WeightVector(2, (1, 1, 0))))
        assert invariants.t is None
        assert invariants.h1_free is None
        assert invariants.consistent()

    def test_inconsistent_invariants(self):
        invariants = FiberInvariants(
            dimension=3, status=FiberStatus.EXACT, t=2, p=0, s=0, h1_free=2, h1_torsion2=0
        )
        assert not invariants.consistent()


@pytest.mark.unit
class TestClassification:
    """Test classification of every admissible weight."""

    @pytest.mark.parametrize("level", range(1, 7))
    def test_genus_two(self, theta, dumbbell, level, config):
        for graph in (theta, dumbbell):
            classification = classify_weights(graph, level, config)
            assert classification.violations == []
            assert set(classification.dimension_histogram) <= {0, 1, 2, 3}
            assert sum(classification.dimension_histogram.values()) == len(
                classification.entries
            )

    @pytest.mark.parametrize("level", range(1, 7))
    def test_genus_two_generic_and_trivial(self, theta, dumbbell, level, config):
        for graph in (theta, dumbbell):
            for presentation, invariants, _ in classify_weights(graph, level, config).entries:
                generic = all(t is GroupTag.U1 for t in presentation.edge_tags) and all(
                    t is GroupTag.Z2 for t in presentation.vertex_tags
                )
                if generic:
                    assert invariants.dimension == 3
                    assert (invariants.t, invariants.p, invariants.s) == (3, 0, 0)
                    assert (invariants.h1_free, invariants.h1_torsion2) == (3, 0)
                if not any(presentation.weight.labels):
                    assert invariants.dimension == 3
                assert invariants.consistent()

    def test_genus_three(self, gamma0_genus3, config):
        classification = classify_weights(gamma0_genus3, 2, config)
        assert classification.violations == []
        assert classification.exact_count + classification.partial_count == 36

    def test_workers_do_not_change_result(self, theta):
        serial = classify_weights(theta, 3, EngineConfig(workers=1))
        parallel = classify_weights(theta, 3, EngineConfig(workers=3))
        assert [inv for _, inv, _ in serial.entries] == [
            inv for _, inv, _ in parallel.entries
        ]


@pytest.mark.unit
class TestLinearAlgebra:
    """Test the integer linear algebra helpers."""

    def test_rank(self):
        assert integer_rank([[1, 2], [2, 4]], 2) == 1
        assert integer_rank([], 3) == 0

    def test_cokernel_torsion(self):
        free, torsion = cokernel_invariants([[2, 0], [0, 1], [0, 0]], 2)
        assert free == 1
        assert torsion == (2,)

    def test_rotation_is_orthogonal(self):
        n, matrix = quaternion_rotation((1, 2, 3, 4))
        assert n == 30
        for i in range(3):
            for j in range(3):
                dot = sum(matrix[i][k] * matrix[j][k] for k in range(3))
                assert dot == (n * n if i == j else 0)

    def test_zero_quaternion(self):
        with pytest.raises(ValueError):
            quaternion_rotation((0, 0, 0, 0))
