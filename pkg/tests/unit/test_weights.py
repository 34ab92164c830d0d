"""Tests for admissible weights and the Gamma_0 Abelian split."""

from fractions import Fraction

import pytest

from trivalent_verlinde.config import EngineConfig
from trivalent_verlinde.core.contraction import fusion_count_contraction
from trivalent_verlinde.core.generator import enumerate_trivalent_graphs, gamma0
from trivalent_verlinde.core.graph import TrivalentGraph
from trivalent_verlinde.core.weights import (
    WeightVector,
    abelian_filter,
    condition0_redundancy_check,
    count_weights,
    enumerate_weights,
    is_admissible,
    iter_label_space,
    scale_weight,
    triple_failure,
    unrestricted_label_space_size,
    weight_to_action_point,
)
from trivalent_verlinde.exceptions import (
    EdgeSetMismatchError,
    Gamma0NamingError,
    LabelRangeError,
    WeightCountLimitError,
)


@pytest.mark.unit
class TestVertexConditions:
    """Test the per-vertex conditions in integer labels."""

    @pytest.mark.parametrize(
        "labels, level, expected",
        [
            ((0, 0, 0), 1, None),
            ((1, 1, 0), 1, None),
            ((1, 0, 0), 1, 1),
            ((2, 2, 2), 2, 2),
            ((2, 0, 0), 2, 3),
            ((4, 2, 2), 4, None),
            ((3, 1, 1), 4, 1),
        ],
    )
    def test_triple_failure(self, labels, level, expected):
        assert triple_failure(labels, level) == expected


@pytest.mark.unit
class TestAdmissibility:
    """Test whole-graph admissibility."""

    def test_theta_level_one(self, theta):
        assert is_admissible(theta, WeightVector(1, (1, 1, 0)))
        result = is_admissible(theta, WeightVector(1, (1, 1, 1)))
        assert not result
        assert result.condition == 1

    def test_bridge_condition(self, dumbbell):
        # c1 odd at level 2: vertex parity fails as well, condition 0 is reported first
        result = is_admissible(dumbbell, WeightVector(2, (1, 1, 1)))
        assert result.condition == 0
        assert "c1" in result.location
        relaxed = is_admissible(dumbbell, WeightVector(2, (1, 1, 1)), enforce_condition0=False)
        assert relaxed.condition == 1

    def test_wrong_label_count(self, theta):
        with pytest.raises(EdgeSetMismatchError):
            is_admissible(theta, WeightVector(1, (0, 0)))

    def test_label_out_of_range(self, theta):
        with pytest.raises(LabelRangeError):
            is_admissible(theta, WeightVector(1, (2, 0, 0)))


@pytest.mark.unit
class TestEnumeration:
    """Test weight enumeration and counting."""

    def test_theta_level_one(self, theta):
        weights = enumerate_weights(theta, 1)
        assert [w.labels for w in weights] == [
            (0, 0, 0),
            (0, 1, 1),
            (1, 0, 1),
            (1, 1, 0),
        ]

    def test_dumbbell_level_two(self, dumbbell):
        labels = [w.labels for w in enumerate_weights(dumbbell, 2)]
        assert len(labels) == 10
        assert (1, 1, 2) in labels
        assert all(c % 2 == 0 for _, _, c in labels)

    def test_lexicographic_and_admissible(self, gamma0_genus3):
        weights = enumerate_weights(gamma0_genus3, 2)
        assert weights == sorted(weights)
        assert len(set(weights)) == len(weights)
        assert all(is_admissible(gamma0_genus3, w) for w in weights)

    @pytest.mark.parametrize("level", [1, 2, 3, 4])
    def test_matches_brute_force(self, theta, dumbbell, level):
        for graph in (theta, dumbbell):
            brute = [w for w in iter_label_space(graph, level) if is_admissible(graph, w)]
            assert enumerate_weights(graph, level) == brute

    def test_graph_independence(self, config):
        counts = {
            len(enumerate_weights(graph, 2, config))
            for graph in enumerate_trivalent_graphs(3, config)
        }
        assert counts == {36}

    def test_count_limit(self, theta):
        config = EngineConfig(max_weight_count=3)
        with pytest.raises(WeightCountLimitError):
            enumerate_weights(theta, 1, config)

    def test_level_zero(self, theta):
        with pytest.raises(LabelRangeError):
            enumerate_weights(theta, 0)

    def test_count_weights_verified(self, gamma0_genus3):
        assert count_weights(gamma0_genus3, 3, verify=True) == 120

    def test_label_space_size(self, gamma0_genus3):
        assert unrestricted_label_space_size(gamma0_genus3, 2) == 3**6

    @pytest.mark.parametrize("genus", [2, 3])
    def test_label_space_is_generated_in_full(self, genus, config):
        for graph in enumerate_trivalent_graphs(genus, config):
            for level in (1, 2, 3, 4):
                generated = list(iter_label_space(graph, level))
                assert len(generated) == (level + 1) ** (3 * genus - 3)
                assert len(set(generated)) == len(generated)
                assert len(generated) == unrestricted_label_space_size(graph, level)

    def test_condition0_redundant(self, config):
        for genus in (2, 3):
            for graph in enumerate_trivalent_graphs(genus, config):
                for level in (1, 2, 3, 4):
                    assert condition0_redundancy_check(graph, level, config)


@pytest.mark.unit
class TestCoordinates:
    """Test exact action coordinates."""

    def test_action_scale(self):
        point = weight_to_action_point(WeightVector(4, (2, 4, 0)))
        assert point.coordinates == (Fraction(1, 2), Fraction(1), Fraction(0))
        assert point.scale == "action"

    def test_weight_scale(self):
        point = weight_to_action_point(WeightVector(4, (2, 4, 0)), "weight")
        assert point.coordinates == (Fraction(1, 4), Fraction(1, 2), Fraction(0))

    def test_weights(self):
        assert WeightVector(2, (1, 2)).weights() == (Fraction(1, 4), Fraction(1, 2))

    def test_scaling_preserves_point(self, theta):
        weight = WeightVector(2, (1, 1, 2))
        scaled = scale_weight(weight, 3)
        assert scaled == WeightVector(6, (3, 3, 6))
        assert weight_to_action_point(scaled) == weight_to_action_point(weight)
        assert is_admissible(theta, scaled)

    @pytest.mark.parametrize("genus", [2, 3])
    def test_doubling_keeps_admissibility(self, genus, config):
        for graph in enumerate_trivalent_graphs(genus, config):
            for level in (1, 2, 3, 4):
                for weight in enumerate_weights(graph, level, config):
                    doubled = scale_weight(weight, 2)
                    assert doubled.level == 2 * level
                    assert is_admissible(graph, doubled)
                    assert weight_to_action_point(doubled) == weight_to_action_point(weight)

    def test_scale_from_config(self):
        weight = WeightVector(4, (2, 4, 0))
        point = weight_to_action_point(weight, config=EngineConfig(scale="weight"))
        assert point.scale == "weight"
        assert point == weight_to_action_point(weight, "weight")
        assert weight_to_action_point(weight, "action", EngineConfig(scale="weight")).scale == "action"

    def test_from_mapping(self):
        weight = WeightVector.from_mapping(3, {2: 1, 0: 3, 1: 2})
        assert weight.labels == (3, 2, 1)
        assert weight.as_dict() == {0: 3, 1: 2, 2: 1}


@pytest.mark.unit
class TestAbelianFilter:
    """Test the Gamma_0 Abelian split."""

    def test_genus_two_level_two(self, dumbbell, golden):
        expected = golden["gamma0_abelian"][0]
        split = abelian_filter(dumbbell, 2)
        assert split.abelian_count == expected["abelian"]
        assert split.non_abelian_count == expected["non_abelian"]
        assert [w.labels for w in split.non_abelian] == [(1, 1, 2)]

    def test_level_one_all_abelian(self, gamma0_genus3):
        split = abelian_filter(gamma0_genus3, 1)
        assert split.non_abelian_count == 0
        assert split.abelian_count == fusion_count_contraction(gamma0_genus3, 1)

    def test_requires_names(self, theta):
        with pytest.raises(Gamma0NamingError):
            abelian_filter(theta, 1)

    def test_unnamed_copy_rejected(self):
        graph = gamma0(3)
        bare = TrivalentGraph(genus=3, vertex_count=4, edges=graph.edges)
        with pytest.raises(Gamma0NamingError):
            abelian_filter(bare, 2)
