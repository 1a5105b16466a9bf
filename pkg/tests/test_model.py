import pytest

from corebp import (
    AnalysisConfig,
    DEFAULT_EPSILON,
    DEFAULT_MERGE_THRESHOLD,
    DependencyEdge,
    GoalTree,
    Risk,
    risk_rank,
)

from builders import base_model


def test_risk_rank_orders_none_low_high():
    assert risk_rank(None) < risk_rank(Risk.LOW) < risk_rank(Risk.HIGH)
    assert max([None, Risk.LOW, Risk.HIGH], key=risk_rank) is Risk.HIGH
    assert max([None, None], key=risk_rank) is None


def test_config_defaults_apply_only_when_unset():
    config = AnalysisConfig()
    assert config.effective_epsilon == DEFAULT_EPSILON
    assert config.effective_merge_threshold == DEFAULT_MERGE_THRESHOLD
    custom = AnalysisConfig(epsilon=1e-6, merge_threshold=0.5)
    assert custom.effective_epsilon == 1e-6
    assert custom.effective_merge_threshold == 0.5


def test_lookup_helpers():
    model = base_model()
    assert model.goal("G2").name == "retain customers"
    assert model.process("P3").id == "P3"
    assert model.goal_count == 3
    assert model.goal_ids() == ("G1", "G2", "G3")
    assert model.process_ids() == ("P1", "P2", "P3")
    assert model.representative_ids() == ("r1", "r2", "r3")


def test_unknown_ids_raise_key_error():
    model = base_model()
    with pytest.raises(KeyError):
        model.goal("G9")
    with pytest.raises(KeyError):
        model.process("P9")


def test_absent_support_entry_reads_as_zero():
    model = base_model()
    assert model.support_coefficient("P1", "G3") == 0.0
    assert model.support_coefficient("P2", "G2") == 1.0


def test_tree_for_returns_first_declared_tree():
    model = base_model()
    assert model.tree_for("G2") is model.goal_trees[0]
    assert model.tree_for("G1") is None
    extra = GoalTree("G2", ())
    doubled = base_model(goal_trees=model.goal_trees + (extra,))
    assert doubled.tree_for("G2") is doubled.goal_trees[0]


def test_with_config_replaces_only_config():
    model = base_model()
    tuned = model.with_config(AnalysisConfig(capacity=2))
    assert tuned.config.capacity == 2
    assert tuned.goals == model.goals
    assert model.config.capacity is None


def test_dependency_pair_is_canonical():
    assert DependencyEdge("P2", "P1", 0.5).pair() == ("P1", "P2")
    assert DependencyEdge("P1", "P2", 0.5).pair() == ("P1", "P2")
