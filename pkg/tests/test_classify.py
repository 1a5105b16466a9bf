import itertools
import random

import pytest

from corebp import (
    AnalysisConfig,
    BusinessProcess,
    Cell,
    GoalTree,
    PriorityClass,
    QANode,
    QualityAttributeScenario,
    Risk,
    classify,
    decision_cell,
    default_threshold,
    priority_class,
    prioritize_all,
    resolve,
)
from corebp.classify import DECISION_TABLE, classify_priority, effective_threshold

from builders import base_model, single_goal_model
from modelgen import random_model

EXPECTED_CELLS = {
    (PriorityClass.HIGH, Risk.HIGH): Cell.CERTAINLY_CBP,
    (PriorityClass.HIGH, Risk.LOW): Cell.CAN_BE_CBP,
    (PriorityClass.HIGH, None): Cell.CAN_BE_CBP,
    (PriorityClass.LOW, Risk.HIGH): Cell.CANT_BE_CBP,
    (PriorityClass.LOW, Risk.LOW): Cell.CANT_BE_CBP,
    (PriorityClass.LOW, None): Cell.CERTAINLY_NOT_CBP,
}


def high_risk_leaf(scenario_id: str = "S7") -> QANode:
    return QANode("x", scenario=QualityAttributeScenario(scenario_id, Risk.HIGH))


def with_override(process_id: str, override: bool):
    base = base_model()
    return tuple(
        BusinessProcess(p.id, p.name, cbp_override=override) if p.id == process_id else p
        for p in base.processes
    )


def test_decision_table_layout():
    assert DECISION_TABLE == EXPECTED_CELLS
    for combo, cell in EXPECTED_CELLS.items():
        assert decision_cell(*combo) is cell


def test_resolution_over_all_twelve_cases():
    expected = {
        (Cell.CERTAINLY_CBP, None): (True, False, False),
        (Cell.CERTAINLY_CBP, True): (True, False, True),
        (Cell.CERTAINLY_CBP, False): (True, False, True),
        (Cell.CAN_BE_CBP, None): (True, False, False),
        (Cell.CAN_BE_CBP, True): (True, True, False),
        (Cell.CAN_BE_CBP, False): (False, True, False),
        (Cell.CANT_BE_CBP, None): (False, False, False),
        (Cell.CANT_BE_CBP, True): (True, True, False),
        (Cell.CANT_BE_CBP, False): (False, True, False),
        (Cell.CERTAINLY_NOT_CBP, None): (False, False, False),
        (Cell.CERTAINLY_NOT_CBP, True): (False, False, True),
        (Cell.CERTAINLY_NOT_CBP, False): (False, False, True),
    }
    for cell, override in itertools.product(Cell, (None, True, False)):
        assert resolve(cell, override) == expected[(cell, override)]


def test_default_threshold_is_the_mean(m1_model):
    table = prioritize_all(m1_model)
    values = list(table.process_priority.values())
    assert default_threshold(table) == pytest.approx(sum(values) / len(values), abs=1e-12)
    assert default_threshold(table) == pytest.approx(0.666667, abs=5e-7)


def test_m1_priority_classes(m1_model):
    table = prioritize_all(m1_model)
    assert priority_class(m1_model, table, "P2") is PriorityClass.HIGH
    assert priority_class(m1_model, table, "P1") is PriorityClass.LOW
    assert priority_class(m1_model, table, "P3") is PriorityClass.LOW


def test_explicit_threshold_overrides_the_mean(m1_model):
    lowered = m1_model.with_config(AnalysisConfig(priority_threshold=0.5))
    table = prioritize_all(lowered)
    assert all(
        priority_class(lowered, table, pid) is PriorityClass.HIGH for pid in ("P1", "P2", "P3")
    )


def test_tie_at_threshold_classifies_high():
    assert classify_priority(0.5, 0.5) is PriorityClass.HIGH
    assert classify_priority(0.4999999, 0.5) is PriorityClass.LOW


def test_single_process_is_always_high():
    model = single_goal_model(rating=1)
    table = prioritize_all(model)
    assert priority_class(model, table, "P1") is PriorityClass.HIGH


def test_unknown_process_raises(m1_model):
    with pytest.raises(KeyError):
        priority_class(m1_model, prioritize_all(m1_model), "P9")


def test_m1_classification(m1_model):
    by_id = {c.process_id: c for c in classify(m1_model)}
    assert by_id["P2"].cell is Cell.CERTAINLY_CBP
    assert by_id["P2"].resolved is True
    assert by_id["P1"].cell is Cell.CERTAINLY_NOT_CBP
    assert by_id["P1"].resolved is False
    assert by_id["P3"].cell is Cell.CERTAINLY_NOT_CBP
    assert not any(c.override_applied or c.override_ignored for c in by_id.values())


def test_override_applies_only_on_ambiguous_cells():
    # low priority, high risk, override=true: the architect promotes P3
    base = base_model()
    tree = GoalTree("G3", (QANode("availability", (high_risk_leaf(),)),))
    model = base_model(
        processes=with_override("P3", True),
        goal_trees=base.goal_trees + (tree,),
    )
    by_id = {c.process_id: c for c in classify(model)}
    assert by_id["P3"].cell is Cell.CANT_BE_CBP
    assert by_id["P3"].resolved is True
    assert by_id["P3"].override_applied is True
    assert by_id["P3"].override_ignored is False


def test_override_on_definitive_cell_is_ignored_and_flagged():
    by_id = {c.process_id: c for c in classify(base_model(processes=with_override("P2", False)))}
    assert by_id["P2"].cell is Cell.CERTAINLY_CBP
    assert by_id["P2"].resolved is True
    assert by_id["P2"].override_applied is False
    assert by_id["P2"].override_ignored is True


def test_high_priority_with_no_scenarios_defaults_to_cbp():
    model = single_goal_model(rating=1)
    (only,) = classify(model)
    assert only.priority_class is PriorityClass.HIGH
    assert only.risk_input is None
    assert only.cell is Cell.CAN_BE_CBP
    assert only.resolved is True


def test_raising_threshold_never_promotes():
    rng = random.Random(31)
    for _ in range(30):
        model = random_model(rng, max_goals=5, max_processes=6)
        table = prioritize_all(model)
        cuts = sorted(rng.uniform(0.0, 1.2) for _ in range(4))
        for lower, higher in zip(cuts, cuts[1:]):
            for pid in model.process_ids():
                p = table.process_priority[pid]
                if classify_priority(p, higher) is PriorityClass.HIGH:
                    assert classify_priority(p, lower) is PriorityClass.HIGH


def test_classification_preserves_declaration_order(m1_model):
    assert [c.process_id for c in classify(m1_model)] == ["P1", "P2", "P3"]


def test_effective_threshold_prefers_config(m1_model):
    table = prioritize_all(m1_model)
    assert effective_threshold(m1_model, table) == default_threshold(table)
    tuned = m1_model.with_config(AnalysisConfig(priority_threshold=0.8))
    assert effective_threshold(tuned, table) == 0.8
