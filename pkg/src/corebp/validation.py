"""Model validation.

``validate`` never raises; every problem becomes a report entry with a
stable code, a severity, and a location. Errors make the model unusable
for computation, warnings are coverage diagnostics (a goal nobody
supports, a process supporting nothing) that the method treats as
findings, not as invalid input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import AnalysisModel, QANode

ERROR = "error"
WARNING = "warning"

# Every code validate() can emit. Kept in one place so the test suite can
# demand a dedicated fixture per code.
ALL_CODES = (
    "CONFIG_RANGE",
    "DEPENDENCY_DUPLICATE",
    "DEPENDENCY_SELF_LOOP",
    "DEPENDENCY_STRENGTH_RANGE",
    "DEPENDENCY_UNKNOWN_PROCESS",
    "GOAL_ID_DUPLICATE",
    "GOAL_UNSUPPORTED",
    "GROUP_ID_DUPLICATE",
    "GROUP_REPRESENTATIVES_EMPTY",
    "GROUP_WEIGHT_RANGE",
    "GROUP_WEIGHT_SUM",
    "PROCESS_ID_DUPLICATE",
    "PROCESS_USELESS",
    "RATING_MISSING",
    "RATING_RANGE",
    "RATING_UNKNOWN_GOAL",
    "RATING_UNKNOWN_REPRESENTATIVE",
    "REPRESENTATIVE_DUPLICATE",
    "SCENARIO_ID_DUPLICATE",
    "SCENARIO_NOT_SUPPORTING",
    "SCENARIO_UNKNOWN_PROCESS",
    "SUPPORT_RANGE",
    "SUPPORT_SUM",
    "SUPPORT_UNKNOWN_GOAL",
    "SUPPORT_UNKNOWN_PROCESS",
    "TREE_DUPLICATE",
    "TREE_NODE_STRUCTURE",
    "TREE_UNKNOWN_GOAL",
)

WARNING_CODES = frozenset({"GOAL_UNSUPPORTED", "PROCESS_USELESS"})


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    severity: str
    location: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Issues sorted by (code, location) so identical models always yield
    byte-identical reports."""

    issues: tuple[ValidationIssue, ...]

    @property
    def errors(self) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.severity == ERROR)

    @property
    def warnings(self) -> tuple[ValidationIssue, ...]:
        return tuple(i for i in self.issues if i.severity == WARNING)

    @property
    def ok(self) -> bool:
        return not self.errors


def _in_unit_interval(x: float) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x) and 0.0 <= x <= 1.0


def _tolerance(model: AnalysisModel) -> float:
    # an invalid epsilon is reported as CONFIG_RANGE; the sum checks fall
    # back to the default so one bad knob does not fail every total
    eps = model.config.epsilon
    if isinstance(eps, (int, float)) and math.isfinite(eps) and eps > 0.0:
        return float(eps)
    return 1e-9


def validate(model: AnalysisModel) -> ValidationReport:
    """Check every model invariant and return the full report.

    Pure and deterministic; safe to call concurrently.
    """
    issues: list[ValidationIssue] = []

    def add(code: str, location: str, message: str) -> None:
        severity = WARNING if code in WARNING_CODES else ERROR
        issues.append(ValidationIssue(code, severity, location, message))

    _check_groups(model, add)
    _check_goals(model, add)
    _check_ratings(model, add)
    _check_processes(model, add)
    _check_support(model, add)
    _check_dependencies(model, add)
    _check_trees(model, add)
    _check_config(model, add)

    issues.sort(key=lambda i: (i.code, i.location, i.message))
    return ValidationReport(issues=tuple(issues))


def _check_groups(model: AnalysisModel, add) -> None:
    eps = _tolerance(model)
    seen_groups: set[str] = set()
    seen_reps: set[str] = set()
    for group in model.stakeholder_groups:
        loc = f"stakeholder_groups[{group.id}]"
        if group.id in seen_groups:
            add("GROUP_ID_DUPLICATE", loc, f"stakeholder group id {group.id!r} declared more than once")
        seen_groups.add(group.id)
        if not _in_unit_interval(group.importance_coefficient):
            add(
                "GROUP_WEIGHT_RANGE",
                f"{loc}.importance_coefficient",
                f"importance coefficient {group.importance_coefficient!r} is outside [0, 1]",
            )
        if not group.representatives:
            add("GROUP_REPRESENTATIVES_EMPTY", f"{loc}.representatives", "group has no representatives")
        for rep in group.representatives:
            if rep in seen_reps:
                add(
                    "REPRESENTATIVE_DUPLICATE",
                    f"{loc}.representatives[{rep}]",
                    f"representative id {rep!r} declared more than once",
                )
            seen_reps.add(rep)

    total = math.fsum(g.importance_coefficient for g in model.stakeholder_groups)
    if abs(total - 1.0) > eps:
        add(
            "GROUP_WEIGHT_SUM",
            "stakeholder_groups",
            f"importance coefficients sum to {total!r}, expected 1 within {eps!r}",
        )


def _check_goals(model: AnalysisModel, add) -> None:
    seen: set[str] = set()
    for goal in model.goals:
        if goal.id in seen:
            add("GOAL_ID_DUPLICATE", f"goals[{goal.id}]", f"goal id {goal.id!r} declared more than once")
        seen.add(goal.id)


def _check_ratings(model: AnalysisModel, add) -> None:
    n = model.goal_count
    goal_ids = set(model.goal_ids())
    rep_ids = set(model.representative_ids())

    for (rep, goal), rating in model.ratings.items():
        loc = f"ratings[{rep},{goal}]"
        if rep not in rep_ids:
            add("RATING_UNKNOWN_REPRESENTATIVE", loc, f"rating names undeclared representative {rep!r}")
        if goal not in goal_ids:
            add("RATING_UNKNOWN_GOAL", loc, f"rating names undeclared goal {goal!r}")
        if not (isinstance(rating, int) and 1 <= rating <= n):
            add("RATING_RANGE", loc, f"rating {rating!r} is outside [1, {n}]")

    # The matrix must be complete: every representative rates every goal.
    # dict.fromkeys drops duplicate declarations so they do not cascade
    for rep in dict.fromkeys(model.representative_ids()):
        for goal in dict.fromkeys(model.goal_ids()):
            if (rep, goal) not in model.ratings:
                add("RATING_MISSING", f"ratings[{rep},{goal}]", f"no rating of goal {goal!r} by representative {rep!r}")


def _check_processes(model: AnalysisModel, add) -> None:
    seen: set[str] = set()
    for proc in model.processes:
        if proc.id in seen:
            add("PROCESS_ID_DUPLICATE", f"processes[{proc.id}]", f"process id {proc.id!r} declared more than once")
        seen.add(proc.id)


def _check_support(model: AnalysisModel, add) -> None:
    eps = _tolerance(model)
    goal_ids = set(model.goal_ids())
    process_ids = set(model.process_ids())

    for (proc, goal), coeff in model.support.items():
        loc = f"support[{proc},{goal}]"
        if proc not in process_ids:
            add("SUPPORT_UNKNOWN_PROCESS", loc, f"support entry names undeclared process {proc!r}")
        if goal not in goal_ids:
            add("SUPPORT_UNKNOWN_GOAL", loc, f"support entry names undeclared goal {goal!r}")
        if not _in_unit_interval(coeff):
            add("SUPPORT_RANGE", loc, f"support coefficient {coeff!r} is outside [0, 1]")

    # Per goal the column either sums to 1 (supported) or to 0, which is
    # legal input but worth surfacing: it marks a missing process.
    # dict.fromkeys drops duplicate declarations so they do not cascade
    unique_goals = dict.fromkeys(model.goal_ids())
    unique_processes = dict.fromkeys(model.process_ids())
    for goal in unique_goals:
        column = math.fsum(model.support_coefficient(p, goal) for p in unique_processes)
        if column == 0.0:
            add("GOAL_UNSUPPORTED", f"goals[{goal}]", f"no process supports goal {goal!r}")
        elif abs(column - 1.0) > eps:
            add(
                "SUPPORT_SUM",
                f"support[*,{goal}]",
                f"support for goal {goal!r} sums to {column!r}, expected 1 within {eps!r}",
            )

    for proc in unique_processes:
        row = math.fsum(model.support_coefficient(proc, g) for g in unique_goals)
        if row == 0.0:
            add("PROCESS_USELESS", f"processes[{proc}]", f"process {proc!r} supports no goal")


def _check_dependencies(model: AnalysisModel, add) -> None:
    process_ids = set(model.process_ids())
    seen_pairs: set[tuple[str, str]] = set()
    for edge in model.dependencies:
        loc = f"dependencies[{edge.a},{edge.b}]"
        if edge.a == edge.b:
            add("DEPENDENCY_SELF_LOOP", loc, f"dependency joins process {edge.a!r} to itself")
            continue
        for end in (edge.a, edge.b):
            if end not in process_ids:
                add("DEPENDENCY_UNKNOWN_PROCESS", loc, f"dependency names undeclared process {end!r}")
        pair = edge.pair()
        if pair in seen_pairs:
            add("DEPENDENCY_DUPLICATE", loc, f"more than one dependency between {pair[0]!r} and {pair[1]!r}")
        seen_pairs.add(pair)
        if not (isinstance(edge.strength, (int, float)) and math.isfinite(edge.strength) and 0.0 < edge.strength <= 1.0):
            add("DEPENDENCY_STRENGTH_RANGE", loc, f"dependency strength {edge.strength!r} is outside (0, 1]")


def _check_trees(model: AnalysisModel, add) -> None:
    goal_ids = set(model.goal_ids())
    process_ids = set(model.process_ids())
    seen_tree_goals: set[str] = set()

    for tree in model.goal_trees:
        tree_loc = f"goal_trees[{tree.goal_id}]"
        if tree.goal_id in seen_tree_goals:
            add("TREE_DUPLICATE", tree_loc, f"more than one tree for goal {tree.goal_id!r}")
        seen_tree_goals.add(tree.goal_id)
        if tree.goal_id not in goal_ids:
            add("TREE_UNKNOWN_GOAL", tree_loc, f"tree names undeclared goal {tree.goal_id!r}")

        seen_scenarios: set[str] = set()

        def walk(node: QANode, path: str) -> None:
            loc = f"{tree_loc}.{path}"
            if node.children and node.scenario is not None:
                add("TREE_NODE_STRUCTURE", loc, f"node {node.label!r} has both children and a scenario")
            if not node.children and node.scenario is None:
                add("TREE_NODE_STRUCTURE", loc, f"leaf node {node.label!r} carries no scenario")
            if node.scenario is not None:
                _check_scenario(model, node.scenario, loc, tree.goal_id, process_ids, seen_scenarios, add)
            for i, child in enumerate(node.children):
                walk(child, f"{path}.children[{i}]")

        for i, child in enumerate(tree.children):
            walk(child, f"nodes[{i}]")


def _check_scenario(model, scenario, loc, root_goal, process_ids, seen_scenarios, add) -> None:
    if scenario.id in seen_scenarios:
        add("SCENARIO_ID_DUPLICATE", loc, f"scenario id {scenario.id!r} appears twice in one tree")
    seen_scenarios.add(scenario.id)
    if scenario.applies_to is None:
        return
    for pid in scenario.applies_to:
        if pid not in process_ids:
            add(
                "SCENARIO_UNKNOWN_PROCESS",
                f"{loc}.applies_to[{pid}]",
                f"scenario {scenario.id!r} names undeclared process {pid!r}",
            )
        elif model.support_coefficient(pid, root_goal) <= 0.0:
            add(
                "SCENARIO_NOT_SUPPORTING",
                f"{loc}.applies_to[{pid}]",
                f"scenario {scenario.id!r} applies to {pid!r}, which does not support goal {root_goal!r}",
            )


def _check_config(model: AnalysisModel, add) -> None:
    cfg = model.config
    if cfg.epsilon is not None and not (
        isinstance(cfg.epsilon, (int, float)) and math.isfinite(cfg.epsilon) and cfg.epsilon > 0.0
    ):
        add("CONFIG_RANGE", "config.epsilon", f"epsilon {cfg.epsilon!r} must be a positive real")
    if cfg.priority_threshold is not None and not (
        isinstance(cfg.priority_threshold, (int, float))
        and math.isfinite(cfg.priority_threshold)
        and 0.0 < cfg.priority_threshold <= 1.0
    ):
        add("CONFIG_RANGE", "config.priority_threshold", f"priority_threshold {cfg.priority_threshold!r} is outside (0, 1]")
    if cfg.merge_threshold is not None and not (
        isinstance(cfg.merge_threshold, (int, float))
        and math.isfinite(cfg.merge_threshold)
        and 0.0 < cfg.merge_threshold <= 1.0
    ):
        add("CONFIG_RANGE", "config.merge_threshold", f"merge_threshold {cfg.merge_threshold!r} is outside (0, 1]")
    if cfg.capacity is not None and not (isinstance(cfg.capacity, int) and cfg.capacity >= 1):
        add("CONFIG_RANGE", "config.capacity", f"capacity {cfg.capacity!r} must be a positive integer")
