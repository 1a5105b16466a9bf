"""Goal and process prioritization.

A goal's importance degree is the weighted mean of the per-group average
ratings: each stakeholder group's representatives rate the goal from 1 to
N (N = number of goals), the group's ratings are averaged, and the
averages are combined using the groups' importance coefficients. Dividing
by N happens exactly once, when the importance degree is turned into a
priority, so priorities span [1/N, 1] instead of collapsing to at most
1/N.

A process priority distributes goal priorities over the processes that
support them: the sum of support-coefficient times goal-priority over all
goals. Summation uses ``math.fsum`` throughout, which makes every number
independent of declaration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import AnalysisModel


@dataclass(frozen=True)
class PriorityTable:
    """Computed priorities for every goal and process, plus the coverage
    diagnostics that fall out of the support matrix: goals nobody supports
    (a process is missing) and processes supporting nothing (useless)."""

    goal_importance: dict[str, float]
    goal_priority: dict[str, float]
    process_priority: dict[str, float]
    missing_goals: tuple[str, ...]
    useless_processes: tuple[str, ...]


def goal_importance_degree(model: AnalysisModel, goal_id: str) -> float:
    """Weighted mean of per-group average ratings for one goal.

    Lies in [1, N] for a model whose group weights sum to 1.
    Raises KeyError for an unknown goal id.
    """
    model.goal(goal_id)
    terms = []
    for group in model.stakeholder_groups:
        ratings = [model.ratings[(rep, goal_id)] for rep in group.representatives]
        mean = math.fsum(ratings) / len(ratings)
        terms.append(mean * group.importance_coefficient)
    return math.fsum(terms)


def goal_priority(model: AnalysisModel, goal_id: str) -> float:
    """Importance degree scaled into (0, 1] by the number of goals."""
    return goal_importance_degree(model, goal_id) / model.goal_count


def process_priority(model: AnalysisModel, process_id: str) -> float:
    """Support-weighted sum of goal priorities for one process.

    Zero exactly when the process supports no goal. Raises KeyError for
    an unknown process id.
    """
    model.process(process_id)
    terms = []
    for goal in model.goals:
        coeff = model.support_coefficient(process_id, goal.id)
        if coeff != 0.0:
            terms.append(coeff * goal_priority(model, goal.id))
    return math.fsum(terms)


def prioritize_all(model: AnalysisModel) -> PriorityTable:
    """Priorities for every goal and process, with coverage diagnostics.

    Expects a model that validates without errors.
    """
    importance: dict[str, float] = {}
    g_priority: dict[str, float] = {}
    for goal in model.goals:
        deg = goal_importance_degree(model, goal.id)
        importance[goal.id] = deg
        g_priority[goal.id] = deg / model.goal_count

    p_priority: dict[str, float] = {}
    for proc in model.processes:
        terms = []
        for goal in model.goals:
            coeff = model.support_coefficient(proc.id, goal.id)
            if coeff != 0.0:
                terms.append(coeff * g_priority[goal.id])
        p_priority[proc.id] = math.fsum(terms)

    missing = tuple(
        g.id
        for g in model.goals
        if math.fsum(model.support_coefficient(p.id, g.id) for p in model.processes) == 0.0
    )
    useless = tuple(
        p.id
        for p in model.processes
        if math.fsum(model.support_coefficient(p.id, g.id) for g in model.goals) == 0.0
    )
    return PriorityTable(
        goal_importance=importance,
        goal_priority=g_priority,
        process_priority=p_priority,
        missing_goals=missing,
        useless_processes=useless,
    )
