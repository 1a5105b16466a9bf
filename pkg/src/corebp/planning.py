"""Release planning: dependency grouping, strong-edge merging,
categorization, and capacity-bounded selection.

Processes connected by any dependency edge belong to one group. Inside a
group, edges at or above the merge threshold fuse processes into a unit
that ships together; everything else stays a singleton unit. Units are
ranked by category, then priority, then id, and the release takes the
first `capacity` of them.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .classify import CbpClassification, PriorityClass, classify
from .model import AnalysisModel, Risk, risk_rank
from .goaltree import process_risk
from .prioritize import PriorityTable, prioritize_all


@dataclass(frozen=True)
class Group:
    """One independent set of processes; id = smallest member id."""

    id: str
    members: tuple[str, ...]


@dataclass(frozen=True)
class ProcessUnit:
    """Processes merged into one plannable unit.

    priority_class and category are filled in by categorize(); before
    that they are None.
    """

    id: str
    members: tuple[str, ...]
    group_id: str
    priority: float
    risk: Risk | None
    priority_class: PriorityClass | None = None
    category: int | None = None


@dataclass(frozen=True)
class ReleasePlan:
    groups: tuple[Group, ...]
    # categorized units in global selection order
    units: tuple[ProcessUnit, ...]
    selected: tuple[str, ...]
    backlog: tuple[str, ...]
    capacity: int | None


def _components(node_ids: list[str], edges: list[tuple[str, str]]) -> list[tuple[str, ...]]:
    """Connected components as sorted member tuples, ordered by smallest member."""
    adjacency: dict[str, set[str]] = {node: set() for node in node_ids}
    for a, b in edges:
        if a == b or a not in adjacency or b not in adjacency:
            continue
        adjacency[a].add(b)
        adjacency[b].add(a)

    seen: set[str] = set()
    components: list[tuple[str, ...]] = []
    for start in node_ids:
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        members = []
        while stack:
            node = stack.pop()
            members.append(node)
            for neighbor in adjacency[node]:
                if neighbor not in seen:
                    seen.add(neighbor)
                    stack.append(neighbor)
        components.append(tuple(sorted(members)))
    components.sort(key=lambda member_ids: member_ids[0])
    return components


def build_groups(model: AnalysisModel) -> list[Group]:
    """Independent process groups: connected components over every
    dependency edge, isolated processes as singletons."""
    node_ids = list(model.process_ids())
    edges = [(d.a, d.b) for d in model.dependencies]
    return [Group(id=members[0], members=members) for members in _components(node_ids, edges)]


def merge_strong(
    model: AnalysisModel,
    group: Group,
    table: PriorityTable | None = None,
) -> list[ProcessUnit]:
    """Fuse the group's processes along edges with strength at or above
    the merge threshold; everything else stays a singleton unit.

    Unit priority is the max member priority, unit risk the max member
    risk (high > low > none). Unit id joins member ids with "+".
    """
    if table is None:
        table = prioritize_all(model)
    threshold = model.config.effective_merge_threshold
    in_group = set(group.members)
    strong_edges = [
        (d.a, d.b)
        for d in model.dependencies
        if d.strength >= threshold and d.a in in_group and d.b in in_group
    ]
    units: list[ProcessUnit] = []
    for members in _components(list(group.members), strong_edges):
        risks = [process_risk(model, member) for member in members]
        units.append(
            ProcessUnit(
                id="+".join(members),
                members=members,
                group_id=group.id,
                priority=max(table.process_priority[member] for member in members),
                risk=max(risks, key=risk_rank),
            )
        )
    return units


def categorize(
    units: list[ProcessUnit],
    classifications: list[CbpClassification],
) -> list[ProcessUnit]:
    """Fill in unit priority class and category.

    A unit is high priority iff any member is; categories: 1 = high
    priority and high risk, 2 = high priority otherwise, 3 = low priority
    and high risk, 4 = low priority otherwise.
    """
    class_by_id = {c.process_id: c for c in classifications}
    out: list[ProcessUnit] = []
    for unit in units:
        high_priority = any(
            class_by_id[member].priority_class is PriorityClass.HIGH for member in unit.members
        )
        high_risk = unit.risk is Risk.HIGH
        if high_priority:
            category = 1 if high_risk else 2
        else:
            category = 3 if high_risk else 4
        out.append(
            replace(
                unit,
                priority_class=PriorityClass.HIGH if high_priority else PriorityClass.LOW,
                category=category,
            )
        )
    return out


def select_release(
    model: AnalysisModel,
    table: PriorityTable | None = None,
    classifications: list[CbpClassification] | None = None,
) -> ReleasePlan:
    """Full plan: group, merge, categorize, order, and cut at capacity.

    Global order is (category ascending, priority descending, unit id
    ascending); with no capacity every unit is selected.
    """
    if table is None:
        table = prioritize_all(model)
    if classifications is None:
        classifications = classify(model, table)

    groups = build_groups(model)
    units: list[ProcessUnit] = []
    for group in groups:
        units.extend(merge_strong(model, group, table))
    units = categorize(units, classifications)
    units.sort(key=lambda unit: (unit.category, -unit.priority, unit.id))

    capacity = model.config.capacity
    unit_ids = [unit.id for unit in units]
    if capacity is None:
        selected, backlog = unit_ids, []
    else:
        selected, backlog = unit_ids[:capacity], unit_ids[capacity:]
    return ReleasePlan(
        groups=tuple(groups),
        units=tuple(units),
        selected=tuple(selected),
        backlog=tuple(backlog),
        capacity=capacity,
    )
