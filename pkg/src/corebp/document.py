"""The model document: a single UTF-8 JSON file describing groups,
goals, ratings, processes, support, trees, dependencies, and config.

Parsing is strict and total over the documented schema: unknown keys,
wrong types, non-finite numbers, duplicate matrix entries, and
references to undeclared ids are all rejected here with a
ModelDocumentError. Everything value-level (ranges, sums, completeness)
is left to validate(), which reports instead of raising.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .model import (
    AnalysisConfig,
    AnalysisModel,
    BusinessGoal,
    BusinessGoalScenario,
    BusinessProcess,
    DependencyEdge,
    GoalTree,
    QANode,
    QualityAttributeScenario,
    Risk,
    SixPartScenario,
    StakeholderGroup,
)


class ModelDocumentError(Exception):
    """The document could not become a model.

    kind: "io" (unreadable file), "syntax" (not JSON), "schema" (shape or
    duplicate-entry violation), "reference" (undeclared id).
    """

    def __init__(self, kind: str, message: str) -> None:
        super().__init__(message)
        self.kind = kind


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)


class GroupDoc(_Doc):
    id: str
    name: str
    importance_coefficient: float
    representatives: list[str]


class GoalScenarioDoc(_Doc):
    goal_source: str = ""
    goal_subject: str = ""
    goal_object: str = ""
    environment: str = ""
    goal_statement: str = ""
    measure: str = ""


class GoalDoc(_Doc):
    id: str
    name: str
    scenario: GoalScenarioDoc | None = None


class RatingDoc(_Doc):
    representative: str
    goal: str
    rating: int


class ProcessDoc(_Doc):
    id: str
    name: str
    cbp_override: bool | None = None


class SupportDoc(_Doc):
    process: str
    goal: str
    coefficient: float


class SixPartDoc(_Doc):
    source: str = ""
    stimulus: str = ""
    artifact: str = ""
    environment: str = ""
    response: str = ""
    response_measure: str = ""


class ScenarioDoc(_Doc):
    id: str
    risk: Literal["high", "low"]
    description: str = ""
    six_part: SixPartDoc | None = None
    applies_to: list[str] | None = None


class TreeNodeDoc(_Doc):
    label: str
    children: list["TreeNodeDoc"] | None = None
    scenario: ScenarioDoc | None = None


class TreeDoc(_Doc):
    goal: str
    nodes: list[TreeNodeDoc]


class DependencyDoc(_Doc):
    a: str
    b: str
    strength: float


class ConfigDoc(_Doc):
    epsilon: float | None = None
    priority_threshold: float | None = None
    merge_threshold: float | None = None
    capacity: int | None = None


class ModelDocument(_Doc):
    stakeholder_groups: list[GroupDoc] = Field(default_factory=list)
    goals: list[GoalDoc] = Field(default_factory=list)
    ratings: list[RatingDoc] = Field(default_factory=list)
    processes: list[ProcessDoc] = Field(default_factory=list)
    support: list[SupportDoc] = Field(default_factory=list)
    goal_trees: list[TreeDoc] = Field(default_factory=list)
    dependencies: list[DependencyDoc] = Field(default_factory=list)
    config: ConfigDoc | None = None


def _reject_constant(token: str) -> float:
    raise ValueError(f"non-finite number {token} is not allowed")


def _loc_path(parts: tuple[object, ...]) -> str:
    out = ""
    for part in parts:
        if isinstance(part, int):
            out += f"[{part}]"
        else:
            out = f"{out}.{part}" if out else str(part)
    return out or "<document>"


def load_document(path: str | Path) -> ModelDocument:
    """Read and schema-check a document. Value constraints stay with
    validate()."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelDocumentError("io", f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw, parse_constant=_reject_constant)
    except ValueError as exc:
        raise ModelDocumentError("syntax", f"{path}: {exc}") from exc
    try:
        return ModelDocument.model_validate(data)
    except ValidationError as exc:
        lines = [f"{_loc_path(e['loc'])}: {e['msg']}" for e in exc.errors()]
        raise ModelDocumentError("schema", f"{path}: " + "; ".join(lines)) from exc


def _node_from_doc(node: TreeNodeDoc) -> QANode:
    scenario = None
    if node.scenario is not None:
        s = node.scenario
        six_part = None
        if s.six_part is not None:
            six_part = SixPartScenario(
                source=s.six_part.source,
                stimulus=s.six_part.stimulus,
                artifact=s.six_part.artifact,
                environment=s.six_part.environment,
                response=s.six_part.response,
                response_measure=s.six_part.response_measure,
            )
        scenario = QualityAttributeScenario(
            id=s.id,
            risk=Risk(s.risk),
            description=s.description,
            six_part=six_part,
            applies_to=None if s.applies_to is None else tuple(s.applies_to),
        )
    return QANode(
        label=node.label,
        children=tuple(_node_from_doc(child) for child in (node.children or [])),
        scenario=scenario,
    )


def _scenario_process_refs(node: TreeNodeDoc, at: str) -> list[tuple[str, str]]:
    """(location, process id) pairs for every applies_to entry below node."""
    refs: list[tuple[str, str]] = []
    if node.scenario is not None and node.scenario.applies_to is not None:
        refs.extend((at, pid) for pid in node.scenario.applies_to)
    for i, child in enumerate(node.children or []):
        refs.extend(_scenario_process_refs(child, f"{at}.children[{i}]"))
    return refs


def build_model(doc: ModelDocument) -> AnalysisModel:
    """Turn a schema-valid document into an immutable model.

    Rejects duplicate rating/support matrix entries (they would collapse
    in the keyed maps) and references to undeclared ids. Duplicate
    declarations and duplicate edges pass through for validate() to
    report.
    """
    goal_ids = {g.id for g in doc.goals}
    process_ids = {p.id for p in doc.processes}
    rep_ids = {r for g in doc.stakeholder_groups for r in g.representatives}

    duplicates: list[str] = []
    unresolved: list[str] = []

    ratings: dict[tuple[str, str], int] = {}
    for i, entry in enumerate(doc.ratings):
        if entry.representative not in rep_ids:
            unresolved.append(f"ratings[{i}]: unknown representative {entry.representative!r}")
        if entry.goal not in goal_ids:
            unresolved.append(f"ratings[{i}]: unknown goal {entry.goal!r}")
        key = (entry.representative, entry.goal)
        if key in ratings:
            duplicates.append(f"ratings[{i}]: duplicate entry for ({entry.representative}, {entry.goal})")
        ratings[key] = entry.rating

    support: dict[tuple[str, str], float] = {}
    for i, entry in enumerate(doc.support):
        if entry.process not in process_ids:
            unresolved.append(f"support[{i}]: unknown process {entry.process!r}")
        if entry.goal not in goal_ids:
            unresolved.append(f"support[{i}]: unknown goal {entry.goal!r}")
        key = (entry.process, entry.goal)
        if key in support:
            duplicates.append(f"support[{i}]: duplicate entry for ({entry.process}, {entry.goal})")
        support[key] = entry.coefficient

    # duplicate edges stay: they live in a tuple, and validate() reports them
    for i, dep in enumerate(doc.dependencies):
        for endpoint in (dep.a, dep.b):
            if endpoint not in process_ids:
                unresolved.append(f"dependencies[{i}]: unknown process {endpoint!r}")

    for i, tree in enumerate(doc.goal_trees):
        if tree.goal not in goal_ids:
            unresolved.append(f"goal_trees[{i}]: unknown goal {tree.goal!r}")
        for j, node in enumerate(tree.nodes):
            for at, pid in _scenario_process_refs(node, f"goal_trees[{i}].nodes[{j}]"):
                if pid not in process_ids:
                    unresolved.append(f"{at}: applies_to names unknown process {pid!r}")

    if duplicates:
        raise ModelDocumentError("schema", "; ".join(duplicates))
    if unresolved:
        raise ModelDocumentError("reference", "; ".join(unresolved))

    goals = tuple(
        BusinessGoal(
            id=g.id,
            name=g.name,
            scenario=None
            if g.scenario is None
            else BusinessGoalScenario(
                goal_source=g.scenario.goal_source,
                goal_subject=g.scenario.goal_subject,
                goal_object=g.scenario.goal_object,
                environment=g.scenario.environment,
                goal_statement=g.scenario.goal_statement,
                measure=g.scenario.measure,
            ),
        )
        for g in doc.goals
    )
    config = AnalysisConfig()
    if doc.config is not None:
        config = AnalysisConfig(
            epsilon=doc.config.epsilon,
            priority_threshold=doc.config.priority_threshold,
            merge_threshold=doc.config.merge_threshold,
            capacity=doc.config.capacity,
        )
    return AnalysisModel(
        stakeholder_groups=tuple(
            StakeholderGroup(
                id=g.id,
                name=g.name,
                importance_coefficient=g.importance_coefficient,
                representatives=tuple(g.representatives),
            )
            for g in doc.stakeholder_groups
        ),
        goals=goals,
        ratings=ratings,
        processes=tuple(
            BusinessProcess(id=p.id, name=p.name, cbp_override=p.cbp_override) for p in doc.processes
        ),
        support=support,
        goal_trees=tuple(
            GoalTree(goal_id=t.goal, children=tuple(_node_from_doc(n) for n in t.nodes))
            for t in doc.goal_trees
        ),
        dependencies=tuple(
            DependencyEdge(a=d.a, b=d.b, strength=d.strength) for d in doc.dependencies
        ),
        config=config,
    )


def parse_model(path: str | Path) -> AnalysisModel:
    """File path to model: load, schema-check, and build in one step."""
    return build_model(load_document(path))
