"""Domain types for the core-business-process analysis model.

An :class:`AnalysisModel` is the complete declarative input to the engine:
stakeholder groups and their representatives, business goals, the rating
matrix, business processes, the support matrix, per-goal quality attribute
trees, dependency edges, and configuration. Models are immutable after
construction; every operation in this package is a pure function of one.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

DEFAULT_EPSILON = 1e-9
DEFAULT_MERGE_THRESHOLD = 0.7


class Risk(str, Enum):
    """Risk level an architect assigns to a quality attribute scenario."""

    HIGH = "high"
    LOW = "low"


def risk_rank(risk: Risk | None) -> int:
    """Orderable rank for risk levels: no scenarios < low < high."""
    if risk is None:
        return 0
    return 1 if risk is Risk.LOW else 2


@dataclass(frozen=True)
class StakeholderGroup:
    """A kind of stakeholder, weighted by an importance coefficient in [0, 1].

    Coefficients across all groups must sum to 1. Each group speaks through
    one or more named representatives who rate every business goal.
    """

    id: str
    name: str
    importance_coefficient: float
    representatives: tuple[str, ...]


@dataclass(frozen=True)
class BusinessGoalScenario:
    """Structured statement of a business goal. Descriptive only; no
    computation reads these fields."""

    goal_source: str = ""
    goal_subject: str = ""
    goal_object: str = ""
    environment: str = ""
    goal_statement: str = ""
    measure: str = ""


@dataclass(frozen=True)
class BusinessGoal:
    id: str
    name: str
    scenario: BusinessGoalScenario | None = None


@dataclass(frozen=True)
class BusinessProcess:
    """A business process. ``cbp_override`` carries the architect's call for
    the two ambiguous decision-table cells; it is ignored (with a warning)
    on the two certain cells."""

    id: str
    name: str
    cbp_override: bool | None = None


@dataclass(frozen=True)
class SixPartScenario:
    """Conventional six-part form of a quality attribute scenario."""

    source: str = ""
    stimulus: str = ""
    artifact: str = ""
    environment: str = ""
    response: str = ""
    response_measure: str = ""


@dataclass(frozen=True)
class QualityAttributeScenario:
    """A concrete, testable quality requirement sitting at a tree leaf.

    ``applies_to`` narrows the scenario to specific processes; when absent
    the scenario applies to every process supporting the tree's root goal.
    The same scenario id may appear as a leaf of several trees and then
    denotes one shared scenario.
    """

    id: str
    risk: Risk
    description: str = ""
    six_part: SixPartScenario | None = None
    applies_to: tuple[str, ...] | None = None


@dataclass(frozen=True)
class QANode:
    """Node of a quality attribute tree: interior nodes carry refinement
    labels and children, leaves carry exactly one scenario."""

    label: str
    children: tuple[QANode, ...] = ()
    scenario: QualityAttributeScenario | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class GoalTree:
    """Per-goal refinement tree. The root is the business goal itself;
    depth-1 labels are quality attributes, deeper labels refinements, and
    leaves quality attribute scenarios. At most one tree per goal."""

    goal_id: str
    children: tuple[QANode, ...] = ()


@dataclass(frozen=True)
class DependencyEdge:
    """Undirected dependency between two processes with a strength in
    (0, 1]; stronger edges mark processes that should ship together."""

    a: str
    b: str
    strength: float

    def pair(self) -> tuple[str, str]:
        """Unordered endpoint pair in a canonical order."""
        return (self.a, self.b) if self.a <= self.b else (self.b, self.a)


@dataclass(frozen=True)
class AnalysisConfig:
    """Tunable knobs. ``None`` means "use the built-in default", which is
    how reports can tell a defaulted value from an explicit one.

    Effective defaults: epsilon 1e-9; priority_threshold the mean of all
    process priorities; merge_threshold 0.7; capacity unlimited.
    """

    epsilon: float | None = None
    priority_threshold: float | None = None
    merge_threshold: float | None = None
    capacity: int | None = None

    @property
    def effective_epsilon(self) -> float:
        return DEFAULT_EPSILON if self.epsilon is None else self.epsilon

    @property
    def effective_merge_threshold(self) -> float:
        return DEFAULT_MERGE_THRESHOLD if self.merge_threshold is None else self.merge_threshold


@dataclass(frozen=True)
class AnalysisModel:
    """The full declarative input. Matrices are keyed by id pairs:
    ratings by (representative id, goal id), support by (process id,
    goal id). Absent support entries mean a coefficient of 0.
    """

    stakeholder_groups: tuple[StakeholderGroup, ...] = ()
    goals: tuple[BusinessGoal, ...] = ()
    ratings: dict[tuple[str, str], int] = field(default_factory=dict)
    processes: tuple[BusinessProcess, ...] = ()
    support: dict[tuple[str, str], float] = field(default_factory=dict)
    goal_trees: tuple[GoalTree, ...] = ()
    dependencies: tuple[DependencyEdge, ...] = ()
    config: AnalysisConfig = field(default_factory=AnalysisConfig)

    @property
    def goal_count(self) -> int:
        return len(self.goals)

    def goal(self, goal_id: str) -> BusinessGoal:
        for g in self.goals:
            if g.id == goal_id:
                return g
        raise KeyError(f"unknown goal id: {goal_id!r}")

    def process(self, process_id: str) -> BusinessProcess:
        for p in self.processes:
            if p.id == process_id:
                return p
        raise KeyError(f"unknown process id: {process_id!r}")

    def goal_ids(self) -> tuple[str, ...]:
        return tuple(g.id for g in self.goals)

    def process_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.processes)

    def representative_ids(self) -> tuple[str, ...]:
        """Representative ids in declaration order across all groups."""
        return tuple(r for g in self.stakeholder_groups for r in g.representatives)

    def support_coefficient(self, process_id: str, goal_id: str) -> float:
        return self.support.get((process_id, goal_id), 0.0)

    def tree_for(self, goal_id: str) -> GoalTree | None:
        """The goal's tree, or None. With duplicate trees (an invalid
        model) the first declared one wins."""
        for tree in self.goal_trees:
            if tree.goal_id == goal_id:
                return tree
        return None

    def with_config(self, config: AnalysisConfig) -> AnalysisModel:
        return replace(self, config=config)
