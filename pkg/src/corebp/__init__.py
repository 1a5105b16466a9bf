"""corebp: decision support for finding core business processes.

Pipeline: validate a declarative model, turn stakeholder ratings into
goal and process priorities, annotate risk through per-goal quality
attribute trees, classify each process with a four-cell decision table,
and plan the release by grouping, merging, and ranking the processes.
"""

from .classify import (
    Cell,
    CbpClassification,
    PriorityClass,
    classify,
    decision_cell,
    default_threshold,
    priority_class,
    resolve,
)
from .document import (
    ModelDocument,
    ModelDocumentError,
    build_model,
    load_document,
    parse_model,
)
from .goaltree import (
    ExtractedScenario,
    TreeStructureError,
    extract_scenarios,
    process_risk,
    scenarios_for_process,
    suggest_general_scenarios,
)
from .model import (
    AnalysisConfig,
    AnalysisModel,
    BusinessGoal,
    BusinessGoalScenario,
    BusinessProcess,
    DEFAULT_EPSILON,
    DEFAULT_MERGE_THRESHOLD,
    DependencyEdge,
    GoalTree,
    QANode,
    QualityAttributeScenario,
    Risk,
    SixPartScenario,
    StakeholderGroup,
    risk_rank,
)
from .pipeline import AnalysisReport, ConfigEcho, METHOD_NOTES, run_pipeline
from .planning import (
    Group,
    ProcessUnit,
    ReleasePlan,
    build_groups,
    categorize,
    merge_strong,
    select_release,
)
from .prioritize import (
    PriorityTable,
    goal_importance_degree,
    goal_priority,
    prioritize_all,
    process_priority,
)
from .rendering import SECTIONS, render, report_to_dict
from .validation import (
    ALL_CODES,
    ERROR,
    WARNING,
    WARNING_CODES,
    ValidationIssue,
    ValidationReport,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CODES",
    "AnalysisConfig",
    "AnalysisModel",
    "AnalysisReport",
    "BusinessGoal",
    "BusinessGoalScenario",
    "BusinessProcess",
    "Cell",
    "CbpClassification",
    "ConfigEcho",
    "DEFAULT_EPSILON",
    "DEFAULT_MERGE_THRESHOLD",
    "DependencyEdge",
    "ERROR",
    "ExtractedScenario",
    "GoalTree",
    "Group",
    "METHOD_NOTES",
    "ModelDocument",
    "ModelDocumentError",
    "PriorityClass",
    "PriorityTable",
    "ProcessUnit",
    "QANode",
    "QualityAttributeScenario",
    "ReleasePlan",
    "Risk",
    "SECTIONS",
    "SixPartScenario",
    "StakeholderGroup",
    "TreeStructureError",
    "ValidationIssue",
    "ValidationReport",
    "WARNING",
    "WARNING_CODES",
    "build_groups",
    "build_model",
    "categorize",
    "classify",
    "decision_cell",
    "default_threshold",
    "extract_scenarios",
    "goal_importance_degree",
    "goal_priority",
    "load_document",
    "merge_strong",
    "parse_model",
    "priority_class",
    "prioritize_all",
    "process_priority",
    "process_risk",
    "render",
    "report_to_dict",
    "resolve",
    "risk_rank",
    "run_pipeline",
    "scenarios_for_process",
    "select_release",
    "suggest_general_scenarios",
    "validate",
]
