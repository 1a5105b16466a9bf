"""End-to-end analysis: validate, prioritize, classify, plan.

Validation errors short-circuit the run; the report then carries only
the validation section. Warnings do not stop anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import CbpClassification, classify, default_threshold
from .model import AnalysisModel, DEFAULT_EPSILON, DEFAULT_MERGE_THRESHOLD
from .planning import ReleasePlan, select_release
from .prioritize import PriorityTable, prioritize_all
from .validation import ValidationReport, validate

# Fixed disclosure of every behavior the method leaves open and this
# implementation fills with a default. Rendered with every full report.
METHOD_NOTES: tuple[str, ...] = (
    "Goal importance is the group-weighted mean rating; the division by the"
    " goal count happens exactly once, in the priority step.",
    "High/low priority is cut at config.priority_threshold when set, else at"
    " the mean of all process priorities; ties classify high. Ambiguous"
    " decision cells (can-be, cant-be) default to yes/no and honor per-process"
    " overrides; definitive cells ignore overrides.",
    "Units merge along dependency edges with strength >= merge_threshold"
    " (default 0.7); unit priority and risk are member maxima. Category 3"
    " (low priority, high risk) is an extension beyond the method's original"
    " three categories.",
)


@dataclass(frozen=True)
class ConfigEcho:
    """Effective configuration of a run, with a defaulted flag per knob
    so reports always show which values were computed or assumed."""

    epsilon: float
    epsilon_defaulted: bool
    priority_threshold: float
    priority_threshold_defaulted: bool
    merge_threshold: float
    merge_threshold_defaulted: bool
    capacity: int | None
    capacity_defaulted: bool


@dataclass(frozen=True)
class AnalysisReport:
    """Everything one run produced. Sections after validation are None
    when validation errors stopped the run."""

    model: AnalysisModel
    validation: ValidationReport
    priorities: PriorityTable | None
    classifications: tuple[CbpClassification, ...] | None
    plan: ReleasePlan | None
    config_echo: ConfigEcho | None
    method_notes: tuple[str, ...]


def _echo(model: AnalysisModel, table: PriorityTable) -> ConfigEcho:
    config = model.config
    if config.priority_threshold is None:
        threshold = default_threshold(table)
    else:
        threshold = config.priority_threshold
    return ConfigEcho(
        epsilon=config.effective_epsilon,
        epsilon_defaulted=config.epsilon is None,
        priority_threshold=threshold,
        priority_threshold_defaulted=config.priority_threshold is None,
        merge_threshold=config.effective_merge_threshold,
        merge_threshold_defaulted=config.merge_threshold is None,
        capacity=config.capacity,
        capacity_defaulted=config.capacity is None,
    )


def run_pipeline(model: AnalysisModel) -> AnalysisReport:
    """Run every stage on a model. Deterministic: the same model gives
    the same report, bit for bit."""
    validation = validate(model)
    if not validation.ok:
        return AnalysisReport(
            model=model,
            validation=validation,
            priorities=None,
            classifications=None,
            plan=None,
            config_echo=None,
            method_notes=METHOD_NOTES,
        )
    table = prioritize_all(model)
    classifications = tuple(classify(model, table))
    plan = select_release(model, table, list(classifications))
    return AnalysisReport(
        model=model,
        validation=validation,
        priorities=table,
        classifications=classifications,
        plan=plan,
        config_echo=_echo(model, table),
        method_notes=METHOD_NOTES,
    )


__all__ = [
    "METHOD_NOTES",
    "ConfigEcho",
    "AnalysisReport",
    "run_pipeline",
    "DEFAULT_EPSILON",
    "DEFAULT_MERGE_THRESHOLD",
]
