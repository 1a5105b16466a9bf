"""Report rendering: a sectioned plain-text view and a stable JSON view.

Both views are deterministic: the same report renders to the same bytes
every time. Text shows priorities to 6 decimals; JSON keeps full float
precision. Override-applied rows are marked with "*" in text, and
category-3 units carry an "extension" tag in both views.
"""

from __future__ import annotations

import json

from .classify import CbpClassification
from .model import Risk
from .pipeline import AnalysisReport
from .planning import ProcessUnit

SECTIONS = ("validation", "priorities", "classifications", "plan", "config_echo", "method_notes")


def _risk_str(risk: Risk | None) -> str:
    return "none" if risk is None else risk.value


def report_to_dict(report: AnalysisReport, sections: tuple[str, ...] = SECTIONS) -> dict:
    """JSON-ready dict with a stable key order.

    Sections the pipeline skipped (validation errors) are left out even
    when asked for.
    """
    unknown = [s for s in sections if s not in SECTIONS]
    if unknown:
        raise ValueError(f"unknown report section: {unknown[0]}")
    out: dict = {}

    if "validation" in sections:
        out["validation"] = {
            "ok": report.validation.ok,
            "errors": len(report.validation.errors),
            "warnings": len(report.validation.warnings),
            "issues": [
                {
                    "code": issue.code,
                    "severity": issue.severity,
                    "location": issue.location,
                    "message": issue.message,
                }
                for issue in report.validation.issues
            ],
        }

    if "priorities" in sections and report.priorities is not None:
        table = report.priorities
        out["priorities"] = {
            "goal_importance": dict(table.goal_importance),
            "goal_priority": dict(table.goal_priority),
            "process_priority": dict(table.process_priority),
            "missing_goals": list(table.missing_goals),
            "useless_processes": list(table.useless_processes),
        }

    if "classifications" in sections and report.classifications is not None:
        out["classifications"] = [
            {
                "process": c.process_id,
                "priority": c.priority,
                "priority_class": c.priority_class.value,
                "risk": _risk_str(c.risk_input),
                "cell": c.cell.value,
                "cbp": c.resolved,
                "override_applied": c.override_applied,
                "override_ignored": c.override_ignored,
            }
            for c in report.classifications
        ]

    if "plan" in sections and report.plan is not None:
        plan = report.plan
        out["plan"] = {
            "groups": [{"id": g.id, "members": list(g.members)} for g in plan.groups],
            "units": [
                {
                    "id": u.id,
                    "members": list(u.members),
                    "group": u.group_id,
                    "priority": u.priority,
                    "risk": _risk_str(u.risk),
                    "priority_class": u.priority_class.value if u.priority_class else None,
                    "category": u.category,
                    "extension": u.category == 3,
                }
                for u in plan.units
            ],
            "selected": list(plan.selected),
            "backlog": list(plan.backlog),
            "capacity": plan.capacity,
        }

    if "config_echo" in sections and report.config_echo is not None:
        echo = report.config_echo
        out["config_echo"] = {
            "epsilon": {"value": echo.epsilon, "defaulted": echo.epsilon_defaulted},
            "priority_threshold": {
                "value": echo.priority_threshold,
                "defaulted": echo.priority_threshold_defaulted,
            },
            "merge_threshold": {
                "value": echo.merge_threshold,
                "defaulted": echo.merge_threshold_defaulted,
            },
            "capacity": {"value": echo.capacity, "defaulted": echo.capacity_defaulted},
        }

    if "method_notes" in sections:
        out["method_notes"] = list(report.method_notes)

    return out


def _classification_row(c: CbpClassification) -> str:
    mark = "*" if c.override_applied else " "
    note = "  (override ignored)" if c.override_ignored else ""
    verdict = "yes" if c.resolved else "no"
    return (
        f"  {mark} {c.process_id:<12} {c.priority:>10.6f}  {c.priority_class.value:<5}"
        f" {_risk_str(c.risk_input):<5} {c.cell.value:<18} cbp: {verdict}{note}"
    )


def _unit_row(u: ProcessUnit, position: int) -> str:
    tag = "  [extension]" if u.category == 3 else ""
    return (
        f"  {position:>2}. category {u.category}  {u.id:<16} priority {u.priority:.6f}"
        f"  risk {_risk_str(u.risk)}{tag}"
    )


def _text(report: AnalysisReport, sections: tuple[str, ...]) -> str:
    lines: list[str] = []

    if "validation" in sections:
        v = report.validation
        lines.append("VALIDATION")
        status = "ok" if v.ok else "failed"
        lines.append(f"  {status}: {len(v.errors)} error(s), {len(v.warnings)} warning(s)")
        for issue in v.issues:
            lines.append(f"  [{issue.severity}] {issue.code} at {issue.location}: {issue.message}")
        if not v.ok:
            lines.append("")
            lines.append("analysis skipped: fix the validation errors first")
            return "\n".join(lines) + "\n"

    if "priorities" in sections and report.priorities is not None:
        table = report.priorities
        lines.append("")
        lines.append("GOAL PRIORITIES")
        for goal_id, importance in table.goal_importance.items():
            lines.append(
                f"  {goal_id:<12} importance {importance:>10.6f}  priority"
                f" {table.goal_priority[goal_id]:>9.6f}"
            )
        if table.missing_goals:
            lines.append(f"  unsupported goals: {', '.join(table.missing_goals)}")
        lines.append("")
        lines.append("PROCESS PRIORITIES")
        for process_id, priority in table.process_priority.items():
            lines.append(f"  {process_id:<12} priority {priority:>9.6f}")
        if table.useless_processes:
            lines.append(f"  processes supporting no goal: {', '.join(table.useless_processes)}")

    if "classifications" in sections and report.classifications is not None:
        lines.append("")
        header = "CLASSIFICATION"
        if report.config_echo is not None:
            source = "mean" if report.config_echo.priority_threshold_defaulted else "explicit"
            header += f"  (threshold {report.config_echo.priority_threshold:.6f}, {source})"
        lines.append(header)
        for c in report.classifications:
            lines.append(_classification_row(c))

    if "plan" in sections and report.plan is not None:
        plan = report.plan
        lines.append("")
        header = "RELEASE PLAN"
        if report.config_echo is not None:
            capacity = "unlimited" if plan.capacity is None else str(plan.capacity)
            header += (
                f"  (merge threshold {report.config_echo.merge_threshold:.2f},"
                f" capacity {capacity})"
            )
        lines.append(header)
        group_view = "; ".join(f"{g.id}: {'+'.join(g.members)}" for g in plan.groups)
        lines.append(f"  groups  {group_view}")
        for position, unit in enumerate(plan.units, start=1):
            lines.append(_unit_row(unit, position))
        lines.append(f"  selected: {', '.join(plan.selected) if plan.selected else '(none)'}")
        lines.append(f"  backlog:  {', '.join(plan.backlog) if plan.backlog else '(none)'}")

    if "method_notes" in sections:
        lines.append("")
        lines.append("METHOD NOTES")
        for note in report.method_notes:
            lines.append(f"  - {note}")

    return "\n".join(lines) + "\n"


def render(report: AnalysisReport, format: str = "text", sections: tuple[str, ...] = SECTIONS) -> str:
    """Render a report. format is "text" or "json"."""
    if format == "json":
        return json.dumps(report_to_dict(report, sections), indent=2, allow_nan=False) + "\n"
    if format == "text":
        return _text(report, sections)
    raise ValueError(f"unknown format: {format!r}")
