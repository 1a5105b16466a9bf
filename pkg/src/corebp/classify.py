"""Decision-table classification of business processes.

Each process lands in one of four cells based on its priority class
(high or low, against a threshold) and the risk of its quality attribute
scenarios (high, low, or none). Two cells are definitive; the other two
are defaults an architect may override per process.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import fsum

from .goaltree import process_risk
from .model import AnalysisModel, Risk
from .prioritize import PriorityTable, prioritize_all


class PriorityClass(str, Enum):
    HIGH = "high"
    LOW = "low"


class Cell(str, Enum):
    CERTAINLY_CBP = "certainly_cbp"
    CAN_BE_CBP = "can_be_cbp"
    CANT_BE_CBP = "cant_be_cbp"
    CERTAINLY_NOT_CBP = "certainly_not_cbp"


# The full decision table. Keys cover all 6 (priority class, risk)
# combinations; None risk means no scenario applies to the process.
DECISION_TABLE: dict[tuple[PriorityClass, Risk | None], Cell] = {
    (PriorityClass.HIGH, Risk.HIGH): Cell.CERTAINLY_CBP,
    (PriorityClass.HIGH, Risk.LOW): Cell.CAN_BE_CBP,
    (PriorityClass.HIGH, None): Cell.CAN_BE_CBP,
    (PriorityClass.LOW, Risk.HIGH): Cell.CANT_BE_CBP,
    (PriorityClass.LOW, Risk.LOW): Cell.CANT_BE_CBP,
    (PriorityClass.LOW, None): Cell.CERTAINLY_NOT_CBP,
}


@dataclass(frozen=True)
class CbpClassification:
    process_id: str
    priority: float
    priority_class: PriorityClass
    risk_input: Risk | None
    cell: Cell
    resolved: bool
    override_applied: bool
    # set when an override was given on a definitive cell and dropped
    override_ignored: bool


def decision_cell(priority_class: PriorityClass, risk: Risk | None) -> Cell:
    """Look up the decision-table cell for one combination."""
    return DECISION_TABLE[(priority_class, risk)]


def resolve(cell: Cell, override: bool | None) -> tuple[bool, bool, bool]:
    """Final verdict for a cell plus override bookkeeping.

    Returns (resolved, override_applied, override_ignored). Definitive
    cells fix the verdict and ignore any override; ambiguous cells
    default to their tentative reading (can-be: yes, cant-be: no) and an
    override replaces the default.
    """
    if cell is Cell.CERTAINLY_CBP:
        return True, False, override is not None
    if cell is Cell.CERTAINLY_NOT_CBP:
        return False, False, override is not None
    default = cell is Cell.CAN_BE_CBP
    if override is None:
        return default, False, False
    return override, True, False


def default_threshold(table: PriorityTable) -> float:
    """Arithmetic mean of all process priorities; 0.0 with no processes."""
    values = list(table.process_priority.values())
    if not values:
        return 0.0
    return fsum(values) / len(values)


def effective_threshold(model: AnalysisModel, table: PriorityTable) -> float:
    if model.config.priority_threshold is not None:
        return model.config.priority_threshold
    return default_threshold(table)


def classify_priority(priority: float, threshold: float) -> PriorityClass:
    # ties at exactly the threshold classify high
    return PriorityClass.HIGH if priority >= threshold else PriorityClass.LOW


def priority_class(model: AnalysisModel, table: PriorityTable, process_id: str) -> PriorityClass:
    """High iff the process priority reaches the effective threshold."""
    if process_id not in table.process_priority:
        raise KeyError(f"unknown process id: {process_id}")
    return classify_priority(table.process_priority[process_id], effective_threshold(model, table))


def classify(model: AnalysisModel, table: PriorityTable | None = None) -> list[CbpClassification]:
    """Classify every process, in declaration order.

    The threshold comes from config.priority_threshold when set, else
    from the mean of process priorities.
    """
    if table is None:
        table = prioritize_all(model)
    cut = effective_threshold(model, table)
    out: list[CbpClassification] = []
    for process in model.processes:
        priority = table.process_priority[process.id]
        pclass = classify_priority(priority, cut)
        risk = process_risk(model, process.id)
        cell = decision_cell(pclass, risk)
        resolved, applied, ignored = resolve(cell, process.cbp_override)
        out.append(
            CbpClassification(
                process_id=process.id,
                priority=priority,
                priority_class=pclass,
                risk_input=risk,
                cell=cell,
                resolved=resolved,
                override_applied=applied,
                override_ignored=ignored,
            )
        )
    return out
