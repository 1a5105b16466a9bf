"""Quality attribute trees: scenario extraction, per-process risk, and a
small catalog of general scenario templates.

Each business goal may own one refinement tree. Depth-1 labels name
quality attributes (performance, security, ...), deeper labels refine
them, and every leaf carries one quality attribute scenario with an
architect-assigned risk. A process inherits the scenarios of every goal
it supports, unless a scenario narrows itself with ``applies_to``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (
    AnalysisModel,
    GoalTree,
    QANode,
    QualityAttributeScenario,
    Risk,
    SixPartScenario,
    risk_rank,
)


class TreeStructureError(ValueError):
    """A node breaks the children-xor-scenario rule."""


@dataclass(frozen=True)
class ExtractedScenario:
    """A leaf scenario together with where it sits in its tree: the
    depth-1 quality attribute and the full label path, e.g.
    ``availability/failover``."""

    scenario: QualityAttributeScenario
    quality_attribute: str
    path: str


def extract_scenarios(tree: GoalTree) -> list[ExtractedScenario]:
    """All leaf scenarios in depth-first declaration order.

    Raises TreeStructureError on a node with both children and a
    scenario, or a leaf without one.
    """
    found: list[ExtractedScenario] = []

    def walk(node: QANode, attribute: str, prefix: str) -> None:
        path = f"{prefix}/{node.label}" if prefix else node.label
        if node.children and node.scenario is not None:
            raise TreeStructureError(f"node {node.label!r} has both children and a scenario")
        if node.children:
            for child in node.children:
                walk(child, attribute, path)
        elif node.scenario is not None:
            found.append(ExtractedScenario(scenario=node.scenario, quality_attribute=attribute, path=path))
        else:
            raise TreeStructureError(f"leaf node {node.label!r} carries no scenario")

    for top in tree.children:
        walk(top, top.label, "")
    return found


def _applies(scenario: QualityAttributeScenario, process_id: str) -> bool:
    return scenario.applies_to is None or process_id in scenario.applies_to


def scenarios_for_process(model: AnalysisModel, process_id: str) -> set[QualityAttributeScenario]:
    """Union of applicable scenarios over every goal the process supports.

    A scenario without ``applies_to`` reaches all supporting processes. A
    scenario id shared by several trees denotes one scenario and is
    counted once.
    """
    model.process(process_id)
    out: set[QualityAttributeScenario] = set()
    for goal in model.goals:
        if model.support_coefficient(process_id, goal.id) <= 0.0:
            continue
        tree = model.tree_for(goal.id)
        if tree is None:
            continue
        for extracted in extract_scenarios(tree):
            if _applies(extracted.scenario, process_id):
                out.add(extracted.scenario)
    return out


def process_risk(model: AnalysisModel, process_id: str) -> Risk | None:
    """Highest risk over the process's applicable scenarios.

    None when no scenario applies at all, which is the "not mapped to
    quality attributes" case of the decision table.
    """
    scenarios = scenarios_for_process(model, process_id)
    if not scenarios:
        return None
    return max((s.risk for s in scenarios), key=risk_rank)


# Template stubs for the six conventional quality attributes. Placeholder
# text only; architects replace every part with specifics.
_GENERAL_SCENARIOS: dict[str, tuple[SixPartScenario, ...]] = {
    "performance": (
        SixPartScenario(
            source="one or many clients, internal or external",
            stimulus="requests arriving periodically or in bursts",
            artifact="the services handling the request",
            environment="normal operation or overload",
            response="requests are processed, possibly with degraded service levels",
            response_measure="latency, throughput, jitter, or miss rate against a stated target",
        ),
    ),
    "availability": (
        SixPartScenario(
            source="hardware, software, network, or operators",
            stimulus="a fault: crash, omission, timing failure, or wrong result",
            artifact="processors, channels, storage, or running services",
            environment="normal operation, startup, or degraded mode",
            response="the fault is detected, masked, or repaired; operation continues or degrades gracefully",
            response_measure="uptime ratio, time to detect, time to repair, or bounded data loss",
        ),
    ),
    "security": (
        SixPartScenario(
            source="a user or system, known or unknown, inside or outside",
            stimulus="an attempt to read, change, or deny access to data or services",
            artifact="data at rest, data in transit, or the services themselves",
            environment="online, connected, or behind a compromised account",
            response="access is authenticated and authorized; misuse is blocked, logged, and reported",
            response_measure="time to detect, share of attempts blocked, or extent of exposure",
        ),
    ),
    "modifiability": (
        SixPartScenario(
            source="a developer, administrator, or end user",
            stimulus="a request to add, change, or remove functionality or a quality",
            artifact="code, configuration, interfaces, or the platform",
            environment="design time, build time, or runtime",
            response="the change is made, tested, and deployed without breaking unrelated parts",
            response_measure="effort, elapsed time, or number of components touched",
        ),
    ),
    "usability": (
        SixPartScenario(
            source="an end user of the system",
            stimulus="wants to learn, use, recover from an error, or adapt the system",
            artifact="the user-facing parts of the system",
            environment="at first contact or during routine use",
            response="the system gives the needed feedback, guidance, or customization",
            response_measure="task time, error rate, learning time, or satisfaction score",
        ),
    ),
    "testability": (
        SixPartScenario(
            source="a developer, tester, or automated pipeline",
            stimulus="a completed increment must be verified",
            artifact="a unit, a service, or the integrated system",
            environment="development, build, or deployment",
            response="the system can be controlled and observed well enough to run the checks",
            response_measure="coverage reached, effort to write tests, or probability a fault surfaces",
        ),
    ),
}


def suggest_general_scenarios(quality_attribute: str) -> list[SixPartScenario]:
    """Template stubs for one of the six conventional quality attributes.

    Matching ignores case and surrounding whitespace; unknown attributes
    get an empty list.
    """
    return list(_GENERAL_SCENARIOS.get(quality_attribute.strip().lower(), ()))
