"""HTTP front end over the analysis pipeline.

One endpoint per CLI subcommand, taking the model document as the JSON
body and the three config overrides as query parameters. A structurally
broken document gets a 422; a structurally fine but invalid model gets a
200 whose validation section carries the errors, mirroring the CLI's
exit-1-with-report behavior.

Run with: uvicorn corebp.service:app
"""

from __future__ import annotations

from dataclasses import replace

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .document import ModelDocument, ModelDocumentError, build_model
from .goaltree import suggest_general_scenarios
from .pipeline import run_pipeline
from .rendering import SECTIONS, report_to_dict

app = FastAPI(
    title="corebp",
    description="Decision support for finding core business processes.",
    version="0.1.0",
)


class ReportOut(BaseModel):
    validation: dict | None = None
    priorities: dict | None = None
    classifications: list[dict] | None = None
    plan: dict | None = None
    config_echo: dict | None = None
    method_notes: list[str] | None = None


class SixPartOut(BaseModel):
    source: str
    stimulus: str
    artifact: str
    environment: str
    response: str
    response_measure: str


def _run(
    doc: ModelDocument,
    threshold: float | None,
    merge_threshold: float | None,
    capacity: int | None,
    sections: tuple[str, ...],
) -> ReportOut:
    try:
        model = build_model(doc)
    except ModelDocumentError as exc:
        raise HTTPException(status_code=422, detail=f"{exc.kind}: {exc}") from exc
    config = model.config
    if threshold is not None:
        config = replace(config, priority_threshold=threshold)
    if merge_threshold is not None:
        config = replace(config, merge_threshold=merge_threshold)
    if capacity is not None:
        config = replace(config, capacity=capacity)
    report = run_pipeline(model.with_config(config))
    return ReportOut(**report_to_dict(report, sections))


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok"}


@app.post("/validate", response_model=ReportOut, response_model_exclude_none=True)
def validate_endpoint(
    doc: ModelDocument,
    threshold: float | None = None,
    merge_threshold: float | None = None,
    capacity: int | None = None,
) -> ReportOut:
    return _run(doc, threshold, merge_threshold, capacity, ("validation",))


@app.post("/prioritize", response_model=ReportOut, response_model_exclude_none=True)
def prioritize_endpoint(
    doc: ModelDocument,
    threshold: float | None = None,
    merge_threshold: float | None = None,
    capacity: int | None = None,
) -> ReportOut:
    return _run(doc, threshold, merge_threshold, capacity, ("validation", "priorities"))


@app.post("/classify", response_model=ReportOut, response_model_exclude_none=True)
def classify_endpoint(
    doc: ModelDocument,
    threshold: float | None = None,
    merge_threshold: float | None = None,
    capacity: int | None = None,
) -> ReportOut:
    return _run(
        doc, threshold, merge_threshold, capacity, ("validation", "classifications", "config_echo")
    )


@app.post("/plan", response_model=ReportOut, response_model_exclude_none=True)
def plan_endpoint(
    doc: ModelDocument,
    threshold: float | None = None,
    merge_threshold: float | None = None,
    capacity: int | None = None,
) -> ReportOut:
    return _run(doc, threshold, merge_threshold, capacity, ("validation", "plan", "config_echo"))


@app.post("/report", response_model=ReportOut, response_model_exclude_none=True)
def report_endpoint(
    doc: ModelDocument,
    threshold: float | None = None,
    merge_threshold: float | None = None,
    capacity: int | None = None,
) -> ReportOut:
    return _run(doc, threshold, merge_threshold, capacity, SECTIONS)


@app.get("/scenario-templates/{attribute}", response_model=list[SixPartOut])
def scenario_templates(attribute: str) -> list[SixPartOut]:
    templates = suggest_general_scenarios(attribute)
    if not templates:
        raise HTTPException(status_code=404, detail=f"no templates for attribute {attribute!r}")
    return [
        SixPartOut(
            source=t.source,
            stimulus=t.stimulus,
            artifact=t.artifact,
            environment=t.environment,
            response=t.response,
            response_measure=t.response_measure,
        )
        for t in templates
    ]
