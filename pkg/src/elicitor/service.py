"""HTTP service exposing the engine to the companion UI and scripts.

One immutable dataset per process; every request is a pure read, so
concurrent handling is free. Responses mirror the CLI's structured
output exactly and always carry the dataset version.

Config: dataset path via --dataset or ELICIT_DATASET, bind address via
--bind or ELICIT_BIND (host:port).
"""

from __future__ import annotations

import argparse
import os

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from . import default_dataset_path
from .dataset import Dataset, load_dataset
from .engine import FeasibilityDecision, ProjectProfile, recommend, what_if_diff
from .errors import ElicitorError
from .report import diff_to_doc, recommendation_to_doc, taxonomy_to_doc


class DecisionPayload(BaseModel):
    technique: str
    verdict: str
    decided_by: str
    reason: str = ""


class ProfilePayload(BaseModel):
    label: str = ""
    project: dict[str, str] = Field(default_factory=dict)
    people: dict[str, list[str]] = Field(default_factory=dict)
    process_model: str | None = None
    feasibility: list[DecisionPayload] = Field(default_factory=list)


class WhatIfPayload(BaseModel):
    profile_a: ProfilePayload
    profile_b: ProfilePayload


def _to_profile(
    payload: ProfilePayload,
    dataset: Dataset,
) -> tuple[ProjectProfile, list[FeasibilityDecision]]:
    profile = ProjectProfile(
        label=payload.label,
        project_values=frozenset(payload.project.items()),
        people_values=frozenset(
            (role, trait)
            for role, traits in payload.people.items()
            for trait in traits
        ),
        process_model=payload.process_model,
    )
    decisions = [
        FeasibilityDecision(
            technique=dataset.registry.lookup(d.technique),
            verdict=d.verdict,
            reason=d.reason,
            decided_by=d.decided_by,
        )
        for d in payload.feasibility
    ]
    return profile, decisions


def create_app(dataset_path: str | None = None, static_dir: str | None = None) -> FastAPI:
    path = dataset_path or os.environ.get("ELICIT_DATASET") or str(default_dataset_path())
    with open(path, "rb") as handle:
        dataset = load_dataset(handle, name=path)

    app = FastAPI(title="elicitor", version=dataset.version)

    @app.exception_handler(ElicitorError)
    async def handle_elicitor_error(_request, exc: ElicitorError):
        return JSONResponse(
            status_code=400,
            content={"code": exc.code, "field": exc.field, "message": str(exc)},
        )

    @app.get("/api/health")
    def health():
        return {"status": "ok", "dataset_version": dataset.version}

    @app.get("/api/dataset/meta")
    def dataset_meta():
        return {
            "dataset_version": dataset.version,
            "provenance": dataset.provenance,
            "threshold": str(dataset.threshold),
            "techniques": len(dataset.registry),
        }

    @app.get("/api/taxonomy")
    def taxonomy():
        return taxonomy_to_doc(dataset)

    @app.post("/api/recommend")
    def post_recommend(payload: ProfilePayload):
        profile, decisions = _to_profile(payload, dataset)
        result = recommend(profile, dataset, decisions)
        return recommendation_to_doc(result, dataset)

    @app.post("/api/whatif")
    def post_whatif(payload: WhatIfPayload):
        p1, _ = _to_profile(payload.profile_a, dataset)
        p2, _ = _to_profile(payload.profile_b, dataset)
        return diff_to_doc(what_if_diff(p1, p2, dataset), dataset)

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def main() -> None:
    import uvicorn

    parser = argparse.ArgumentParser(prog="elicitor-serve")
    parser.add_argument("--dataset", default=None)
    parser.add_argument("--bind", default=os.environ.get("ELICIT_BIND", "127.0.0.1:8734"))
    parser.add_argument("--static", default=None,
                        help="directory of UI assets to serve at /")
    args = parser.parse_args()
    host, _, port = args.bind.partition(":")
    uvicorn.run(
        create_app(args.dataset, static_dir=args.static),
        host=host or "127.0.0.1",
        port=int(port or 8734),
    )


if __name__ == "__main__":
    main()
