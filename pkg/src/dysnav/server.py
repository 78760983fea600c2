"""HTTP/JSON API over a finished pipeline run.

Reads are cheap lookups into the current bundle. Recomputation
endpoints (new tau, new path) work from the cached snapshot grid
without re-ingesting; they mutate the served state under a lock, so
concurrent reads stay consistent and recomputations are serialized.
"""

from __future__ import annotations

import threading
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import similarity as sim
from .hierarchy import Mode, build_hierarchy
from .pipeline import (
    AnalysisBundle,
    PipelineResult,
    hierarchy_payload,
    node_index,
    build_bundle,
)


def _error(status: int, code: str, message: str) -> HTTPException:
    return HTTPException(status_code=status, detail={"code": code, "message": message})


class PathRequest(BaseModel):
    from_cell: list[int] = Field(alias="from", min_length=2, max_length=2)
    to_cell: list[int] = Field(alias="to", min_length=2, max_length=2)


class ReclusterRequest(BaseModel):
    tau: float | None = None
    tau_grid: list[float] | None = None


class _ServerState:
    """Mutable view of the run: the grid is fixed, the rest can be
    recomputed from it."""

    def __init__(self, result: PipelineResult):
        self.lock = threading.Lock()
        self.result = result
        self.hierarchies: dict[tuple[Mode, int], dict] = {}
        self.version = 0

    @property
    def bundle(self) -> AnalysisBundle:
        return self.result.bundle

    def _rebuild_bundle(self) -> None:
        r = self.result
        r.bundle = build_bundle(
            r.config, r.dynamic_graph, r.diagnostics, r.grid, r.simgraph,
            r.changes, r.path, r.communities, r.consensus_graph, r.hierarchy,
        )
        self.version += 1

    def recluster(self, tau: float | None, tau_grid: list[float] | None) -> None:
        r = self.result
        new_tau = r.config.tau if tau is None else tau
        simgraph = sim.build_similarity_graph(r.grid, new_tau, tau_grid)
        r.simgraph = simgraph
        r.changes = sim.detect_changes(simgraph)
        r.path = sim.best_full_span_path(simgraph)
        r.communities = sim.consensus_communities(
            simgraph, r.path, r.config.consensus_threshold
        )
        r.consensus_graph = sim.consensus_graph(simgraph, r.path, r.communities)
        r.hierarchy = build_hierarchy(
            r.consensus_graph, r.config.mode, r.config.literal_min_tree
        )
        self.hierarchies.clear()
        self._rebuild_bundle()

    def set_path(self, start: sim.Cell, end: sim.Cell) -> None:
        r = self.result
        path = sim.max_similarity_path(r.simgraph, start, end)
        r.path = path
        r.communities = sim.consensus_communities(
            r.simgraph, path, r.config.consensus_threshold
        )
        r.consensus_graph = sim.consensus_graph(r.simgraph, path, r.communities)
        r.hierarchy = build_hierarchy(
            r.consensus_graph, r.config.mode, r.config.literal_min_tree
        )
        self.hierarchies.clear()
        self._rebuild_bundle()

    def hierarchy_for(self, mode: Mode) -> dict:
        key = (mode, self.version)
        if key not in self.hierarchies:
            result = build_hierarchy(
                self.result.consensus_graph, mode, self.result.config.literal_min_tree
            )
            idx = node_index(self.bundle.node_ids)
            self.hierarchies[key] = hierarchy_payload(
                result, self.result.consensus_graph, idx, mode
            )
        return self.hierarchies[key]


def create_app(result: PipelineResult) -> FastAPI:
    state = _ServerState(result)
    app = FastAPI(title="dysnav", version="0.1.0")
    app.state.analysis = state
    # local analysis tool; the browser client may be served from anywhere
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    def _check_cell(cell: list[int] | tuple[int, int]) -> tuple[int, int]:
        i, j = cell
        sg = state.result.simgraph
        if not (0 <= i < sg.alpha and 0 <= j < sg.rows):
            raise _error(
                404, "CELL_OUT_OF_RANGE", f"cell ({i}, {j}) outside {sg.alpha}x{sg.rows} grid"
            )
        return i, j

    @app.get("/config")
    def get_config() -> dict[str, Any]:
        return state.bundle.config

    @app.get("/grid")
    def get_grid() -> dict[str, Any]:
        return {**state.bundle.grid, "node_ids": state.bundle.node_ids}

    @app.get("/graphs/{i}/{j}")
    def get_graph(i: int, j: int) -> dict[str, Any]:
        _check_cell((i, j))
        graph = state.result.simgraph.graph_at((i, j))
        column = state.bundle.snapshots[i]
        return {
            "cell": [i, j],
            "interval": state.bundle.grid["intervals"][i],
            "snapshot": column[graph.slice_index],
            "node_count": graph.node_count,
        }

    @app.get("/clusters/{i}/{j}")
    def get_clusters(i: int, j: int) -> dict[str, Any]:
        _check_cell((i, j))
        return {"cell": [i, j], **state.bundle.cells[i][j]}

    @app.get("/similarity")
    def get_similarity() -> dict[str, Any]:
        return {"edges": state.bundle.similarity, "changes": state.bundle.changes}

    @app.get("/changes")
    def get_changes() -> dict[str, Any]:
        return {"changes": state.bundle.changes}

    @app.post("/path")
    def post_path(request: PathRequest) -> dict[str, Any]:
        start = _check_cell(request.from_cell)
        end = _check_cell(request.to_cell)
        if start[0] >= end[0]:
            raise _error(
                400, "NOT_FORWARD_IN_TIME", "path endpoints must move forward in time"
            )
        with state.lock:
            state.set_path(start, end)
            return state.bundle.consensus

    @app.post("/recluster")
    def post_recluster(request: ReclusterRequest) -> dict[str, Any]:
        if request.tau is None and request.tau_grid is None:
            raise _error(400, "MISSING_TAU", "provide tau or tau_grid")
        if request.tau is not None and not 0.0 <= request.tau <= 1.0:
            raise _error(400, "INVALID_TAU", f"tau must be in [0, 1], got {request.tau}")
        if request.tau_grid is not None:
            ordered = all(
                lo < hi for lo, hi in zip(request.tau_grid, request.tau_grid[1:])
            )
            if not request.tau_grid or not ordered or not all(
                0.0 <= t <= 1.0 for t in request.tau_grid
            ):
                raise _error(
                    400, "INVALID_TAU_GRID",
                    "tau grid must be strictly increasing values in [0, 1]",
                )
        with state.lock:
            state.recluster(request.tau, request.tau_grid)
            return {
                "cells": state.bundle.cells,
                "similarity": state.bundle.similarity,
                "changes": state.bundle.changes,
            }

    @app.get("/hierarchy")
    def get_hierarchy(mode: str | None = None) -> dict[str, Any]:
        if mode is None:
            chosen = state.result.config.mode
        else:
            try:
                chosen = Mode(mode)
            except ValueError:
                raise _error(
                    400, "INVALID_MODE", f"mode must be 'normal' or 'ct', got {mode!r}"
                ) from None
        with state.lock:
            return state.hierarchy_for(chosen)

    @app.get("/consensus")
    def get_consensus() -> dict[str, Any]:
        return state.bundle.consensus

    return app


def serve_api(result: PipelineResult, port: int, host: str = "127.0.0.1") -> None:
    """Serve the bundle until interrupted."""
    import uvicorn

    uvicorn.run(create_app(result), host=host, port=port, log_level="info")
