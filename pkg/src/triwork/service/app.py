"""FastAPI surface of the workbench.

Each verify endpoint wraps one handler; request bodies are validated by
the pydantic models (malformed input answers 422 with field locations),
and semantic rejections from the core raise 400.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import SCHEMA_VERSION, __version__
from . import handlers, models


def create_app() -> FastAPI:
    app = FastAPI(title="triwork", version=__version__)

    def guard(fn, *args):
        try:
            return fn(*args)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))

    @app.get("/health")
    def health():
        return {"status": "ok", "schema": SCHEMA_VERSION,
                "version": __version__}

    @app.post("/verify/params")
    def verify_params(inp: models.ParamsIn):
        return guard(handlers.handle_params, inp)

    @app.post("/verify/diagram-h1")
    def verify_diagram_h1(inp: models.DiagramIn):
        return guard(handlers.handle_diagram_h1, inp)

    @app.post("/verify/bridge")
    def verify_bridge(inp: models.BridgeVerifyIn):
        return guard(handlers.handle_bridge, inp)

    @app.post("/verify/cover")
    def verify_cover(inp: models.CoverVerifyIn):
        return guard(handlers.handle_cover, inp)

    @app.post("/verify/geometry")
    def verify_geometry(inp: models.SceneIn):
        return guard(handlers.handle_geometry, inp)

    @app.post("/verify/cusp")
    def verify_cusp(inp: models.CuspIn):
        return guard(handlers.handle_cusp, inp)

    @app.post("/verify/psh")
    def verify_psh(inp: models.PshIn):
        return guard(handlers.handle_psh, inp)

    @app.post("/verify/reconstruct")
    def verify_reconstruct(inp: models.ReconstructIn):
        return guard(handlers.handle_reconstruct, inp)

    @app.post("/stein-b4")
    def stein_b4(inp: models.SteinB4In):
        return guard(handlers.handle_stein_b4, inp)

    return app


app = create_app()
