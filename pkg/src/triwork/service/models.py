"""Pydantic request models for the verification service (schema tw/1).

These models are the single parsing point for every external input:
the HTTP endpoints validate against them, and the CLI funnels local
files through the same classes, so malformed input fails identically
(with field locations) on both paths.
"""
from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..bridge import BridgeSurfaceData
from ..cover import MonodromyRep, transposition
from ..geometry.graphs import GraphSurface
from ..homology import TrisectionDiagram
from ..params import RelTrisectionParams, TrisectionParams
from ..pipeline import PipelineConfig
from ..reconstruct import SplittingData


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ParamsIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    genus: int
    k: tuple[int, int, int]
    p: Optional[int] = None
    b: Optional[int] = None

    @model_validator(mode="after")
    def _boundary_fields_together(self):
        if (self.p is None) != (self.b is None):
            raise ValueError("relative parameters need both p and b")
        return self

    @property
    def is_relative(self) -> bool:
        return self.p is not None

    def to_core(self):
        if self.is_relative:
            return RelTrisectionParams(genus=self.genus, k=tuple(self.k),
                                       page_genus=self.p,
                                       boundary_components=self.b)
        return TrisectionParams(genus=self.genus, k=tuple(self.k))


class RelParamsIn(ParamsIn):
    p: int
    b: int


class DiagramIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    genus: int
    boundary_components: int = 0
    cut_systems: tuple[list[list[int]], list[list[int]], list[list[int]]]

    def to_core(self) -> TrisectionDiagram:
        return TrisectionDiagram(
            genus=self.genus,
            boundary_components=self.boundary_components,
            cut_systems=tuple(tuple(tuple(v) for v in s)
                              for s in self.cut_systems))


class BridgeSurfaceIn(StrictModel):
    braid_index: int
    bridge_index: int
    bridge_points: int
    arcs: tuple[int, int, int]
    patches: tuple[int, int, int]
    closed_ambient: bool = False

    def to_core(self) -> BridgeSurfaceData:
        return BridgeSurfaceData(braid_index=self.braid_index,
                                 bridge_index=self.bridge_index,
                                 bridge_points=self.bridge_points,
                                 arcs=tuple(self.arcs),
                                 patches=tuple(self.patches),
                                 closed_ambient=self.closed_ambient)


class BridgeVerifyIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    bridge_surface: BridgeSurfaceIn
    moves: list[int] = Field(default_factory=list)


class MonodromyIn(StrictModel):
    degree: int
    meridians: list[tuple[int, int]]

    def to_core(self) -> MonodromyRep:
        return MonodromyRep(degree=self.degree,
                            meridians=tuple(transposition(i, j, self.degree)
                                            for i, j in self.meridians))


class ModelPolynomialIn(StrictModel):
    n: int = Field(ge=1, le=16)
    eps: float = Field(gt=0)
    n_regular: int = Field(default=100, ge=1)
    seed: int = 0


class CoverVerifyIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    monodromy: MonodromyIn
    locus: Optional[BridgeSurfaceIn] = None
    sweep_max_disks: int = Field(default=0, ge=0, le=6)
    model_polynomial: Optional[ModelPolynomialIn] = None


class GraphIn(StrictModel):
    kind: Literal["linear", "cubic"]
    epsilon: float
    theta: float = 0.0
    translation: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    domain: tuple[float, float, float, float]
    pleated: bool = False

    def to_core(self) -> GraphSurface:
        t = (complex(self.translation[0], self.translation[1]),
             complex(self.translation[2], self.translation[3]))
        return GraphSurface(kind=self.kind, epsilon=self.epsilon,
                            theta=self.theta, translation=t,
                            domain=tuple(self.domain), pleated=self.pleated)


class SceneIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    M: float
    R: float
    graphs: list[GraphIn]
    tol: float = 1e-9


class CuspIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    samples: int = Field(default=10_000, ge=1)
    seed: int = 0
    box: float = Field(default=3.0, gt=0)


class GlueGridIn(StrictModel):
    """Sampled glue evaluators on an (x1, x2) grid, replacing the
    built-in model; values must be non-negative, one grid per sector."""

    x1_axis: list[float]
    x2_axis: list[float]
    values: tuple[list[list[float]], list[list[float]], list[list[float]]]


class PshIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    n_lines: int = Field(default=1000, ge=1)
    m_samples: int = Field(default=64, ge=64)
    radius: float = Field(default=0.25, gt=0)
    coverage_samples: int = Field(default=1_000_000, ge=1)
    seed: int = 0
    tol: float = Field(default=1e-8, gt=0)
    M: float = 100.0
    glue_grid: Optional[GlueGridIn] = None


class SplittingIn(StrictModel):
    j1: tuple[int, int, int]
    j2: tuple[int, int, int]

    def to_core(self) -> SplittingData:
        return SplittingData(j1=tuple(self.j1), j2=tuple(self.j2))


class ReconstructIn(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    summand_a: ParamsIn
    summand_b: ParamsIn
    splitting: SplittingIn
    rel_base: RelParamsIn
    spine_z: Optional[DiagramIn] = None
    spine_b: Optional[DiagramIn] = None
    reducing_class: Optional[list[int]] = None


class SteinB4In(StrictModel):
    schema_version: str = Field(default="tw/1", alias="schema")
    stabilizations: tuple[int, int, int] = (0, 0, 0)
    M: float = 100.0
    R: float = 10.0
    eps_prime: float = 0.01
    tol: float = 1e-9
    band: float = 1e-7
    seed: int = 0

    def to_core(self) -> PipelineConfig:
        return PipelineConfig(stabilizations=tuple(self.stabilizations),
                              M=self.M, R=self.R, eps_prime=self.eps_prime,
                              tol=self.tol, band=self.band, seed=self.seed)
