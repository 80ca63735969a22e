"""Request and response models for the analysis service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field as PydField

from ..fileio import AlgebraDocument, FieldModel


class MakeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["U", "Uprime", "exc3", "B", "FxF"]
    field: FieldModel
    n: Optional[int] = None
    lam: Optional[str] = PydField(default=None, description="scalar string, e.g. '3' or '1/2'")
    phi: Optional[str] = None


class MakeResponse(BaseModel):
    algebra: AlgebraDocument


class AnalyzeOptions(BaseModel):
    model_config = ConfigDict(extra="forbid")
    max_depth: int = 32
    max_axes: int = 128
    idempotents: bool = False
    generators: Optional[list[str]] = None


class AnalyzeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    algebra: AlgebraDocument
    options: AnalyzeOptions = AnalyzeOptions()


class Violation(BaseModel):
    check: str
    detail: str


class AnalyzeResponse(BaseModel):
    verdict: Literal["ok", "violations"]
    violations: list[Violation]
    report: dict


class IdempotentsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    algebra: AlgebraDocument
    generators: Optional[list[str]] = None


class IdempotentsResponse(BaseModel):
    report: dict


class DecomposeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    algebra: AlgebraDocument
    max_depth: int = 32
    max_axes: int = 128
    generators: Optional[list[str]] = None


class ComponentInfo(BaseModel):
    size: int
    type: str
    subalgebra_dim: int
    annihilator_dim: int
    axes: list[str]
    z_ideal: Optional[dict] = None


class DecomposeResponse(BaseModel):
    spanning: bool
    truncated: bool
    pairwise_products_zero: bool
    components: list[ComponentInfo]
    intersections: list[dict]


class FrobeniusRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    algebra: AlgebraDocument
    max_depth: int = 32
    max_axes: int = 128
    generators: Optional[list[str]] = None


class FrobeniusResponse(BaseModel):
    basis: list[str]
    gram: list[list[str]]
    norms: list[str]
    radical_dim: int
    radical: list[str]
    cases: list[dict]
    a0_verdicts: list[dict]


class GraphRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    algebra: AlgebraDocument
    max_depth: int = 32
    max_axes: int = 128
    generators: Optional[list[str]] = None


class GraphResponse(BaseModel):
    dot: str
    vertices: int
    edges: int
    strong_edges: int
    components: int


class HealthResponse(BaseModel):
    status: str
    name: str
    version: str
