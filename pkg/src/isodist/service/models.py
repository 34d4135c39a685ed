"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class OrderRequest(BaseModel):
    elements: list[str]
    edges: list[tuple[str, str]] = Field(default_factory=list)


class OrderClass(BaseModel):
    id: str
    members: list[str]


class PartialOrderResponse(BaseModel):
    classes: list[OrderClass]
    leq: list[tuple[str, str]]
    cover_edges: list[tuple[str, str]]


class OrderDistanceRequest(OrderRequest):
    p: str
    q: str


class DistanceResponse(BaseModel):
    distance: Optional[int]  # None encodes infinity


class GraphModel(BaseModel):
    n: int
    edges: list[tuple[int, int]] = Field(default_factory=list)


class GraphPairRequest(BaseModel):
    g1: GraphModel
    g2: GraphModel
    metric: str = "chi"  # "chi" | "poly"


class ChromaticNumberResponse(BaseModel):
    chromatic_number: int


class ChromaticPolynomialResponse(BaseModel):
    coeffs: list[int]
    text: str


class EmbedsResponse(BaseModel):
    embeds: bool
    mapping: Optional[dict[int, int]] = None


class ChainModel(BaseModel):
    chain: list[int]


class ChainPairRequest(BaseModel):
    a: ChainModel
    b: ChainModel


class ChainLeqResponse(BaseModel):
    leq: bool


class CanonicalChainRequest(BaseModel):
    moduli: list[int]


class ChainNeighborsRequest(BaseModel):
    chain: list[int]
    primes: Optional[list[int]] = None


class ChainNeighborsResponse(BaseModel):
    covers_above: list[list[int]]
    covered_below: list[list[int]]


class IntPairRequest(BaseModel):
    m: int
    n: int


class IntNeighborsRequest(BaseModel):
    n: int
    primes: list[int]


class IntNeighborsResponse(BaseModel):
    above: list[int]
    below: list[int]


class MorphismModel(BaseModel):
    id: str
    src: str
    dst: str
    tags: list[str] = Field(default_factory=list)


class ObjectModel(BaseModel):
    id: str
    card: Optional[int] = None


class CategoryModel(BaseModel):
    objects: list[ObjectModel]
    morphisms: list[MorphismModel] = Field(default_factory=list)
    identities: dict[str, str] = Field(default_factory=dict)
    compose: Optional[list[tuple[str, str, str]]] = None
    iso_pairs: Optional[list[tuple[str, str]]] = None


class CategoryOrderRequest(BaseModel):
    category: CategoryModel
    labels: dict[str, str]
    restrict: Optional[str] = None  # mono / epi / tag


class CategoryDistanceRequest(CategoryOrderRequest):
    x: str
    y: str


class MinorsRequest(BaseModel):
    p: int
    f: str  # polynomial text, e.g. "t^2-1"
    r: int


class MinorsResponse(BaseModel):
    n: int
    m: int
    minors: list[str]
    span_dim: Optional[int] = None  # only reported for r == 2


class HealthResponse(BaseModel):
    status: str
    format: str
