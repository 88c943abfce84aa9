"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..enumeration import DEFAULT_CAP

MapName = Literal[
    "w", "v", "swap", "sort", "transfer", "inject", "insert-max", "delete-max"
]


class HealthResponse(BaseModel):
    status: str
    version: str


class CountRequest(BaseModel):
    comp: list[int]
    k: Optional[int] = None
    lis: Optional[int] = None
    cap: int = DEFAULT_CAP

    @model_validator(mode="after")
    def _exactly_one_selector(self) -> "CountRequest":
        if (self.k is None) == (self.lis is None):
            raise ValueError("provide exactly one of 'k' and 'lis'")
        return self


class CountResponse(BaseModel):
    comp: list[int]
    selector: str
    param: int
    count: int


class TableRequest(BaseModel):
    comp: list[int]
    cap: int = DEFAULT_CAP


class TableRow(BaseModel):
    comp: str
    param: str
    count: int


class TableResponse(BaseModel):
    comp: list[int]
    rows: list[TableRow]
    csv: str


class EnumerateRequest(BaseModel):
    comp: list[int]
    k: Optional[int] = None
    lis: Optional[int] = None
    cap: int = DEFAULT_CAP

    @model_validator(mode="after")
    def _at_most_one_selector(self) -> "EnumerateRequest":
        if self.k is not None and self.lis is not None:
            raise ValueError("provide at most one of 'k' and 'lis'")
        return self


class EnumerateResponse(BaseModel):
    comp: list[int]
    perms: list[str]
    count: int


class MapRequest(BaseModel):
    name: MapName
    perm: str
    index: Optional[int] = None
    target: Optional[list[int]] = None
    k: Optional[int] = None
    trace: bool = False

    @model_validator(mode="after")
    def _required_arguments(self) -> "MapRequest":
        if self.name in ("swap", "transfer") and self.index is None:
            raise ValueError(f"map {self.name!r} requires 'index'")
        if self.name in ("sort", "inject") and self.target is None:
            raise ValueError(f"map {self.name!r} requires 'target'")
        if self.name in ("insert-max", "delete-max") and self.k is None:
            raise ValueError(f"map {self.name!r} requires 'k'")
        return self


class TraceStepModel(BaseModel):
    map: str
    block: int
    before: str
    after: str


class MapResponse(BaseModel):
    perm: str
    comp: list[int]
    values: list[int]
    trace: Optional[list[TraceStepModel]] = None


class TableauCountRequest(BaseModel):
    outer: list[int]
    inner: list[int] = Field(default_factory=list)
    diagram: bool = False


class TableauCountResponse(BaseModel):
    outer: list[int]
    inner: list[int]
    cells: int
    count: int
    diagram: Optional[str] = None


class VerifyRequest(BaseModel):
    suite: str = "all"
    max_size: int = 9


class CheckModel(BaseModel):
    name: str
    ok: bool
    detail: str
    counterexample: Optional[str] = None
    seconds: float


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckModel]
