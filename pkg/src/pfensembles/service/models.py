"""Pydantic request/response models for the HTTP service.

Half-integers travel as the integer 2x; rationals as "p/q" strings;
Gaussian rationals as "p/q" or "p/q+r/si" strings; exact scalars as
{"coeffs": [[re, im] x 4], "base": "p/q"}.
"""

from __future__ import annotations

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1"


class MeasureRequest(BaseModel):
    family: Literal["z", "plancherel"] = "z"
    theta: str = "2"
    z: Optional[str] = None
    zprime: Optional[str] = None
    xi: Optional[str] = None  # mixed measure when set
    eta: Optional[str] = None  # poissonized Plancherel when set
    n: Optional[int] = Field(default=None, ge=0)
    max_size: Optional[int] = Field(default=None, ge=0)


class MeasureRow(BaseModel):
    partition: List[int]
    exact: Optional[Dict] = None  # tagged scalar JSON; None when singular
    value_float_re: Optional[float] = None
    value_float_im: Optional[float] = None
    error: Optional[str] = None


class MeasureResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    rows: List[MeasureRow]


class VerifyRequest(BaseModel):
    suite: Literal[
        "normalization", "symmetry", "frobenius", "pfaffian", "theorems", "kernel"
    ]
    max_n: Optional[int] = None
    max_size: Optional[int] = None
    radius: Optional[int] = None  # 2x the window radius


class VerifyCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    suite: str
    passed: bool
    checks: List[VerifyCheck]


class EnsemblePfRequest(BaseModel):
    kind: Literal["z_theta2", "z_half", "plancherel"]
    z: Optional[str] = None
    zprime: Optional[str] = None
    xi: Optional[str] = None
    eta: Optional[str] = None
    minus: List[int] = Field(default_factory=list)  # 2x encodings
    plus: List[int] = Field(default_factory=list)


class EnsemblePfResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    config: Dict[str, List[int]]
    pfaffian: Dict
    closed_form: Dict
    equal: bool
    in_confL: bool


class KernelRequest(BaseModel):
    kind: Literal["z_theta2", "z_half", "plancherel"]
    z: Optional[str] = None
    zprime: Optional[str] = None
    xi: Optional[str] = None
    eta: Optional[str] = None
    radius: int = Field(description="2x the window radius, a positive odd integer")


class KernelEntry(BaseModel):
    x: int
    y: int
    block: List[List[List[float]]]  # 2x2 of [re, im]
    exact: bool = True


class KernelResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    radius: int
    entries: List[KernelEntry]


class SampleRequest(BaseModel):
    family: Literal["z", "plancherel"] = "plancherel"
    theta: str = "2"
    z: Optional[str] = None
    zprime: Optional[str] = None
    xi: Optional[str] = None
    n: Optional[int] = Field(default=None, ge=1)
    max_size: int = Field(default=12, ge=0)
    count: int = Field(default=1, ge=1)
    seed: int = 0


class SampleResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    rng: str
    seed: int
    samples: List[List[int]]
    tail_mass_float: Optional[float] = None


class ConvergenceRequest(BaseModel):
    kind: Literal["z_theta2", "z_half", "plancherel"]
    z: Optional[str] = None
    zprime: Optional[str] = None
    xi: Optional[str] = None
    eta: Optional[str] = None
    max_size: int = Field(default=10, ge=0, le=14)


class ConvergenceDegree(BaseModel):
    degree: int
    partial_sum: Dict
    expected_mass_part: str  # exact per-degree term as a rational string
    residual_ok: bool


class ConvergenceResponse(BaseModel):
    schema_version: str = SCHEMA_VERSION
    degrees: List[ConvergenceDegree]
    closed_form_float: float
    partial_float: float
    residual_float: float
