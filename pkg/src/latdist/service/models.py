"""Pydantic request/response models for the HTTP service.

Exact rationals (alpha, beta) travel as "p/q" strings and are rejected
if written as floats; integers that can exceed 64 bits (energies,
moment sums) are serialized as decimal strings.
"""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, Field, field_validator


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' (or a plain integer) as an exact rational; floats rejected."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"rational must be given as p/q, not a float: {text!r}")
    try:
        if "/" in text:
            p, q = text.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}: {exc}") from None


class SquareStatsRequest(BaseModel):
    side: int = Field(ge=2, le=4096)
    threads: int = Field(default=1, ge=1)


class QuadrupleStatsModel(BaseModel):
    distinct: int
    total_ordered_pairs: int
    energy: str
    cs_bound: str  # exact fraction "p/q"
    cs_bound_float: float
    gap_ratio: float


class SquareStatsResponse(BaseModel):
    side: int
    n_points: int
    stats: QuadrupleStatsModel
    energy_over_n3logn: float
    distinct_norm: float
    gap_over_sqrtlog: float


class LShapeRequest(BaseModel):
    n: int = Field(ge=1, le=1 << 15)


class LShapeResponse(BaseModel):
    n: int
    point_count: int
    distinct: int
    trivial_energy: str
    energy: str
    cs_bound: str
    cs_bound_float: float
    gap_ratio: float
    axis_pair_total: int
    cross_pair_total: int
    cross_integer_pairs: int
    trivial_energy_over_n3: float


class RectRequest(BaseModel):
    n: int = Field(ge=1)
    alpha: str

    @field_validator("alpha")
    @classmethod
    def _alpha_rational(cls, v: str) -> str:
        parse_rational(v)
        return v


class IdentityModel(BaseModel):
    sum_r: str
    sum_d: str
    sum_r2: str
    sum_d2: str
    sum_binom_r2: str
    sum_binom_d2: str


class RectResponse(BaseModel):
    n: int
    alpha: str
    w: int
    h: int
    i_min: int
    sublattice_size: int
    distinct: int
    distinct_over_n: float
    excess_sum: str
    s_binom: str
    per_interval: list[tuple[int, int]]
    mk_histogram: dict[int, int]
    identities: IdentityModel


class IdentitiesRequest(RectRequest):
    pass


class IdentitiesResponse(BaseModel):
    n: int
    alpha: str
    sublattice_size: int
    identities: IdentityModel


class RhatRequest(BaseModel):
    limit: int = Field(ge=2)
    checkpoints: list[int] | None = None


class RhatCheckpoint(BaseModel):
    k: int
    rhat: str
    ratio: float  # rhat / (k ln k)


class RhatResponse(BaseModel):
    limit: int
    checkpoints: list[RhatCheckpoint]


class LandauRequest(BaseModel):
    limit: int = Field(ge=1)
    checkpoints: list[int] | None = None


class LandauCheckpoint(BaseModel):
    limit: int
    count: int
    ratio: float  # count sqrt(ln N) / N


class LandauResponse(BaseModel):
    limit: int
    checkpoints: list[LandauCheckpoint]


class ArcsRequest(BaseModel):
    n_max: int = Field(ge=1, le=1 << 21)
    beta: str
    per_n: bool = False

    @field_validator("beta")
    @classmethod
    def _beta_rational(cls, v: str) -> str:
        parse_rational(v)
        return v


class ArcRow(BaseModel):
    n: int
    num_points: int
    max_count: int
    axis_count: int
    running_max: int
    angular_width: float
    witness_start_angle: float


class ArcsResponse(BaseModel):
    n_max: int
    beta: str
    scanned: int
    overall_max: int
    rows: list[ArcRow]  # empty unless per_n requested


class OracleCheckResponse(BaseModel):
    checks: list[dict]
    all_ok: bool


class AcceptRequest(BaseModel):
    suite: str = Field(default="fast", pattern="^(fast|full)$")


class CriterionModel(BaseModel):
    id: int
    name: str
    passed: bool
    measured: str
    seconds: float


class AcceptResponse(BaseModel):
    suite: str
    passed: bool
    criteria: list[CriterionModel]


class ErrorBody(BaseModel):
    code: str  # "validation" | "capacity"
    reason: str
