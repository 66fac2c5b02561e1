"""
Validated options of one command-line invocation.
"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class Command(str, Enum):
    EVAL = "eval"
    SOLUTIONS = "solutions"
    INTERSECT = "intersect"
    PERIODS = "periods"
    VERIFY = "verify"
    QUAD = "quad"
    SWEEP = "sweep"


class Basis(str, Enum):
    PHI = "phi"
    PSI = "psi"
    MIXED = "mixed"


class RunConfig(BaseModel):
    """One subcommand and everything it needs."""

    model_config = ConfigDict(frozen=True)

    command: Command
    params: Optional[str] = None
    m_values: List[int] = Field(default_factory=list)
    seed: int = 0
    x: Optional[float] = None
    tol: float = 1e-14
    out: Optional[str] = None
    basis: Basis = Basis.PHI
    level: Optional[int] = None
    shift: int = Field(default=0, ge=0)
    upper: Optional[str] = None
    lower: Optional[str] = None
    count: int = Field(default=20, ge=1)
    workers: int = Field(default=1, ge=1)
    csv: Optional[str] = None

    @field_validator("tol")
    @classmethod
    def _tol_range(cls, value: float) -> float:
        if not 0.0 < value <= 1e-2:
            raise ValueError(f"tol must lie in (0, 1e-2], got {value}")
        return value

    @field_validator("m_values")
    @classmethod
    def _positive_m(cls, values: List[int]) -> List[int]:
        if any(m < 1 for m in values):
            raise ValueError(f"m must be positive, got {values}")
        return values

    @model_validator(mode="after")
    def _one_parameter_source(self) -> "RunConfig":
        if self.command == Command.SWEEP:
            if self.params is not None:
                raise ValueError("sweep draws its own parameters; --params is not accepted")
            if not self.m_values:
                raise ValueError("sweep needs --m")
            return self

        if len(self.m_values) > 1:
            raise ValueError(f"{self.command.value} takes a single m, got {self.m_values}")

        if self.command == Command.EVAL and (self.upper is not None or self.lower is not None):
            if self.upper is None or self.lower is None:
                raise ValueError("eval needs both --upper and --lower")
            sources = 1 + (self.params is not None) + bool(self.m_values)
        else:
            sources = (self.params is not None) + bool(self.m_values)
        if sources != 1:
            raise ValueError("give exactly one parameter source: --params, --m (random draw) or --upper/--lower")
        return self

    @property
    def m(self) -> Optional[int]:
        return self.m_values[0] if self.m_values else None
