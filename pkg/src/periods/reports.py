"""
Verification reports shared by the period relations and the quadrature checks.
"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict

from config.settings import settings
from src.utils.json_utils import complex_to_pair


class Identity(str, Enum):
    TPR_00 = "tpr_00"
    COROLLARY_52 = "corollary_52"
    EULER_INTEGRAL = "euler_integral"
    BETA_PRODUCT = "beta_product"


class VerificationReport(BaseModel):
    """Both sides of one identity, their residuals and the verdict."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity: Identity
    m: int
    x: Optional[float] = None
    seed: Optional[int] = None
    lhs: complex
    rhs: complex
    abs_residual: float
    rel_residual: float
    tol: float
    passed: bool
    details: Dict[str, Any] = {}

    @classmethod
    def compare(
        cls,
        identity: Identity,
        m: int,
        lhs: complex,
        rhs: complex,
        tol: float,
        x: Optional[float] = None,
        seed: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "VerificationReport":
        lhs, rhs = complex(lhs), complex(rhs)
        abs_residual = abs(lhs - rhs)
        rel_residual = abs_residual / max(abs(lhs), abs(rhs), settings.tiny)
        return cls(
            identity=identity,
            m=m,
            x=x,
            seed=seed,
            lhs=lhs,
            rhs=rhs,
            abs_residual=abs_residual,
            rel_residual=rel_residual,
            tol=tol,
            passed=rel_residual <= tol,
            details=details or {},
        )

    def with_seed(self, seed: Optional[int]) -> "VerificationReport":
        return self.model_copy(update={"seed": seed})

    def to_json_dict(self) -> Dict[str, Any]:
        """Report in its JSON layout; complex values as [re, im]."""
        document: Dict[str, Any] = {
            "identity": self.identity.value,
            "m": self.m,
            "x": self.x,
            "lhs": complex_to_pair(self.lhs),
            "rhs": complex_to_pair(self.rhs),
            "abs_residual": self.abs_residual,
            "rel_residual": self.rel_residual,
            "tol": self.tol,
            "pass": self.passed,
        }
        if self.seed is not None:
            document["seed"] = self.seed
        if self.details:
            document["details"] = self.details
        return document
