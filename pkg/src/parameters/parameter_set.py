"""
Parameter vectors, derived exponents, the non-integrality condition and the
parameter transforms used by the series solutions and the quadratic identity.

Indices of a and b run over 0..m and are cyclic mod m + 1 where a formula
needs it (a_{m+1} = a_0, b_{m+1} = b_0 = 0).
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from src.core import ParameterValidationError, is_near_integer, unit_circle_exp


@dataclass(frozen=True)
class ParameterSet:
    """Parameters a_0..a_m and b_0..b_m with b_0 = 0."""

    m: int
    a: Tuple[complex, ...]
    b: Tuple[complex, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        a = tuple(complex(v) for v in self.a)
        b = tuple(complex(v) for v in self.b)
        if len(a) != self.m + 1 or len(b) != self.m + 1:
            raise ValueError(
                f"expected {self.m + 1} entries in a and b, got {len(a)} and {len(b)}"
            )
        if b[0] != 0:
            raise ValueError(f"b_0 must be 0, got {b[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def create(cls, a: Sequence[complex], b_tail: Sequence[complex]) -> "ParameterSet":
        """Build from a_0..a_m and b_1..b_m (b_0 = 0 is prepended)."""
        return cls(m=len(a) - 1, a=tuple(a), b=(0j,) + tuple(b_tail))

    def a_cyclic(self, j: int) -> complex:
        return self.a[j % (self.m + 1)]

    def b_cyclic(self, j: int) -> complex:
        return self.b[j % (self.m + 1)]


@dataclass(frozen=True)
class ExponentSet:
    """Exponents of u and the unit-circle values of the parameters."""

    lam: Tuple[complex, ...]
    mu: Tuple[complex, ...]
    alpha: Tuple[complex, ...]
    beta: Tuple[complex, ...]


@dataclass(frozen=True)
class Violation:
    """One failed non-integrality constraint."""

    kind: str
    i: int
    j: int
    difference: complex

    def describe(self) -> str:
        return f"{self.kind}: ({self.i}, {self.j}) difference {self.difference} is an integer"


def validate(p: ParameterSet, delta: Optional[float] = None) -> List[Violation]:
    """Check a_i - b_j and b_i - b_j (i < j) for integrality."""
    delta = settings.integer_tolerance if delta is None else delta
    violations = []
    n = p.m + 1
    for i in range(n):
        for j in range(n):
            diff = p.a[i] - p.b[j]
            if is_near_integer(diff, delta):
                violations.append(Violation("a-b", i, j, diff))
    for i in range(n):
        for j in range(i + 1, n):
            diff = p.b[i] - p.b[j]
            if is_near_integer(diff, delta):
                violations.append(Violation("b-b", i, j, diff))
    return violations


def require_valid(p: ParameterSet, delta: Optional[float] = None) -> None:
    """Raise ParameterValidationError listing every violation of validate()."""
    violations = validate(p, delta)
    if violations:
        raise ParameterValidationError(
            "parameters violate the non-integrality condition: "
            + "; ".join(v.describe() for v in violations),
            violations=violations,
        )


def additional_violations(p: ParameterSet, delta: Optional[float] = None) -> List[Violation]:
    """a_i - a_j integrality, needed for the psi cocycles to form a basis."""
    delta = settings.integer_tolerance if delta is None else delta
    violations = []
    for i in range(p.m + 1):
        for j in range(i + 1, p.m + 1):
            diff = p.a[i] - p.a[j]
            if is_near_integer(diff, delta):
                violations.append(Violation("a-a", i, j, diff))
    return violations


def exponents(p: ParameterSet) -> ExponentSet:
    """lambda_j = a_j - b_{j+1}, mu_j = b_j - a_j, alpha_j, beta_j."""
    n = p.m + 1
    lam = tuple(p.a[j] - p.b_cyclic(j + 1) for j in range(n))
    mu = tuple(p.b[j] - p.a[j] for j in range(n))
    alpha = tuple(unit_circle_exp(v) for v in p.a)
    # beta_0 = 1 exactly since b_0 = 0
    beta = (1 + 0j,) + tuple(unit_circle_exp(v) for v in p.b[1:])
    return ExponentSet(lam=lam, mu=mu, alpha=alpha, beta=beta)


def negate(p: ParameterSet) -> ParameterSet:
    """Parameters of u^{-1}: every a_j and b_j negated (b_0 stays 0)."""
    return ParameterSet(
        m=p.m,
        a=tuple(-v for v in p.a),
        b=(0j,) + tuple(-v for v in p.b[1:]),
    )


def solution_parameters(r: int, p: ParameterSet) -> Tuple[Tuple[complex, ...], Tuple[complex, ...]]:
    """Upper and lower series parameters of the solution f_r."""
    if not 0 <= r <= p.m:
        raise ValueError(f"solution index r must lie in 0..{p.m}, got {r}")
    if r == 0:
        upper = tuple(p.a_cyclic(j) for j in range(1, p.m + 2))
        return upper, tuple(p.b[1:])

    shift = 1 - p.b[r]
    upper = tuple(p.a[j] + shift for j in range(p.m + 1))
    lower = tuple(2 - p.b[r] if j == r else p.b[j] + shift for j in range(1, p.m + 1))
    return upper, lower


def corollary_parameters(r: int, sign: int, p: ParameterSet) -> Tuple[Tuple[complex, ...], Tuple[complex, ...]]:
    """The shifted vectors a^{r,+-}, b^{r,+-} of the quadratic identity.

    upper = 1 +- (a_1 - b_r, ..., a_{m+1} - b_r); lower = 1 +- (b_1 - b_r, ...,
    +-1 - b_r, ..., b_m - b_r), the slot-r lower entry being 2 - b_r for
    sign = +1 and 2 + b_r for sign = -1.
    """
    if not 1 <= r <= p.m:
        raise ValueError(f"corollary index r must lie in 1..{p.m}, got {r}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    b_r = p.b[r]
    upper = tuple(1 + sign * (p.a_cyclic(j) - b_r) for j in range(1, p.m + 2))
    lower = tuple(
        1 + sign * ((sign - b_r) if j == r else (p.b[j] - b_r))
        for j in range(1, p.m + 1)
    )
    return upper, lower
