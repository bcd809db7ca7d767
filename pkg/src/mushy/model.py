"""Domain types for the solidification problem and input validation.

The physical setting: a semi-infinite liquid bath at its fusion temperature
(taken as 0) starts to solidify at t = 0 through a prescribed heat flux
q0/sqrt(t) at the fixed face x = 0.  Between the fully solid region and the
liquid sits an isothermal mushy zone delimited by two free boundaries
s(t) < r(t).  The flux condition is overspecified by either a convective
(Robin) condition with coefficient h0/sqrt(t) or by a prescribed face
temperature; the amount of overspecification is what lets one thermal
coefficient be recovered instead of prescribed.

Temperatures at the face are stored through the positive magnitude
``d_inf``: the physical face datum is ``-d_inf`` (degrees below fusion).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from .errors import ValidationError

__all__ = [
    "Face",
    "UnknownCase",
    "ThermalCoefficients",
    "MushyCoefficients",
    "BoundaryData",
    "SimilaritySolution",
    "RestrictionReport",
    "CaseResult",
    "ProblemInstance",
    "validate",
]


class Face(Enum):
    """Which overspecified condition holds at the fixed face x = 0."""

    CONVECTIVE = "convective"
    DIRICHLET = "dirichlet"


class UnknownCase(Enum):
    """Which single coefficient is treated as unknown."""

    L = "l"  # latent heat per unit mass
    GAMMA = "gamma"  # mushy-zone temperature-gradient datum
    EPSILON = "epsilon"  # solid fraction of latent heat released at s(t)
    K = "k"  # thermal conductivity
    RHO = "rho"  # density
    C = "c"  # specific heat


_THERMAL_FIELDS = ("l", "k", "rho", "c")
_MUSHY_FIELDS = ("epsilon", "gamma")


@dataclass(frozen=True)
class ThermalCoefficients:
    """Bulk material coefficients; any field may be None while unknown."""

    l: Optional[float] = None
    k: Optional[float] = None
    rho: Optional[float] = None
    c: Optional[float] = None

    @property
    def alpha(self) -> Optional[float]:
        """Thermal diffusivity k / (rho c); None until k, rho, c are all set."""
        if self.k is None or self.rho is None or self.c is None:
            return None
        return self.k / (self.rho * self.c)


@dataclass(frozen=True)
class MushyCoefficients:
    """Structure of the mushy zone.

    epsilon is the fraction of the latent heat released at the solid front
    (the rest is released at the liquid front) and must lie strictly inside
    (0, 1); gamma > 0 fixes the product of the solid-side temperature
    gradient at s(t) with the zone width r(t) - s(t).
    """

    epsilon: Optional[float] = None
    gamma: Optional[float] = None


@dataclass(frozen=True)
class BoundaryData:
    """Data of the overspecified fixed-face condition.

    q0 scales the imposed flux q0/sqrt(t); d_inf > 0 is the magnitude of the
    face temperature datum (physical value -d_inf); h0 scales the convective
    coefficient h0/sqrt(t) and is ignored for the Dirichlet problem.
    ``h0 = math.inf`` is admitted and reproduces the Dirichlet formulas
    exactly, which is convenient for limit studies.
    """

    q0: float
    d_inf: float
    h0: Optional[float] = None


@dataclass(frozen=True)
class SimilaritySolution:
    """Closed-form solution of the one-phase problem.

    The solid temperature is T(x, t) = a_coef + b_coef * erf(x / (2 sqrt(alpha t)))
    for 0 <= x <= s(t); the fronts are s(t) = 2 xi sqrt(alpha t) and
    r(t) = 2 mu sqrt(alpha t).  The mushy zone is isothermal at 0, so the
    dimensionless front positions must satisfy 0 < xi < mu.
    """

    a_coef: float
    b_coef: float
    xi: float
    mu: float
    alpha: float

    def __post_init__(self) -> None:
        if not (self.xi > 0.0 and math.isfinite(self.xi)):
            raise ValidationError(f"xi must be positive and finite, got {self.xi!r}")
        if not self.mu > self.xi:
            raise ValidationError(f"mu must exceed xi, got mu={self.mu!r} xi={self.xi!r}")
        if not (self.b_coef > 0.0 and math.isfinite(self.b_coef)):
            raise ValidationError(f"b_coef must be positive and finite, got {self.b_coef!r}")
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise ValidationError(f"alpha must be positive and finite, got {self.alpha!r}")


@dataclass(frozen=True)
class RestrictionReport:
    """Outcome of one solvability restriction, oriented as ``lhs < rhs``.

    ``margin = rhs - lhs`` is positive exactly when the restriction is
    satisfied; equality counts as violation (the underlying existence
    arguments need strict inequalities).  ``note`` carries free-text
    diagnostics, e.g. for degenerate auxiliary equations.
    """

    restriction_id: str
    satisfied: bool
    lhs: float
    rhs: float
    note: str = ""

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


@dataclass(frozen=True)
class CaseResult:
    """Recovered coefficient together with the full solution and diagnostics."""

    case: UnknownCase
    value: float
    xi: float
    solution: SimilaritySolution
    reports: tuple[RestrictionReport, ...]


@dataclass(frozen=True)
class ProblemInstance:
    """A validated problem description.

    Exactly the slot named by ``case`` is None among the six coefficients
    (or none of them for ``case=None``, the fully specified direct mode).
    """

    face: Face
    case: Optional[UnknownCase]
    thermal: ThermalCoefficients
    mushy: MushyCoefficients
    boundary: BoundaryData

    def with_value(self, value: float) -> "ProblemInstance":
        """Return a copy with the unknown slot filled by ``value``."""
        if self.case is None:
            raise ValidationError("direct instances have no unknown slot to fill")
        name = self.case.value
        if name in _THERMAL_FIELDS:
            return replace(self, case=None, thermal=replace(self.thermal, **{name: value}))
        return replace(self, case=None, mushy=replace(self.mushy, **{name: value}))


def _check_positive(name: str, value: float) -> float:
    value = float(value)
    if math.isnan(value) or value <= 0.0:
        raise ValidationError(f"{name} must be positive, got {value!r}")
    return value


def validate(
    thermal: ThermalCoefficients,
    mushy: MushyCoefficients,
    boundary: BoundaryData,
    case: Optional[UnknownCase] = None,
    face: Face = Face.CONVECTIVE,
) -> ProblemInstance:
    """Check a problem description and return the normalized instance.

    Rules enforced:

    * every coefficient except the unknown slot is present, finite and
      positive (``h0 = +inf`` is tolerated as the Dirichlet limit);
    * the unknown slot itself is absent - supplying it is an error, since a
      value there would silently be ignored by the solvers;
    * epsilon lies strictly inside (0, 1) whenever present;
    * the convective problem carries h0 > 0; the Dirichlet problem ignores h0.

    Validation is idempotent: re-validating the parts of a returned instance
    reproduces it exactly.
    """
    unknown = None if case is None else case.value

    filled: dict[str, Optional[float]] = {}
    for name in _THERMAL_FIELDS:
        value = getattr(thermal, name)
        if name == unknown:
            if value is not None:
                raise ValidationError(
                    f"coefficient {name!r} is declared unknown but a value {value!r} was supplied"
                )
            filled[name] = None
        else:
            if value is None:
                raise ValidationError(f"coefficient {name!r} is required but missing")
            filled[name] = _check_positive(name, value)
            if math.isinf(filled[name]):
                raise ValidationError(f"coefficient {name!r} must be finite, got {value!r}")
    thermal_n = ThermalCoefficients(**filled)

    filled = {}
    for name in _MUSHY_FIELDS:
        value = getattr(mushy, name)
        if name == unknown:
            if value is not None:
                raise ValidationError(
                    f"coefficient {name!r} is declared unknown but a value {value!r} was supplied"
                )
            filled[name] = None
        else:
            if value is None:
                raise ValidationError(f"coefficient {name!r} is required but missing")
            filled[name] = _check_positive(name, value)
            if math.isinf(filled[name]):
                raise ValidationError(f"coefficient {name!r} must be finite, got {value!r}")
    if filled["epsilon"] is not None and not filled["epsilon"] < 1.0:
        raise ValidationError(f"epsilon must lie strictly inside (0, 1), got {mushy.epsilon!r}")
    mushy_n = MushyCoefficients(**filled)

    q0 = _check_positive("q0", boundary.q0)
    d_inf = _check_positive("d_inf", boundary.d_inf)
    for name, value in (("q0", q0), ("d_inf", d_inf)):
        if math.isinf(value):
            raise ValidationError(f"{name} must be finite, got {value!r}")
    if face is Face.CONVECTIVE:
        if boundary.h0 is None:
            raise ValidationError("the convective problem requires h0")
        h0 = _check_positive("h0", boundary.h0)  # +inf allowed: Dirichlet limit
    else:
        h0 = None  # ignored for the Dirichlet problem
    boundary_n = BoundaryData(q0=q0, d_inf=d_inf, h0=h0)

    return ProblemInstance(face=face, case=case, thermal=thermal_n, mushy=mushy_n, boundary=boundary_n)
