"""Pydantic schemas for the domain types and data validation."""

import math
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

CUT_TOL = 1e-12


def is_multiple_of_two_pi(angle: float, tol: float = CUT_TOL) -> bool:
    """Return True when angle lies within tol (in turns) of 2*pi*Z."""
    turns = angle / (2.0 * math.pi)
    return abs(turns - round(turns)) < tol


# Branch Schemas
class BranchConfig(BaseModel):
    """The pair (phi, phi') fixing the principal argument range and both cuts."""

    model_config = ConfigDict(frozen=True)

    phi: float = Field(
        default=-math.pi,
        description="Cut angle in the w-plane; arguments are taken in [phi, phi + 2*pi)",
    )
    phi_prime: float = Field(
        default=0.0,
        description="Cut angle in the z-plane; the z-cut is 1 + r*exp(i*phi_prime), r >= 0",
    )

    @field_validator("phi")
    @classmethod
    def _phi_off_lattice(cls, value: float) -> float:
        if not math.isfinite(value) or is_multiple_of_two_pi(value):
            raise ValueError("phi must be a finite real outside 2*pi*Z")
        return value

    @field_validator("phi_prime")
    @classmethod
    def _phi_prime_right_half(cls, value: float) -> float:
        if not math.isfinite(value) or math.cos(value) < -CUT_TOL:
            raise ValueError("phi_prime must satisfy Re(exp(i*phi_prime)) >= 0")
        return value

    @classmethod
    def paired(cls, phi: float) -> "BranchConfig":
        """Build the config whose z-cut follows the w-cut direction.

        Uses phi' = phi when Re(e^{i phi}) >= 0 and phi' = phi + pi otherwise,
        reduced into (-pi, pi].

        Args:
            phi: Cut angle in the w-plane

        Returns:
            A BranchConfig with the paired z-cut
        """
        prime = phi if math.cos(phi) >= 0.0 else phi + math.pi
        prime = math.remainder(prime, 2.0 * math.pi)
        if prime <= -math.pi:
            prime += 2.0 * math.pi
        return cls(phi=phi, phi_prime=prime)


class DomainClass(BaseModel):
    """Which domain of (D1) a point inhabits, plus excluded and pole flags."""

    model_config = ConfigDict(frozen=True)

    variant: Literal["D1_full", "D1_w_on_cut", "D1_z_on_cut", "D1_both_on_cut"] = Field(
        description="Domain variant fixed by membership of w in l_phi and of z in l'_phi'"
    )
    excluded: bool = Field(default=False, description="w is a nonpositive integer")
    pole: bool = Field(default=False, description="z = 1 and s = 1")


# Numerics Schemas
class QuadResult(BaseModel):
    """Result of one adaptive quadrature."""

    value: complex = Field(description="Value of the integral")
    abs_err_est: float = Field(ge=0.0, description="Estimated absolute error")
    evaluations: int = Field(ge=0, description="Number of integrand evaluations")


# Evaluation Schemas
class EvalParams(BaseModel):
    """Free constants of the continuation formula and the tolerances."""

    alpha: float = Field(ge=1.0, description="Split point of the integral, alpha >= 1")
    N: int = Field(ge=0, description="Length of the explicit head sum")
    m: int = Field(ge=0, description="Order of the Taylor subtraction")
    eps: Optional[float] = Field(
        default=None,
        gt=0.0,
        description="Contour lift for L_eps; chosen automatically when omitted",
    )
    quad_tol: float = Field(default=1e-12, gt=0.0, description="Relative tolerance of the quadratures and of the continuation value")
    series_tol: float = Field(default=1e-12, gt=0.0, description="Relative series tolerance")


class EvalResult(BaseModel):
    """One evaluation of the Lerch zeta function."""

    value: complex = Field(description="Value of Phi(z, s, w)")
    abs_err_est: float = Field(ge=0.0, description="Combined absolute error estimate")
    method: Literal["series", "continuation", "special_value", "closed_form"] = Field(
        description="Evaluation route"
    )
    domain: DomainClass = Field(description="Domain classification of (z, s, w)")
    params: Optional[EvalParams] = Field(
        default=None, description="Continuation parameters as used (continuation only)"
    )
    warnings: List[str] = Field(default_factory=list, description="Conditioning warnings")


# Identity Schemas
Equation = Literal[
    "lerch",
    "apostol",
    "apostol_minus",
    "lerch_pair",
    "diff_diff_1",
    "diff_diff_2",
    "diff_diff_3",
    "diff_diff_4",
]


class FEReport(BaseModel):
    """Both sides of one functional equation at one point."""

    equation: Equation = Field(description="Which identity was checked")
    point: Tuple[complex, complex, complex] = Field(description="The point (a, s, w)")
    lhs: complex = Field(description="Left hand side")
    rhs: complex = Field(description="Right hand side")
    residual: complex = Field(description="lhs - rhs as computed")
    in_domain: bool = Field(description="Whether the point lies in the proven domain")

    @classmethod
    def build(
        cls,
        equation: Equation,
        point: Tuple[complex, complex, complex],
        lhs: complex,
        rhs: complex,
        in_domain: bool,
    ) -> "FEReport":
        """Create a report, computing the residual from both sides."""
        return cls(
            equation=equation,
            point=point,
            lhs=lhs,
            rhs=rhs,
            residual=lhs - rhs,
            in_domain=in_domain,
        )

    @property
    def scaled_residual(self) -> float:
        """|residual| / (1 + |lhs|)."""
        return abs(self.residual) / (1.0 + abs(self.lhs))


class SuiteReport(BaseModel):
    """Outcome of one self-test suite."""

    name: str = Field(description="Suite name")
    passed: bool = Field(description="Whether every check in the suite passed")
    worst: float = Field(ge=0.0, description="Worst observed discrepancy")
    threshold: float = Field(gt=0.0, description="Allowed discrepancy")
    checks: int = Field(ge=0, description="Number of individual checks")
    detail: str = Field(default="", description="Location of the worst discrepancy")


# CLI Schemas
class CliConfig(BaseModel):
    """Options shared by every CLI command."""

    phi: float = Field(default=-math.pi, description="Cut angle in the w-plane")
    phi_prime: float = Field(default=0.0, description="Cut angle in the z-plane")
    alpha: Optional[float] = Field(default=None, ge=1.0, description="Override for alpha")
    N: Optional[int] = Field(default=None, ge=0, description="Override for N")
    m: Optional[int] = Field(default=None, ge=0, description="Override for m")
    tol: float = Field(default=1e-12, gt=0.0, description="Target tolerance")
    seed: int = Field(default=0, description="Seed for pseudo-random sampling")
    format: Literal["text", "json", "csv"] = Field(default="text", description="Output format")

    def branch(self) -> BranchConfig:
        """The BranchConfig described by phi and phi_prime."""
        return BranchConfig(phi=self.phi, phi_prime=self.phi_prime)
